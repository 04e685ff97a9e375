#include "spincode/spherical_tensor.hpp"

#include <catch2/catch_amalgamated.hpp>

#include <random>

using namespace spincode;

namespace {
HalfInt h2(std::int64_t t) { return HalfInt::from_twice(t); }
} // namespace

TEST_CASE("rank 0 is the normalized identity") {
    for (std::int64_t tj : {1, 4, 11}) {
        const HalfInt j = h2(tj);
        SphericalTensor t(j, 0, 0);
        for (std::int64_t c = 0; c < t.dim(); ++c) {
            const auto e = t.entry_exact(t.m_of_index(c));
            CHECK(e == SignedSqrtRational(1, BigRational(1, tj + 1)));
        }
    }
}

TEST_CASE("rank 1 component 0 is the normalized J_z") {
    for (std::int64_t tj : {3, 7, 12}) {
        const HalfInt j = h2(tj);
        SphericalTensor t(j, 1, 0);
        // oracle: J_z has diagonal entries m; its Frobenius norm comes from
        // the explicit sum over the spectrum
        BigRational norm2 = 0;
        for (std::int64_t tm = -tj; tm <= tj; tm += 2)
            norm2 += BigRational(tm * tm, 4);
        for (std::int64_t c = 0; c < t.dim(); ++c) {
            const HalfInt m = t.m_of_index(c);
            const auto e = t.entry_exact(m);
            const BigRational m_rat(m.twice(), 2);
            CHECK(e.sign() == (m.twice() > 0 ? 1 : (m.twice() < 0 ? -1 : 0)));
            CHECK(e.radicand() == m_rat * m_rat / norm2);
            // closed form sqrt(3/((2j+1) j (j+1))) * m
            const double scale = std::sqrt(3.0 / ((tj + 1) * (tj / 2.0) * (tj / 2.0 + 1)));
            CHECK(std::abs(e.to_double() - scale * m.to_double()) < 1e-15);
        }
    }
}

TEST_CASE("trace orthonormality across all ranks for j <= 15/2") {
    for (std::int64_t tj = 0; tj <= 15; ++tj) {
        const HalfInt j = h2(tj);
        std::vector<SphericalTensor> tensors;
        for (int k = 0; k <= tj; ++k)
            for (int q = -k; q <= k; ++q)
                tensors.emplace_back(j, k, q);
        for (const auto& a : tensors)
            for (const auto& b : tensors) {
                const double want = (a.k() == b.k() && a.q() == b.q()) ? 1.0 : 0.0;
                REQUIRE(std::abs(trace_inner(a, b) - want) < 1e-12);
            }
    }
}

TEST_CASE("adjoint and reality relations hold exactly") {
    for (std::int64_t tj : {2, 5, 15}) {
        const HalfInt j = h2(tj);
        for (int k = 0; k <= std::min<std::int64_t>(tj, 6); ++k)
            for (int q = -k; q <= k; ++q) {
                SphericalTensor t(j, k, q);
                SphericalTensor tneg(j, k, -q);
                for (std::int64_t c = 0; c < t.dim(); ++c) {
                    const HalfInt m = t.m_of_index(c);
                    const HalfInt mq = m + HalfInt(q);
                    if (mq.abs() > j)
                        continue;
                    // (T^k_q)^dagger entry at (m, m+q) vs (-1)^q T^k_{-q}
                    auto rhs = tneg.entry_exact(mq);
                    if (q % 2)
                        rhs = -rhs;
                    REQUIRE(t.entry_exact(m) == rhs);
                }
            }
    }
}

TEST_CASE("single nonzero entry per column at the q-shifted row") {
    SphericalTensor t(h2(7), 3, 2);
    const auto dense = t.dense();
    const auto n = static_cast<std::size_t>(t.dim());
    for (std::size_t c = 0; c < n; ++c)
        for (std::size_t r = 0; r < n; ++r)
            if (r + 2 != c)
                CHECK(dense[r * n + c] == 0.0);
}

TEST_CASE("range errors") {
    CHECK_THROWS_AS(SphericalTensor(h2(3), 4, 0), std::out_of_range);
    CHECK_THROWS_AS(SphericalTensor(h2(3), 2, 3), std::out_of_range);
    CHECK_THROWS_AS(SphericalTensor(h2(3), -1, 0), std::out_of_range);
}

TEST_CASE("product decomposition: identity factor") {
    const HalfInt j = h2(5);
    SphericalTensor t0(j, 0, 0);
    SphericalTensor t(j, 2, 1);
    const auto coeffs = decompose_product(t0, t);
    REQUIRE(coeffs.size() == 1);
    CHECK(std::abs(coeffs.at(2) - 1.0 / std::sqrt(6.0)) < 1e-14);
    CHECK(product_reconstruction_residual(t0, t, coeffs) < 1e-14);
}

TEST_CASE("product decomposition: T^1_0 T^1_0 at j = 1") {
    const HalfInt j(1);
    SphericalTensor t(j, 1, 0);
    const auto coeffs = decompose_product(t, t);
    for (const auto& [k, c] : coeffs) {
        CHECK(k >= 0);
        CHECK(k <= 2);
    }
    CHECK(product_reconstruction_residual(t, t, coeffs) < 1e-12);
}

TEST_CASE("product decomposition closes for random rank pairs at j = 7/2") {
    const HalfInt j = h2(7);
    std::mt19937_64 rng(2024);
    for (int trial = 0; trial < 40; ++trial) {
        const int k1 = static_cast<int>(rng() % 8);
        const int k2 = static_cast<int>(rng() % 8);
        const int q1 = static_cast<int>(rng() % (2 * k1 + 1)) - k1;
        const int q2 = static_cast<int>(rng() % (2 * k2 + 1)) - k2;
        SphericalTensor t1(j, k1, q1), t2(j, k2, q2);
        const auto coeffs = decompose_product(t1, t2);
        REQUIRE(product_reconstruction_residual(t1, t2, coeffs) < 1e-12);
    }
}

TEST_CASE("mismatched spins are rejected") {
    SphericalTensor a(h2(3), 1, 0);
    SphericalTensor b(h2(5), 1, 0);
    CHECK_THROWS_AS(decompose_product(a, b), std::invalid_argument);
    CHECK_THROWS_AS(trace_inner(a, b), std::invalid_argument);
}
