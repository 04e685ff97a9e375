#include "spincode/kl_engine.hpp"

#include "spincode/search.hpp"

#include "oracles.hpp"

#include <catch2/catch_amalgamated.hpp>

#include <random>

using namespace spincode;

namespace {

HalfInt h2(std::int64_t t) { return HalfInt::from_twice(t); }

SpinCode eleven_qubit_spin_code() {
    // delta_3 lattice of the degree-8 group at j = 11/2
    AmpMap amp0;
    amp0[h2(5)] = std::sqrt(11.0 / 16.0);
    amp0[h2(-11)] = std::sqrt(5.0 / 16.0);
    return make_spin_code(Irrep(4, 3), h2(11), amp0);
}

SpinCode random_covariant_code(const Irrep& rep, HalfInt j, std::mt19937_64& rng) {
    const auto lattice = support_lattice(rep, j);
    REQUIRE(!lattice.empty());
    AmpMap amp0;
    double norm2 = 0;
    for (const auto& m : lattice) {
        const double a = (static_cast<double>(rng() >> 11) * 0x1.0p-53) * 2.0 - 1.0;
        amp0[m] = a;
        norm2 += a * a;
    }
    for (auto& [m, a] : amp0)
        a /= std::sqrt(norm2);
    return make_spin_code(rep, j, amp0);
}

} // namespace

TEST_CASE("reduced condition lists") {
    SECTION("single on-diagonal condition for (b=4, a=3, d=3)") {
        const auto conds = reduced_conditions(Irrep(4, 3), 3);
        REQUIRE(conds.size() == 1);
        CHECK(conds[0].kind == ConditionKind::OnDiag);
        CHECK(conds[0].k == 1);
        CHECK(conds[0].q == 0);
    }
    SECTION("d = 1 has no conditions") {
        CHECK(reduced_conditions(Irrep(4, 3), 1).empty());
    }
    SECTION("degree-2 group at d = 3") {
        const auto conds = reduced_conditions(Irrep(1, 1), 3);
        int on = 0, off = 0;
        for (const auto& c : conds) {
            if (c.kind == ConditionKind::OnDiag) {
                ++on;
                CHECK(c.q == 0);
            } else {
                ++off;
                CHECK(std::abs(c.q) == 1);
            }
            CHECK(c.k == 1);
        }
        CHECK(on == 1);
        CHECK(off == 2);
    }
    SECTION("even d is rejected") {
        CHECK_THROWS_AS(reduced_conditions(Irrep(2, 1), 4), std::invalid_argument);
    }
}

TEST_CASE("condition counts match the list, the enumeration oracle, and the closed form") {
    for (int b = 1; b <= 12; ++b) {
        for (int a = 1; a <= b; ++a) {
            const Irrep rep(b, a);
            for (int d = 1; d <= 21; d += 2) {
                const auto [on, off] = count_conditions(rep, d);
                const auto [on_oracle, off_oracle] = oracles::count_by_enumeration(rep, d);
                REQUIRE(on == on_oracle);
                REQUIRE(off == off_oracle);
                const auto conds = reduced_conditions(rep, d);
                std::int64_t on_list = 0, off_list = 0;
                for (const auto& c : conds)
                    (c.kind == ConditionKind::OnDiag ? on_list : off_list)++;
                REQUIRE(on == on_list);
                REQUIRE(off == off_list);
                REQUIRE(count_conditions_closed(rep, d) == on + off);
            }
        }
    }
}

TEST_CASE("counting examples") {
    CHECK(count_conditions(Irrep(1, 1), 3) == std::pair<std::int64_t, std::int64_t>{1, 2});
    CHECK(count_conditions(Irrep(4, 3), 3) == std::pair<std::int64_t, std::int64_t>{1, 0});
    CHECK(count_conditions(Irrep(4, 3), 5) == std::pair<std::int64_t, std::int64_t>{2, 1});
    CHECK(count_conditions_closed(Irrep(4, 3), 1) == 0);
}

TEST_CASE("degree-2 specialization: nu = (3/2) t (t+1)") {
    for (std::int64_t t = 0; t <= 10; ++t)
        CHECK(count_conditions_closed(Irrep(1, 1), static_cast<int>(2 * t + 1)) == 3 * t * (t + 1) / 2);
}

TEST_CASE("closed-form symmetry nu(a) = nu(b+1-a)") {
    for (int b = 1; b <= 12; ++b)
        for (int a = 1; a <= b; ++a)
            for (int d = 1; d <= 21; d += 2)
                REQUIRE(count_conditions_closed(Irrep(b, a), d) ==
                        count_conditions_closed(Irrep(b, b + 1 - a), d));
}

TEST_CASE("mod-bracket correction stays within its crude bounds") {
    for (int b = 1; b <= 12; ++b)
        for (int a = 1; a <= b; ++a)
            for (int d = 1; d <= 21; d += 2) {
                const auto c2b = closed_form_correction_times_2b(Irrep(b, a), d);
                REQUIRE(c2b >= 0);
                REQUIRE(c2b <= 6 * b * b); // c <= 3b
            }
}

TEST_CASE("full KL check on the ((11,2,3)) spin preimage") {
    const SpinCode code = eleven_qubit_spin_code();
    SECTION("passes at its distance") {
        const auto report = kl_check_full(code, 3, 1e-12);
        CHECK(report.pass);
        CHECK(report.max_residual < 1e-12);
    }
    SECTION("fails at d = 4 with a rank-3 residual above 1e-3") {
        const auto report = kl_check_full(code, 4, 1e-3);
        CHECK_FALSE(report.pass);
        double worst_rank3 = 0;
        for (const auto& c : report.conditions)
            if (c.k == 3)
                worst_rank3 = std::max(worst_rank3, c.residual);
        CHECK(worst_rank3 > 1e-3);
    }
    SECTION("d = 1 passes for any normalized pair") {
        CHECK(kl_check_full(code, 1, 1e-12).pass);
    }
    SECTION("rank overflow is rejected") {
        CHECK_THROWS_AS(kl_check_full(code, 13, 1e-12), std::out_of_range);
    }
}

TEST_CASE("even ranks vanish identically for real mirror-symmetric codes") {
    std::mt19937_64 rng(11);
    const std::vector<std::pair<Irrep, HalfInt>> instances = {
        {Irrep(1, 1), h2(9)}, {Irrep(2, 2), h2(13)}, {Irrep(3, 2), h2(15)}, {Irrep(4, 3), h2(21)}};
    for (const auto& [rep, j] : instances) {
        const SpinCode code = random_covariant_code(rep, j, rng);
        const auto report = kl_check_full(code, 5, 1e-12);
        for (const auto& c : report.conditions)
            if (c.k % 2 == 0)
                REQUIRE(c.residual < 1e-12);
    }
}

TEST_CASE("negative-q on-diagonal conditions mirror the positive ones") {
    std::mt19937_64 rng(5);
    const Irrep rep(1, 1);
    const HalfInt j = h2(9);
    for (int trial = 0; trial < 5; ++trial) {
        const SpinCode code = random_covariant_code(rep, j, rng);
        for (int k = 1; k <= 4; ++k) {
            for (int q = 2; q <= k; q += 2) { // q = 0 mod 2b with b = 1
                SphericalTensor tp(j, k, q), tn(j, k, -q);
                const double rp = tp.sandwich(code.amp0, code.amp0) - tp.sandwich(code.amp1, code.amp1);
                const double rn = tn.sandwich(code.amp0, code.amp0) - tn.sandwich(code.amp1, code.amp1);
                REQUIRE(std::abs(std::abs(rp) - std::abs(rn)) < 1e-12);
            }
        }
    }
}

TEST_CASE("reduced pass implies full pass (covariance reduction soundness)") {
    const SpinCode code = eleven_qubit_spin_code();
    const auto reduced = kl_check_reduced(code, 3, 1e-12);
    REQUIRE(reduced.pass);
    const auto full = kl_check_full(code, 3, 1e-9);
    CHECK(full.pass);

    // a searched distance-5 instance
    SearchConfig cfg;
    cfg.rng_seed = 1;
    cfg.restarts = 128;
    const SearchResult res = search_code(Irrep(4, 3), 5, cfg);
    REQUIRE(res.found());
    REQUIRE(kl_check_reduced(*res.spin, 5, 1e-12).pass);
    CHECK(kl_check_full(*res.spin, 5, 1e-9).pass);

    // and a non-code must fail the reduced check
    std::mt19937_64 rng(23);
    const SpinCode bad = random_covariant_code(Irrep(4, 3), h2(11), rng);
    CHECK_FALSE(kl_check_reduced(bad, 3, 1e-12).pass);
}
