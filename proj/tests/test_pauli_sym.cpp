#include "spincode/pauli_sym.hpp"

#include <catch2/catch_amalgamated.hpp>

#include <random>

using namespace spincode;

namespace {

Complex coeff_on(const DenseOp& basis, const DenseOp& op) {
    Complex num = 0;
    double den = 0;
    for (std::size_t i = 0; i < basis.mat.size(); ++i) {
        num += std::conj(basis.mat[i]) * op.mat[i];
        den += std::norm(basis.mat[i]);
    }
    return num / den;
}

CVec random_pi_state(int n, std::mt19937_64& rng) {
    std::vector<double> wamp(static_cast<std::size_t>(n + 1));
    double norm2 = 0;
    for (auto& a : wamp) {
        a = (static_cast<double>(rng() >> 11) * 0x1.0p-53) - 0.5;
        norm2 += a * a;
    }
    std::map<int, double> amps;
    for (int w = 0; w <= n; ++w)
        amps[w] = wamp[static_cast<std::size_t>(w)] / std::sqrt(norm2);
    return dense_codeword(n, amps);
}

} // namespace

TEST_CASE("weight-1 symmetrization on one qubit is the error itself") {
    const DenseOp op = sym_error_dense(PauliString::parse("X"));
    CHECK(op.at(0, 1) == Complex(1, 0));
    CHECK(op.at(1, 0) == Complex(1, 0));
    CHECK(op.at(0, 0) == Complex(0, 0));
    const DenseOp y = sym_error_dense(PauliString::parse("Y"));
    CHECK(y.at(1, 0) == Complex(0, 1));
    CHECK(y.at(0, 1) == Complex(0, -1));
}

TEST_CASE("spherical error expansion of XYZ") {
    const DenseOp sph = sph_error_dense(PauliString::parse("XYZ"));
    const DenseOp symXYZ = sym_error_dense(PauliString::parse("XYZ"));
    const DenseOp symXXI = sym_error_dense(PauliString::parse("XXI"));
    const DenseOp symYYI = sym_error_dense(PauliString::parse("YYI"));
    const DenseOp symZZI = sym_error_dense(PauliString::parse("ZZI"));
    const DenseOp symIII = sym_error_dense(PauliString::parse("III"));
    CHECK(std::abs(coeff_on(symXYZ, sph) - Complex(6.0 / 27, 0)) < 1e-12);
    CHECK(std::abs(coeff_on(symXXI, sph) - Complex(0, 6.0 / 27)) < 1e-12);
    CHECK(std::abs(coeff_on(symYYI, sph) - Complex(0, -6.0 / 27)) < 1e-12);
    CHECK(std::abs(coeff_on(symZZI, sph) - Complex(0, 6.0 / 27)) < 1e-12);
    CHECK(std::abs(coeff_on(symIII, sph) - Complex(0, 3.0 / 27)) < 1e-12);
}

TEST_CASE("spherical errors expand in symmetrized errors of no greater weight") {
    for (int n = 3; n <= 5; ++n) {
        const std::vector<std::string> seeds = {"XYZ", "XXZ", "ZZY", "XY", "Z"};
        for (const auto& seed : seeds) {
            if (static_cast<int>(seed.size()) > n)
                continue;
            std::string letters = seed + std::string(static_cast<std::size_t>(n) - seed.size(), 'I');
            const PauliString e = PauliString::parse(letters);
            const DenseOp sph = sph_error_dense(e);
            // subtract the projection onto every class of weight <= wt(E)
            CVec remainder = sph.mat;
            Complex self_coeff = 0;
            for (int nx = 0; nx <= e.weight(); ++nx)
                for (int ny = 0; ny + nx <= e.weight(); ++ny)
                    for (int nz = 0; nz + ny + nx <= e.weight(); ++nz) {
                        if (nx + ny + nz > n)
                            continue;
                        std::string rep_letters(static_cast<std::size_t>(nx), 'X');
                        rep_letters += std::string(static_cast<std::size_t>(ny), 'Y');
                        rep_letters += std::string(static_cast<std::size_t>(nz), 'Z');
                        rep_letters += std::string(static_cast<std::size_t>(n - nx - ny - nz), 'I');
                        const DenseOp basis = sym_error_dense(PauliString::parse(rep_letters));
                        const Complex c = coeff_on(basis, sph);
                        if (nx == PauliClass::of(e).nx && ny == PauliClass::of(e).ny &&
                            nz == PauliClass::of(e).nz)
                            self_coeff = c;
                        for (std::size_t i = 0; i < remainder.size(); ++i)
                            remainder[i] -= c * basis.mat[i];
                    }
            double leftover = 0;
            for (const auto& v : remainder)
                leftover = std::max(leftover, std::abs(v));
            REQUIRE(leftover < 1e-10);
            REQUIRE(self_coeff.real() > 1e-9); // strictly positive fraction
            REQUIRE(std::abs(self_coeff.imag()) < 1e-12);
        }
    }
}

TEST_CASE("permutation-invariant states cannot tell E from Sym(E)") {
    std::mt19937_64 rng(4242);
    const int n = 6;
    const CVec u = random_pi_state(n, rng);
    const CVec v = random_pi_state(n, rng);
    for (int trial = 0; trial < 50; ++trial) {
        std::string letters(static_cast<std::size_t>(n), 'I');
        const int w = 1 + static_cast<int>(rng() % 3);
        std::vector<int> sites;
        while (static_cast<int>(sites.size()) < w) {
            const int s = static_cast<int>(rng() % n);
            if (std::find(sites.begin(), sites.end(), s) == sites.end())
                sites.push_back(s);
        }
        const char alphabet[3] = {'X', 'Y', 'Z'};
        for (int site : sites)
            letters[static_cast<std::size_t>(site)] = alphabet[rng() % 3];
        const PauliString e = PauliString::parse(letters);
        const CVec ev = apply_pauli(e, v);
        Complex direct = 0;
        for (std::size_t i = 0; i < u.size(); ++i)
            direct += std::conj(u[i]) * ev[i];
        const CVec sv = sym_apply(n, PauliClass::of(e), v);
        Complex symmed = 0;
        for (std::size_t i = 0; i < u.size(); ++i)
            symmed += std::conj(u[i]) * sv[i];
        REQUIRE(std::abs(direct - symmed) < 1e-12);
    }
}

TEST_CASE("combinatorial symmetrized matrix elements") {
    SECTION("identity class is the Kronecker delta") {
        for (int wb = 0; wb <= 5; ++wb)
            for (int wk = 0; wk <= 5; ++wk) {
                const Complex got = sym_matrix_element(5, wb, PauliClass{0, 0, 0}, wk);
                CHECK(std::abs(got - Complex(wb == wk ? 1.0 : 0.0, 0)) < 1e-15);
            }
    }
    SECTION("single Z at n = 11, w = 8") {
        const Complex got = sym_matrix_element(11, 8, PauliClass{0, 0, 1}, 8);
        CHECK(got.real() == Catch::Approx(-5.0 / 11.0).epsilon(1e-15));
        CHECK(got.imag() == 0.0);
    }
    SECTION("inconsistent weights give zero, not an error") {
        CHECK(sym_matrix_element(5, 0, PauliClass{1, 0, 0}, 5) == Complex{});
        CHECK(sym_matrix_element(5, 2, PauliClass{0, 0, 1}, 3) == Complex{});
        CHECK(sym_matrix_element(5, -1, PauliClass{0, 0, 1}, 3) == Complex{});
    }
    SECTION("agreement with the dense oracle for weights < 5 at n <= 6") {
        for (int n = 1; n <= 6; ++n) {
            std::vector<CVec> dicke;
            for (int w = 0; w <= n; ++w) {
                const auto v = dicke_dense(n, w);
                dicke.emplace_back(v.begin(), v.end());
            }
            for (int w = 1; w < 5; ++w) {
                if (w > n)
                    continue;
                for (int nx = 0; nx <= w; ++nx)
                    for (int ny = 0; ny + nx <= w; ++ny) {
                        const PauliClass cls{nx, ny, w - nx - ny};
                        for (int wk = 0; wk <= n; ++wk) {
                            const CVec sv = sym_apply(n, cls, dicke[static_cast<std::size_t>(wk)]);
                            for (int wb = 0; wb <= n; ++wb) {
                                Complex dense = 0;
                                for (std::size_t i = 0; i < sv.size(); ++i)
                                    dense += std::conj(dicke[static_cast<std::size_t>(wb)][i]) * sv[i];
                                const Complex fast = sym_matrix_element(n, wb, cls, wk);
                                REQUIRE(std::abs(dense - fast) < 1e-10);
                            }
                        }
                    }
            }
        }
    }
}

TEST_CASE("pauli string validation") {
    CHECK_THROWS_AS(PauliString::parse("XQZ"), std::invalid_argument);
    CHECK(PauliString::parse("IXYZ").weight() == 3);
    CHECK(PauliClass::of(PauliString::parse("XXYZI")).nx == 2);
}
