#include "spincode/search.hpp"

#include "spincode/families.hpp"
#include "spincode/multiqubit_kl.hpp"

#include <catch2/catch_amalgamated.hpp>

#include <cstdlib>

using namespace spincode;

namespace {
HalfInt h2(std::int64_t t) { return HalfInt::from_twice(t); }
} // namespace

TEST_CASE("quadratic system for the ((11,2,3)) instance") {
    const QuadraticSystem sys = build_system(Irrep(4, 3), h2(11), 3);
    REQUIRE(sys.dim() == 2);
    REQUIRE(sys.forms.size() == 1);
    const auto& B = sys.forms[0];
    // single form proportional to diag(5/2, -11/2)
    CHECK(B.at(0, 1) == 0.0);
    CHECK(B.at(1, 0) == 0.0);
    CHECK(B.at(0, 0) * (-11.0 / 2.0) == Catch::Approx(B.at(1, 1) * (5.0 / 2.0)).epsilon(1e-12));
    // the closed-form amplitudes are a root
    const std::vector<double> x = {std::sqrt(11.0 / 16.0), std::sqrt(5.0 / 16.0)};
    CHECK(std::abs(B.quad(x)) < 1e-15);
}

TEST_CASE("d = 1 gives an empty system") {
    const QuadraticSystem sys = build_system(Irrep(4, 3), h2(11), 1);
    CHECK(sys.forms.empty());
    CHECK(sys.dim() == 2);
}

TEST_CASE("((27,2,5)) instance has nu = 3 forms in mu = 4 variables") {
    const QuadraticSystem sys = build_system(Irrep(4, 3), h2(27), 5);
    CHECK(sys.dim() == 4);
    CHECK(sys.forms.size() == 3);
}

TEST_CASE("empty lattice is rejected") {
    CHECK_THROWS_AS(build_system(Irrep(4, 3), h2(1), 3), std::invalid_argument);
}

TEST_CASE("solver finds the two-point root") {
    const QuadraticSystem sys = build_system(Irrep(4, 3), h2(11), 3);
    SearchConfig cfg;
    cfg.rng_seed = 7;
    cfg.restarts = 16;
    const SearchOutcome out = solve(sys, cfg);
    REQUIRE(out.found());
    CHECK(out.solution->residual < 1e-15);
    CHECK(out.solution->amplitudes[0] == Catch::Approx(std::sqrt(11.0 / 16.0)).epsilon(1e-10));
    CHECK(std::abs(out.solution->amplitudes[1]) == Catch::Approx(std::sqrt(5.0 / 16.0)).epsilon(1e-10));
    // canonical sign gauge: leading amplitude positive
    CHECK(out.solution->amplitudes[0] > 0);
}

TEST_CASE("totally definite form has no root on the sphere") {
    QuadraticSystem sys{Irrep(1, 1), h2(9), 3, support_lattice(Irrep(1, 1), h2(3)), {}, {}};
    SymMat eye(static_cast<int>(sys.lattice.size()));
    for (int i = 0; i < eye.n; ++i)
        eye.at(i, i) = 1.0;
    sys.forms.push_back(eye);
    SearchConfig cfg;
    cfg.restarts = 8;
    const SearchOutcome out = solve(sys, cfg);
    CHECK_FALSE(out.found());
    CHECK(out.best_residual == Catch::Approx(1.0).epsilon(1e-9));
    CHECK(out.restarts_used == 8);
}

TEST_CASE("same seed reproduces the identical amplitude vector") {
    const QuadraticSystem sys = build_system(Irrep(4, 3), h2(27), 5);
    SearchConfig cfg;
    cfg.rng_seed = 123;
    cfg.restarts = 32;
    const SearchOutcome a = solve(sys, cfg);
    const SearchOutcome b = solve(sys, cfg);
    REQUIRE(a.found());
    REQUIRE(b.found());
    REQUIRE(a.solution->amplitudes.size() == b.solution->amplitudes.size());
    for (std::size_t i = 0; i < a.solution->amplitudes.size(); ++i)
        REQUIRE(a.solution->amplitudes[i] == b.solution->amplitudes[i]); // bit-for-bit
    CHECK(a.solution->restarts_used == b.solution->restarts_used);

    // thread count must not change the outcome
    setenv("SPINCODE_THREADS", "1", 1);
    const SearchOutcome serial = solve(sys, cfg);
    unsetenv("SPINCODE_THREADS");
    REQUIRE(serial.found());
    for (std::size_t i = 0; i < a.solution->amplitudes.size(); ++i)
        REQUIRE(a.solution->amplitudes[i] == serial.solution->amplitudes[i]);
}

TEST_CASE("best residual is nonincreasing in the restart budget") {
    // an unsatisfiable system: mu = nu at one spin below the heuristic
    const QuadraticSystem sys = build_system(Irrep(1, 1), h2(5), 3);
    REQUIRE(sys.dim() == 3);
    REQUIRE(sys.forms.size() == 3);
    double prev = std::numeric_limits<double>::infinity();
    for (int budget : {1, 2, 4, 8, 16}) {
        SearchConfig cfg;
        cfg.rng_seed = 9;
        cfg.restarts = budget;
        const SearchOutcome out = solve(sys, cfg);
        REQUIRE_FALSE(out.found());
        REQUIRE(out.best_residual <= prev + 1e-18);
        prev = out.best_residual;
    }
    CHECK(prev > 1e-9); // clearly away from a root
}

TEST_CASE("full pipeline reproduces the ((11,2,3)) code") {
    SearchConfig cfg;
    cfg.rng_seed = 42;
    cfg.restarts = 64;
    const SearchResult res = search_code(Irrep(4, 3), 3, cfg);
    REQUIRE(res.found());
    CHECK(res.j == h2(11));
    CHECK(res.mu == 2);
    CHECK(res.nu == 1);
    CHECK(res.multiqubit->n == 11);
    // same code as the closed form, up to the documented sign gauge
    const MultiqubitCode reference = code1(4);
    for (const auto& [w, a] : reference.amp0)
        CHECK(std::abs(res.multiqubit->amp0.at(w)) == Catch::Approx(std::abs(a)).epsilon(1e-10));
}

TEST_CASE("search finds a ((19,2,5)) code on the degree-2 lattice") {
    SearchConfig cfg;
    cfg.rng_seed = 3;
    cfg.restarts = 256;
    const SearchResult res = search_code(Irrep(1, 1), 5, cfg);
    REQUIRE(res.found());
    CHECK(res.multiqubit->n == 19);
    CHECK(res.outcome.solution->residual < 1e-12);
    const KLReport sym = multiqubit_kl_check(*res.multiqubit, 5, KLMode::Symmetric, 1e-10);
    CHECK(sym.pass);
}

TEST_CASE("mu = nu spin admits no real solution") {
    SearchConfig cfg;
    cfg.rng_seed = 17;
    cfg.restarts = 64;
    const SearchResult res = search_code_at(Irrep(1, 1), 3, h2(5), cfg);
    CHECK_FALSE(res.found());
    CHECK(res.outcome.best_residual > 1e-9);
}

TEST_CASE("solution amplitudes stay on the unit sphere") {
    SearchConfig cfg;
    cfg.rng_seed = 5;
    cfg.restarts = 32;
    const SearchResult res = search_code(Irrep(2, 2), 3, cfg);
    REQUIRE(res.found());
    double norm2 = 0;
    for (const auto& a : res.outcome.solution->amplitudes)
        norm2 += a * a;
    CHECK(norm2 == Catch::Approx(1.0).epsilon(1e-12));
}
