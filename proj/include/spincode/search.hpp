#pragma once

#include "spincode/dicke.hpp"
#include "spincode/errors.hpp"
#include "spincode/parallel.hpp"
#include "spincode/quadratic_system.hpp"

#include <atomic>
#include <cmath>
#include <cstdint>
#include <optional>
#include <random>

namespace spincode {

struct SearchConfig {
    int restarts = 256;
    int max_iterations = 400;
    double tolerance = 1e-12;
    std::uint64_t rng_seed = 0;
};

struct Solution {
    std::vector<double> amplitudes; // unit norm, first nonzero positive
    double residual;                // sum_i (x^T B_i x)^2
    int restarts_used;
};

/// not-found carries the best achieved objective for diagnostics.
struct SearchOutcome {
    std::optional<Solution> solution;
    double best_residual = std::numeric_limits<double>::infinity();
    int restarts_used = 0;

    bool found() const { return solution.has_value(); }
};

namespace detail {

inline std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9E3779B97F4A7C15ull;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ull;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBull;
    return x ^ (x >> 31);
}

inline std::uint64_t restart_seed(std::uint64_t master, int index) {
    return splitmix64(master ^ splitmix64(static_cast<std::uint64_t>(index) + 1));
}

/// Uniform double in (0,1) from the top 53 bits; avoids the
/// implementation-defined std::distributions so runs are reproducible
/// everywhere.
inline double uniform01(std::mt19937_64& rng) {
    return (static_cast<double>(rng() >> 11) + 0.5) * 0x1.0p-53;
}

inline std::vector<double> random_unit_vector(std::mt19937_64& rng, int dim) {
    std::vector<double> x(static_cast<std::size_t>(dim));
    double norm2 = 0;
    while (true) {
        for (int i = 0; i < dim; i += 2) {
            // Box-Muller
            const double u = uniform01(rng), v = uniform01(rng);
            const double r = std::sqrt(-2.0 * std::log(u));
            x[static_cast<std::size_t>(i)] = r * std::cos(2 * M_PI * v);
            if (i + 1 < dim)
                x[static_cast<std::size_t>(i + 1)] = r * std::sin(2 * M_PI * v);
        }
        norm2 = 0;
        for (double c : x)
            norm2 += c * c;
        if (norm2 > 1e-12)
            break;
    }
    const double inv = 1.0 / std::sqrt(norm2);
    for (double& c : x)
        c *= inv;
    return x;
}

inline void normalize(std::vector<double>& x) {
    double n2 = 0;
    for (double c : x)
        n2 += c * c;
    const double inv = 1.0 / std::sqrt(n2);
    for (double& c : x)
        c *= inv;
}

inline double dot(const std::vector<double>& a, const std::vector<double>& b) {
    double acc = 0;
    for (std::size_t i = 0; i < a.size(); ++i)
        acc += a[i] * b[i];
    return acc;
}

/// Solves (A + lambda I) delta = -g for symmetric positive semidefinite A by
/// Gaussian elimination with partial pivoting. Returns false if singular.
inline bool solve_damped(std::vector<double> A, std::vector<double> g, double lambda, int n,
                         std::vector<double>& delta) {
    for (int i = 0; i < n; ++i)
        A[static_cast<std::size_t>(i * n + i)] += lambda;
    std::vector<double> rhs(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i)
        rhs[static_cast<std::size_t>(i)] = -g[static_cast<std::size_t>(i)];
    for (int col = 0; col < n; ++col) {
        int piv = col;
        for (int r = col + 1; r < n; ++r)
            if (std::abs(A[static_cast<std::size_t>(r * n + col)]) >
                std::abs(A[static_cast<std::size_t>(piv * n + col)]))
                piv = r;
        if (std::abs(A[static_cast<std::size_t>(piv * n + col)]) < 1e-300)
            return false;
        if (piv != col) {
            for (int c = 0; c < n; ++c)
                std::swap(A[static_cast<std::size_t>(col * n + c)], A[static_cast<std::size_t>(piv * n + c)]);
            std::swap(rhs[static_cast<std::size_t>(col)], rhs[static_cast<std::size_t>(piv)]);
        }
        const double inv = 1.0 / A[static_cast<std::size_t>(col * n + col)];
        for (int r = col + 1; r < n; ++r) {
            const double f = A[static_cast<std::size_t>(r * n + col)] * inv;
            if (f == 0)
                continue;
            for (int c = col; c < n; ++c)
                A[static_cast<std::size_t>(r * n + c)] -= f * A[static_cast<std::size_t>(col * n + c)];
            rhs[static_cast<std::size_t>(r)] -= f * rhs[static_cast<std::size_t>(col)];
        }
    }
    delta.assign(static_cast<std::size_t>(n), 0.0);
    for (int r = n - 1; r >= 0; --r) {
        double acc = rhs[static_cast<std::size_t>(r)];
        for (int c = r + 1; c < n; ++c)
            acc -= A[static_cast<std::size_t>(r * n + c)] * delta[static_cast<std::size_t>(c)];
        delta[static_cast<std::size_t>(r)] = acc / A[static_cast<std::size_t>(r * n + r)];
    }
    return true;
}

/// One local descent on the unit sphere: damped Gauss-Newton (Levenberg-
/// Marquardt) on the residual vector r_i = x^T B_i x with the Jacobian
/// projected to the tangent space and a renormalizing retraction; falls back
/// to a projected gradient step when the damped model stalls.
inline double local_descent(const QuadraticSystem& sys, std::vector<double>& x, int max_iterations) {
    const int n = sys.dim();
    const int nu = static_cast<int>(sys.forms.size());
    if (nu == 0)
        return 0.0;
    double lambda = 1e-3;
    double f = sys.objective(x);
    constexpr double kFloor = 1e-30;

    std::vector<double> jac(static_cast<std::size_t>(nu) * static_cast<std::size_t>(n));
    for (int iter = 0; iter < max_iterations && f > kFloor; ++iter) {
        // residuals and tangent-projected Jacobian rows 2 (B_i x) - (grad.x) x
        std::vector<double> r(static_cast<std::size_t>(nu));
        for (int i = 0; i < nu; ++i) {
            const auto bx = sys.forms[static_cast<std::size_t>(i)].apply(x);
            r[static_cast<std::size_t>(i)] = dot(x, bx);
            double radial = 0;
            for (int c = 0; c < n; ++c)
                radial += 2.0 * bx[static_cast<std::size_t>(c)] * x[static_cast<std::size_t>(c)];
            for (int c = 0; c < n; ++c)
                jac[static_cast<std::size_t>(i * n + c)] =
                    2.0 * bx[static_cast<std::size_t>(c)] - radial * x[static_cast<std::size_t>(c)];
        }
        // normal equations JtJ delta = -Jt r
        std::vector<double> jtj(static_cast<std::size_t>(n) * static_cast<std::size_t>(n), 0.0);
        std::vector<double> jtr(static_cast<std::size_t>(n), 0.0);
        for (int i = 0; i < nu; ++i) {
            for (int a = 0; a < n; ++a) {
                const double ja = jac[static_cast<std::size_t>(i * n + a)];
                jtr[static_cast<std::size_t>(a)] += ja * r[static_cast<std::size_t>(i)];
                for (int b2 = a; b2 < n; ++b2)
                    jtj[static_cast<std::size_t>(a * n + b2)] += ja * jac[static_cast<std::size_t>(i * n + b2)];
            }
        }
        for (int a = 0; a < n; ++a)
            for (int b2 = 0; b2 < a; ++b2)
                jtj[static_cast<std::size_t>(a * n + b2)] = jtj[static_cast<std::size_t>(b2 * n + a)];

        bool stepped = false;
        for (int attempt = 0; attempt < 24 && !stepped; ++attempt) {
            std::vector<double> delta;
            if (!solve_damped(jtj, jtr, lambda, n, delta)) {
                lambda *= 4;
                continue;
            }
            const double along = dot(delta, x);
            for (int c = 0; c < n; ++c)
                delta[static_cast<std::size_t>(c)] -= along * x[static_cast<std::size_t>(c)];
            std::vector<double> y = x;
            for (int c = 0; c < n; ++c)
                y[static_cast<std::size_t>(c)] += delta[static_cast<std::size_t>(c)];
            normalize(y);
            const double fy = sys.objective(y);
            if (fy < f) {
                x = std::move(y);
                f = fy;
                lambda = std::max(lambda / 3.0, 1e-14);
                stepped = true;
            } else {
                lambda *= 4;
            }
        }
        if (!stepped) {
            // gradient fallback with backtracking
            std::vector<double> grad(static_cast<std::size_t>(n), 0.0);
            for (int i = 0; i < nu; ++i)
                for (int c = 0; c < n; ++c)
                    grad[static_cast<std::size_t>(c)] +=
                        2.0 * r[static_cast<std::size_t>(i)] * jac[static_cast<std::size_t>(i * n + c)];
            double step = 1.0;
            bool improved = false;
            for (int bt = 0; bt < 40; ++bt, step *= 0.5) {
                std::vector<double> y = x;
                for (int c = 0; c < n; ++c)
                    y[static_cast<std::size_t>(c)] -= step * grad[static_cast<std::size_t>(c)];
                normalize(y);
                const double fy = sys.objective(y);
                if (fy < f) {
                    x = std::move(y);
                    f = fy;
                    improved = true;
                    break;
                }
            }
            if (!improved)
                break; // converged to a stationary point
            lambda = 1e-3;
        }
    }
    return f;
}

inline void canonicalize_sign(std::vector<double>& x) {
    for (double c : x) {
        if (std::abs(c) > 1e-12) {
            if (c < 0)
                for (double& v : x)
                    v = -v;
            return;
        }
    }
}

} // namespace detail

/// Minimizes sum_i (x^T B_i x)^2 over the unit sphere from uniformly random
/// starts. Restarts run as a parallel pool with per-restart sub-seeds; the
/// lowest-index success is returned, so results are reproducible for a fixed
/// rng_seed regardless of thread count.
inline SearchOutcome solve(const QuadraticSystem& sys, const SearchConfig& cfg) {
    if (sys.dim() < 1)
        throw std::invalid_argument("solve: empty system");
    if (cfg.restarts < 1 || cfg.tolerance <= 0)
        throw std::invalid_argument("solve: invalid search configuration");

    const int total = cfg.restarts;
    std::vector<double> finals(static_cast<std::size_t>(total),
                               std::numeric_limits<double>::infinity());
    std::vector<std::vector<double>> points(static_cast<std::size_t>(total));
    std::atomic<int> first_success{total};

    parallel_for(static_cast<std::size_t>(total), [&](std::size_t idx) {
        const int i = static_cast<int>(idx);
        if (i > first_success.load(std::memory_order_relaxed))
            return; // cannot become the lowest-index success
        std::mt19937_64 rng(detail::restart_seed(cfg.rng_seed, i));
        auto x = detail::random_unit_vector(rng, sys.dim());
        const double f = detail::local_descent(sys, x, cfg.max_iterations);
        finals[idx] = f;
        points[idx] = std::move(x);
        if (f < cfg.tolerance) {
            int cur = first_success.load();
            while (i < cur && !first_success.compare_exchange_weak(cur, i)) {
            }
        }
    });

    SearchOutcome out;
    double best = std::numeric_limits<double>::infinity();
    for (int i = 0; i < total; ++i) {
        best = std::min(best, finals[static_cast<std::size_t>(i)]);
        if (finals[static_cast<std::size_t>(i)] < cfg.tolerance) {
            auto x = points[static_cast<std::size_t>(i)];
            detail::canonicalize_sign(x);
            out.solution = Solution{std::move(x), finals[static_cast<std::size_t>(i)], i + 1};
            out.best_residual = finals[static_cast<std::size_t>(i)];
            out.restarts_used = i + 1;
            return out;
        }
    }
    out.best_residual = best;
    out.restarts_used = total;
    return out;
}

struct SearchResult {
    std::optional<SpinCode> spin;
    std::optional<MultiqubitCode> multiqubit;
    SearchOutcome outcome;
    HalfInt j;
    int mu = 0;
    std::int64_t nu = 0;

    bool found() const { return spin.has_value(); }
};

/// Search pipeline at an explicit spin (used when escalating mu beyond the
/// nu + 1 heuristic).
inline SearchResult search_code_at(const Irrep& rep, int d, HalfInt j, const SearchConfig& cfg) {
    SearchResult result;
    result.j = j;
    result.nu = count_conditions_closed(rep, d);
    result.mu = multiplicity(rep, j);

    QuadraticSystem sys = build_system(rep, j, d);
    if (static_cast<std::int64_t>(sys.forms.size()) != result.nu)
        throw InconsistencyError("search_code: reduced-condition count disagrees with closed form");
    if (sys.dim() != result.mu)
        throw InconsistencyError("search_code: lattice size disagrees with multiplicity");

    result.outcome = solve(sys, cfg);
    if (!result.outcome.found())
        return result;

    AmpMap amp0;
    for (int i = 0; i < sys.dim(); ++i)
        amp0[sys.lattice[static_cast<std::size_t>(i)]] = result.outcome.solution->amplitudes[static_cast<std::size_t>(i)];
    SpinCode code = make_spin_code(rep, j, amp0);
    const KLReport verify = kl_check_full(code, d, std::max(cfg.tolerance, 1e-10));
    if (!verify.pass)
        throw InconsistencyError("search_code: solution below threshold failed the full KL check");
    result.spin = code;
    MultiqubitCode mq = normalized_labeling(bootstrap(code));
    mq.d = d;
    result.multiqubit = mq;
    return result;
}

/// Full search pipeline for one (rep, d) cell: mu = nu + 1 free amplitudes at
/// the first spin that provides them, local descent on the reduced quadratic
/// system, then independent verification with the unreduced KL check before
/// the Dicke image is formed.
inline SearchResult search_code(const Irrep& rep, int d, const SearchConfig& cfg) {
    const std::int64_t nu = count_conditions_closed(rep, d);
    const int mu = static_cast<int>(nu) + 1;
    const HalfInt j = first_spin_with_freedom(rep, mu);
    return search_code_at(rep, d, j, cfg);
}

} // namespace spincode
