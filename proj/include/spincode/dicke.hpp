#pragma once

#include "spincode/errors.hpp"
#include "spincode/spin_code.hpp"
#include "spincode/sqrt_rational.hpp"
#include "spincode/wigner_gates.hpp"

#include <bit>
#include <cstdint>
#include <map>
#include <optional>

namespace spincode {

/// Which codeword the amp0 slot holds relative to the lattice convention.
/// Canonical: supp(amp0) sits on weights w = j - m with m on the s-lattice.
/// Swapped: the mirrored presentation (amp0 holds the lower-weight class).
enum class Labeling { Canonical, Swapped };

inline const char* labeling_name(Labeling l) { return l == Labeling::Canonical ? "canonical" : "swapped"; }

/// Permutationally invariant two-dimensional code on n qubits: amplitudes
/// over Dicke weights with the mirror convention amp1(w) = amp0(n-w).
struct MultiqubitCode {
    int n = 0;
    std::map<int, double> amp0;
    std::map<int, double> amp1;
    std::optional<Irrep> rep;       // spin provenance
    int d = 0;                      // declared distance, 0 when unknown
    Labeling labeling = Labeling::Canonical;
    std::map<int, SignedSqrtRational> exact0; // closed-form amplitudes when known
    std::map<int, SignedSqrtRational> exact1;

    HalfInt spin() const { return HalfInt::from_twice(n); } // j = n/2
};

/// Carries a spin code to its Dicke image: the amplitude at weight w = j - m
/// equals the spin amplitude at m, and n = 2j.
inline MultiqubitCode bootstrap(const SpinCode& code) {
    MultiqubitCode out;
    out.n = static_cast<int>(code.j.twice());
    out.rep = code.rep;
    for (const auto& [m, a] : code.amp0)
        out.amp0[static_cast<int>((code.j - m).to_integer())] = a;
    for (const auto& [m, a] : code.amp1)
        out.amp1[static_cast<int>((code.j - m).to_integer())] = a;
    return out;
}

/// Pulls a multiqubit code with provenance back to its spin form
/// (m = j - w). The swapped labeling is undone so supp(amp0) is on the
/// s-lattice again.
inline SpinCode unbootstrap(const MultiqubitCode& code) {
    if (!code.rep)
        throw std::invalid_argument("unbootstrap: code has no spin provenance");
    const HalfInt j = code.spin();
    const auto& a0 = code.labeling == Labeling::Swapped ? code.amp1 : code.amp0;
    AmpMap amp0;
    for (const auto& [w, a] : a0)
        amp0[j - HalfInt(w)] = a;
    return make_spin_code(*code.rep, j, amp0);
}

/// Normalizes the presentation so amp0 carries the weight class with the
/// smaller minimum weight (the convention used for explicit code tables).
inline MultiqubitCode normalized_labeling(MultiqubitCode code) {
    if (code.amp0.empty() || code.amp1.empty())
        return code;
    if (code.amp1.begin()->first < code.amp0.begin()->first) {
        std::swap(code.amp0, code.amp1);
        std::swap(code.exact0, code.exact1);
        code.labeling = code.labeling == Labeling::Canonical ? Labeling::Swapped : Labeling::Canonical;
    }
    return code;
}

namespace detail {

inline BigInt binomial(int n, int k) {
    if (k < 0 || k > n)
        return 0;
    BigInt out = 1;
    for (int i = 0; i < k; ++i) {
        out *= (n - i);
        out /= (i + 1);
    }
    return out;
}

constexpr int kDenseQubitGuard = 20;

inline void require_dense(int n, int guard, const char* who) {
    if (n < 0 || n > guard)
        throw ResourceError(std::string(who) + ": dense path limited to n <= " + std::to_string(guard));
}

} // namespace detail

/// Dense Dicke state |D_w^n>: uniform superposition over all C(n,w) weight-w
/// computational strings, as a real 2^n vector.
inline std::vector<double> dicke_dense(int n, int w) {
    detail::require_dense(n, detail::kDenseQubitGuard, "dicke_dense");
    if (w < 0 || w > n)
        throw std::invalid_argument("dicke_dense: weight out of range");
    const std::size_t dim = std::size_t{1} << n;
    std::vector<double> v(dim, 0.0);
    const double amp = 1.0 / SignedSqrtRational::sqrt_to_double(BigRational(detail::binomial(n, w)));
    for (std::size_t s = 0; s < dim; ++s)
        if (std::popcount(s) == w)
            v[s] = amp;
    return v;
}

/// Dense 2^n expansion of one codeword (amplitude map over weights).
inline CVec dense_codeword(int n, const std::map<int, double>& amps, int guard = detail::kDenseQubitGuard) {
    detail::require_dense(n, guard, "dense_codeword");
    const std::size_t dim = std::size_t{1} << n;
    CVec v(dim);
    std::vector<double> weight_amp(static_cast<std::size_t>(n + 1), 0.0);
    for (const auto& [w, a] : amps)
        weight_amp[static_cast<std::size_t>(w)] =
            a / SignedSqrtRational::sqrt_to_double(BigRational(detail::binomial(n, w)));
    for (std::size_t s = 0; s < dim; ++s)
        v[s] = weight_amp[static_cast<std::size_t>(std::popcount(s))];
    return v;
}

/// Applies g^{tensor n} for the named SU(2) gates; diagonal gates phase by
/// bit pattern, X/Y flip every bit.
inline CVec gate_tensor_apply(Gate g, double alpha, int n, const CVec& v) {
    const std::size_t dim = std::size_t{1} << n;
    if (v.size() != dim)
        throw std::invalid_argument("gate_tensor_apply: dimension mismatch");
    CVec out(dim);
    switch (g) {
    case Gate::X: {
        const Complex ph = detail::minus_i_pow(n);
        const std::size_t mask = dim - 1;
        for (std::size_t s = 0; s < dim; ++s)
            out[s ^ mask] = ph * v[s];
        break;
    }
    case Gate::Y: {
        const std::size_t mask = dim - 1;
        for (std::size_t s = 0; s < dim; ++s) {
            const int w = std::popcount(s);
            out[s ^ mask] = ((w % 2) ? -1.0 : 1.0) * v[s];
        }
        break;
    }
    case Gate::Z: {
        const Complex ph = detail::minus_i_pow(n);
        for (std::size_t s = 0; s < dim; ++s) {
            const int w = std::popcount(s);
            out[s] = ph * ((w % 2) ? -1.0 : 1.0) * v[s];
        }
        break;
    }
    case Gate::Ph: {
        for (std::size_t s = 0; s < dim; ++s) {
            const int w = std::popcount(s);
            out[s] = su2::unit_phase(-alpha * (0.5 * n - w)) * v[s];
        }
        break;
    }
    }
    return out;
}

/// Max over m of || D[D^j(g)|j,m>] - g^{tensor n} D|j,m> || computed densely;
/// j = n/2.
inline double intertwiner_check(int n, Gate g, double alpha = 0.0) {
    detail::require_dense(n, 10, "intertwiner_check");
    const HalfInt j = HalfInt::from_twice(n);
    const std::int64_t sdim = n + 1;
    double worst = 0;
    for (std::int64_t i = 0; i < sdim; ++i) {
        // spin basis vector |j, m> with m = j - i
        CVec spin(static_cast<std::size_t>(sdim));
        spin[static_cast<std::size_t>(i)] = 1.0;
        CVec rotated = gate_apply({g, j, alpha}, spin);
        // push both sides through the Dicke map
        CVec lhs(std::size_t{1} << n);
        for (std::int64_t r = 0; r < sdim; ++r) {
            if (rotated[static_cast<std::size_t>(r)] == Complex{})
                continue;
            auto dicke = dicke_dense(n, static_cast<int>(r));
            for (std::size_t s = 0; s < lhs.size(); ++s)
                lhs[s] += rotated[static_cast<std::size_t>(r)] * dicke[s];
        }
        CVec rhs_in(std::size_t{1} << n);
        auto dicke = dicke_dense(n, static_cast<int>(i));
        for (std::size_t s = 0; s < rhs_in.size(); ++s)
            rhs_in[s] = dicke[s];
        CVec rhs = gate_tensor_apply(g, alpha, n, rhs_in);
        double acc = 0;
        for (std::size_t s = 0; s < lhs.size(); ++s)
            acc += std::norm(lhs[s] - rhs[s]);
        worst = std::max(worst, std::sqrt(acc));
    }
    return worst;
}

} // namespace spincode
