#pragma once

#include "spincode/half_int.hpp"

#include <array>
#include <cmath>
#include <complex>
#include <numbers>
#include <stdexcept>
#include <vector>

namespace spincode {

using Complex = std::complex<double>;
using CVec = std::vector<Complex>;

/// 2x2 complex matrix, row-major. Small enough to pass by value.
struct Mat2 {
    std::array<Complex, 4> m{};

    Complex& operator()(int r, int c) { return m[static_cast<std::size_t>(2 * r + c)]; }
    const Complex& operator()(int r, int c) const { return m[static_cast<std::size_t>(2 * r + c)]; }

    friend Mat2 operator*(const Mat2& a, const Mat2& b) {
        Mat2 out;
        for (int r = 0; r < 2; ++r)
            for (int c = 0; c < 2; ++c)
                out(r, c) = a(r, 0) * b(0, c) + a(r, 1) * b(1, c);
        return out;
    }

    friend Mat2 operator*(Complex s, const Mat2& a) {
        Mat2 out = a;
        for (auto& v : out.m)
            v *= s;
        return out;
    }

    Mat2 dagger() const {
        Mat2 out;
        for (int r = 0; r < 2; ++r)
            for (int c = 0; c < 2; ++c)
                out(r, c) = std::conj((*this)(c, r));
        return out;
    }

    double max_abs_diff(const Mat2& o) const {
        double d = 0;
        for (int i = 0; i < 4; ++i)
            d = std::max(d, std::abs(m[static_cast<std::size_t>(i)] - o.m[static_cast<std::size_t>(i)]));
        return d;
    }

    /// Largest-magnitude entry, used to fix the global-phase gauge.
    Complex dominant_entry() const {
        Complex best = m[0];
        for (const auto& v : m)
            if (std::abs(v) > std::abs(best))
                best = v;
        return best;
    }

    static Mat2 identity() {
        Mat2 out;
        out(0, 0) = out(1, 1) = 1.0;
        return out;
    }
};

/// The determinant-1 forms of the usual single-qubit gates.
namespace su2 {

inline Complex unit_phase(double angle) { return {std::cos(angle), std::sin(angle)}; }

inline Mat2 X() {
    Mat2 g;
    g(0, 1) = g(1, 0) = Complex(0, -1);
    return g;
}
inline Mat2 Y() {
    Mat2 g;
    g(0, 1) = -1.0;
    g(1, 0) = 1.0;
    return g;
}
inline Mat2 Z() {
    Mat2 g;
    g(0, 0) = Complex(0, -1);
    g(1, 1) = Complex(0, 1);
    return g;
}
inline Mat2 Ph(double alpha) {
    Mat2 g;
    g(0, 0) = unit_phase(-alpha / 2);
    g(1, 1) = unit_phase(alpha / 2);
    return g;
}
inline Mat2 S() { return Ph(std::numbers::pi / 2); }
inline Mat2 T() { return Ph(std::numbers::pi / 4); }
inline Mat2 H() {
    Mat2 g;
    const double r = 1.0 / std::sqrt(2.0);
    g(0, 0) = g(0, 1) = g(1, 0) = Complex(0, -r);
    g(1, 1) = Complex(0, r);
    return g;
}
inline Mat2 F() { return H() * S().dagger(); }

} // namespace su2

enum class Gate { X, Y, Z, Ph };

/// A named gate acting on spin j through its Wigner-D operator.
/// alpha is used only by Ph.
struct GateAction {
    Gate name;
    HalfInt j;
    double alpha = 0.0;
};

namespace detail {

/// (-i)^t computed exactly for integer t.
inline Complex minus_i_pow(std::int64_t t) {
    switch (((t % 4) + 4) % 4) {
    case 0: return {1, 0};
    case 1: return {0, -1};
    case 2: return {-1, 0};
    default: return {0, 1};
    }
}

} // namespace detail

/// Phase e^{-i pi j} on the branch written with +pi: for half-integral j this
/// is (-i)^{2j}, one of {1, -i, -1, i}.
inline Complex x_gate_phase(HalfInt j) { return detail::minus_i_pow(j.twice()); }

/// Applies D^j(g) to a spin-j vector indexed by m descending from +j:
///   D^j(X)|j,m>     = e^{-i pi j} |j,-m>
///   D^j(Y)|j,m>     = e^{-i pi (j-m)} |j,-m>
///   D^j(Z)|j,m>     = e^{-i pi m} |j,m>
///   D^j(Ph(a))|j,m> = e^{-i a m} |j,m>
inline CVec gate_apply(const GateAction& g, const CVec& v) {
    const std::int64_t dim = g.j.twice() + 1;
    if (static_cast<std::int64_t>(v.size()) != dim)
        throw std::invalid_argument("gate_apply: vector dimension != 2j+1");
    CVec out(v.size());
    switch (g.name) {
    case Gate::X: {
        const Complex ph = x_gate_phase(g.j);
        for (std::int64_t i = 0; i < dim; ++i)
            out[static_cast<std::size_t>(dim - 1 - i)] = ph * v[static_cast<std::size_t>(i)];
        break;
    }
    case Gate::Y: {
        // j - m equals the descending index i, so the phase is (-1)^i.
        for (std::int64_t i = 0; i < dim; ++i) {
            const double sgn = (i % 2 == 0) ? 1.0 : -1.0;
            out[static_cast<std::size_t>(dim - 1 - i)] = sgn * v[static_cast<std::size_t>(i)];
        }
        break;
    }
    case Gate::Z: {
        const Complex phj = x_gate_phase(g.j); // e^{-i pi j}
        for (std::int64_t i = 0; i < dim; ++i) {
            const double sgn = (i % 2 == 0) ? 1.0 : -1.0;
            out[static_cast<std::size_t>(i)] = phj * sgn * v[static_cast<std::size_t>(i)];
        }
        break;
    }
    case Gate::Ph: {
        for (std::int64_t i = 0; i < dim; ++i) {
            const double m = 0.5 * static_cast<double>(g.j.twice() - 2 * i);
            out[static_cast<std::size_t>(i)] = su2::unit_phase(-g.alpha * m) * v[static_cast<std::size_t>(i)];
        }
        break;
    }
    }
    return out;
}

/// Dense (2j+1)x(2j+1) matrix of D^j(g), row-major, m descending.
inline CVec gate_matrix(const GateAction& g) {
    const std::size_t dim = static_cast<std::size_t>(g.j.twice() + 1);
    CVec mat(dim * dim);
    CVec basis(dim);
    for (std::size_t c = 0; c < dim; ++c) {
        std::fill(basis.begin(), basis.end(), Complex{});
        basis[c] = 1.0;
        CVec col = gate_apply(g, basis);
        for (std::size_t r = 0; r < dim; ++r)
            mat[r * dim + c] = col[r];
    }
    return mat;
}

} // namespace spincode
