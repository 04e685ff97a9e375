#pragma once

#include "spincode/half_int.hpp"
#include "spincode/wigner_gates.hpp"

#include <cmath>
#include <cstdint>
#include <numbers>
#include <numeric>
#include <stdexcept>
#include <vector>

namespace spincode {

/// Labels the 2-dimensional symplectic irrep delta_a of the degree-2b binary
/// dihedral group (order 8b). The X generator is represented by itself; the
/// phase generator Ph(pi/b) by its (2a-1)-th power.
struct Irrep {
    int b;
    int a;

    Irrep(int b_, int a_) : b(b_), a(a_) {
        if (b < 1 || a < 1 || a > b)
            throw std::invalid_argument("Irrep: need 1 <= a <= b");
    }

    /// Starting spin s = (2a-1)/2, the first spin where delta_a appears.
    HalfInt starting_spin() const { return HalfInt::from_twice(2 * a - 1); }
};

/// 2b' = 2b / gcd(2b, 2a-1): the degree of the group the irrep actually
/// implements. The irrep is faithful iff 2b' = 2b.
inline int effective_degree(const Irrep& rep) {
    return 2 * rep.b / std::gcd(2 * rep.b, 2 * rep.a - 1);
}

inline bool is_faithful(const Irrep& rep) { return effective_degree(rep) == 2 * rep.b; }

/// True iff the degree-2b group contains a gate outside every finite level of
/// the Clifford hierarchy, i.e. b is not a power of two.
inline bool is_exotic_degree(int b) {
    if (b < 1)
        throw std::invalid_argument("is_exotic_degree: b must be positive");
    return (b & (b - 1)) != 0;
}

/// Element of the degree-2b binary dihedral group in normal form
/// w^t x^e, where w = Ph(pi/b) (order 4b), x = X, and x w x^-1 = w^-1,
/// x^2 = w^{2b}. Exactly 8b distinct elements.
class GroupElement {
  public:
    GroupElement(int b, std::int64_t phase_exp, int x_exp)
        : b_(b), t_(((phase_exp % (4 * b)) + 4 * b) % (4 * b)), e_(x_exp & 1) {
        if (b < 1)
            throw std::invalid_argument("GroupElement: b must be positive");
    }

    static GroupElement identity(int b) { return {b, 0, 0}; }
    static GroupElement phase_generator(int b) { return {b, 1, 0}; } // w = Ph(pi/b)
    static GroupElement x_generator(int b) { return {b, 0, 1}; }
    static GroupElement z_element(int b) { return {b, b, 0}; } // Z = Ph(pi) = w^b

    int b() const { return b_; }
    std::int64_t phase_exp() const { return t_; }
    int x_exp() const { return e_; }

    bool is_identity() const { return t_ == 0 && e_ == 0; }

    friend GroupElement operator*(const GroupElement& g, const GroupElement& h) {
        if (g.b_ != h.b_)
            throw std::invalid_argument("GroupElement: mixed group degrees");
        // (w^t1 x^e1)(w^t2 x^e2): pull w^t2 through x^e1.
        const std::int64_t t2 = g.e_ ? -h.t_ : h.t_;
        std::int64_t t = g.t_ + t2;
        int e = g.e_ + h.e_;
        if (e == 2) {
            t += 2 * g.b_; // x^2 = w^{2b}
            e = 0;
        }
        return {g.b_, t, e};
    }

    GroupElement inverse() const {
        if (e_ == 0)
            return {b_, -t_, 0};
        // (w^t x)^-1 = x^-1 w^-t = w^{t - 2b} x
        return {b_, t_ - 2 * b_, 1};
    }

    friend bool operator==(const GroupElement&, const GroupElement&) = default;

    static std::vector<GroupElement> all_elements(int b) {
        std::vector<GroupElement> out;
        out.reserve(static_cast<std::size_t>(8 * b));
        for (int e = 0; e <= 1; ++e)
            for (std::int64_t t = 0; t < 4 * b; ++t)
                out.emplace_back(b, t, e);
        return out;
    }

    std::string str() const {
        std::string s;
        if (t_ != 0)
            s += "Ph(pi/" + std::to_string(b_) + ")^" + std::to_string(t_);
        if (e_)
            s += (s.empty() ? "" : "*") + std::string("X");
        return s.empty() ? "1" : s;
    }

  private:
    int b_;
    std::int64_t t_; // exponent of w in [0, 4b)
    int e_;          // exponent of x in {0, 1}
};

/// delta_a(g) as an exact-phase 2x2 unitary: w^t maps to Ph(pi/b)^{(2a-1)t},
/// x maps to X. Phases are cyclotomic with numerator reduced mod 4b.
inline Mat2 irrep_matrix(const Irrep& rep, const GroupElement& g) {
    if (g.b() != rep.b)
        throw std::invalid_argument("irrep_matrix: element degree != irrep degree");
    const std::int64_t fourb = 4 * rep.b;
    const std::int64_t num = ((2 * rep.a - 1) * g.phase_exp()) % fourb;
    // Ph(pi/b)^num = diag(e^{-i pi num/2b}, e^{+i pi num/2b})
    const double angle = std::numbers::pi * static_cast<double>(num) / (2.0 * rep.b);
    Mat2 out;
    const Complex lo = su2::unit_phase(-angle), hi = su2::unit_phase(angle);
    if (g.x_exp() == 0) {
        out(0, 0) = lo;
        out(1, 1) = hi;
    } else {
        // diag(lo, hi) * X, with X = -i * (swap)
        out(0, 1) = Complex(0, -1) * lo;
        out(1, 0) = Complex(0, -1) * hi;
    }
    return out;
}

/// Physical action of D^j(g) on a spin-j vector: apply X^e then the phase
/// power, matching the normal form w^t x^e.
inline CVec spin_rep_apply(const GroupElement& g, HalfInt j, const CVec& v) {
    CVec cur = v;
    if (g.x_exp())
        cur = gate_apply({Gate::X, j}, cur);
    if (g.phase_exp() != 0) {
        const double alpha = std::numbers::pi * static_cast<double>(g.phase_exp()) / static_cast<double>(g.b());
        cur = gate_apply({Gate::Ph, j, alpha}, cur);
    }
    return cur;
}

/// The allowed support of |0bar> in spin j: (s + 2b Z) intersected with
/// [-j, j], ordered by m descending. Symplectic irreps live only in
/// half-integral spin.
inline std::vector<HalfInt> support_lattice(const Irrep& rep, HalfInt j) {
    if (j.is_integer())
        throw std::invalid_argument("support_lattice: symplectic irreps need half-integral spin");
    const std::int64_t twos = 2 * rep.a - 1;
    const std::int64_t step = 4 * rep.b; // twice-value of 2b
    std::vector<HalfInt> out;
    // Largest lattice point <= j: s + 2b*floor((j-s)/2b).
    std::int64_t diff = j.twice() - twos;
    std::int64_t k = diff >= 0 ? diff / step : -((-diff + step - 1) / step);
    for (std::int64_t tm = twos + k * step; tm >= -j.twice(); tm -= step)
        if (tm <= j.twice())
            out.push_back(HalfInt::from_twice(tm));
    return out;
}

/// Character of spin j at Ph(alpha): sum over m of e^{-i alpha m}, real by
/// the m <-> -m pairing.
inline double spin_character_phase(HalfInt j, double alpha) {
    double acc = 0;
    for (std::int64_t tm = -j.twice(); tm <= j.twice(); tm += 2)
        acc += std::cos(alpha * 0.5 * static_cast<double>(tm));
    return acc;
}

/// Multiplicity of delta_a in spin j by the character inner product over all
/// 8b elements. The X coset contributes nothing (both characters vanish
/// there for half-integral j), leaving the 4b phase powers.
inline int multiplicity(const Irrep& rep, HalfInt j) {
    if (j.is_integer())
        throw std::invalid_argument("multiplicity: symplectic irreps need half-integral spin");
    const int b = rep.b;
    double acc = 0;
    for (std::int64_t t = 0; t < 4 * b; ++t) {
        const double alpha = std::numbers::pi * static_cast<double>(t) / static_cast<double>(b);
        const double chi_irrep = 2.0 * std::cos(0.5 * alpha * static_cast<double>(2 * rep.a - 1));
        acc += chi_irrep * spin_character_phase(j, alpha);
    }
    acc /= static_cast<double>(8 * b);
    const double rounded = std::round(acc);
    if (std::abs(acc - rounded) > 1e-6)
        throw std::runtime_error("multiplicity: character sum not near an integer");
    return static_cast<int>(rounded);
}

/// Smallest spin whose multiplicity reaches mu: j = mu*b + kappa with
/// kappa = s - b for odd mu and kappa = -s for even mu.
inline HalfInt first_spin_with_freedom(const Irrep& rep, int mu) {
    if (mu < 1)
        throw std::invalid_argument("first_spin_with_freedom: mu must be >= 1");
    const std::int64_t twos = 2 * rep.a - 1;
    const std::int64_t twob = 2 * rep.b;
    const std::int64_t kappa2 = (mu % 2) ? (twos - twob) : -twos;
    return HalfInt::from_twice(static_cast<std::int64_t>(mu) * twob + kappa2);
}

} // namespace spincode
