#pragma once

#include "spincode/binary_dihedral.hpp"
#include "spincode/half_int.hpp"

#include <cmath>
#include <map>
#include <stdexcept>

namespace spincode {

using AmpMap = std::map<HalfInt, double>;

/// A two-dimensional covariant codespace inside spin j: real amplitude maps
/// for |0bar> and |1bar> over the support lattice, with the mirror convention
/// amp1(m) = amp0(-m).
struct SpinCode {
    HalfInt j;
    Irrep rep;
    AmpMap amp0;
    AmpMap amp1;

    std::int64_t qubit_count() const { return j.twice(); } // n = 2j
};

namespace detail {

inline double norm_sq(const AmpMap& amps) {
    double acc = 0;
    for (const auto& [m, a] : amps)
        acc += a * a;
    return acc;
}

} // namespace detail

/// Builds a SpinCode from the |0bar> amplitudes, deriving |1bar> by the
/// mirror convention and validating support and normalization.
inline SpinCode make_spin_code(const Irrep& rep, HalfInt j, const AmpMap& amp0, double norm_tol = 1e-12) {
    auto lattice = support_lattice(rep, j);
    for (const auto& [m, a] : amp0) {
        if (std::find(lattice.begin(), lattice.end(), m) == lattice.end())
            throw std::invalid_argument("make_spin_code: m = " + m.str() + " not on the support lattice");
        (void)a;
    }
    const double n2 = detail::norm_sq(amp0);
    if (std::abs(n2 - 1.0) > norm_tol)
        throw std::invalid_argument("make_spin_code: |0bar> not normalized");
    SpinCode code{j, rep, amp0, {}};
    for (const auto& [m, a] : amp0)
        code.amp1[-m] = a;
    return code;
}

} // namespace spincode
