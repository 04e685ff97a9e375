#pragma once

#include "spincode/half_int.hpp"
#include "spincode/sqrt_rational.hpp"

#include <algorithm>
#include <vector>

namespace spincode {

namespace detail {

/// Big-integer factorial with a per-thread memo table.
inline const BigInt& factorial(std::int64_t n) {
    thread_local std::vector<BigInt> table{BigInt(1)};
    if (n < 0)
        throw std::invalid_argument("factorial of negative argument");
    while (static_cast<std::int64_t>(table.size()) <= n)
        table.push_back(table.back() * static_cast<std::int64_t>(table.size()));
    return table[static_cast<std::size_t>(n)];
}

// Exact half of a twice-value known to be even.
inline std::int64_t half(std::int64_t twice) {
    if (twice % 2 != 0)
        throw std::logic_error("internal: odd twice-value where integer expected");
    return twice / 2;
}

} // namespace detail

/// Exact Clebsch-Gordan coefficient <j1 m1, j2 m2 | J M> in the
/// Condon-Shortley convention, via the Racah closed formula over big-integer
/// factorials. Selection-rule violations (M != m1+m2, triangle failure,
/// |m| > j) give exact zero; malformed half-integers throw.
inline SignedSqrtRational cg(HalfInt j1, HalfInt m1, HalfInt j2, HalfInt m2, HalfInt J, HalfInt M) {
    require_jm(j1, m1);
    require_jm(j2, m2);
    require_jm(J, M);
    if (m1.abs() > j1 || m2.abs() > j2 || M.abs() > J)
        return SignedSqrtRational::zero();
    if ((m1 + m2) != M)
        return SignedSqrtRational::zero();
    // Triangle: |j1-j2| <= J <= j1+j2 with integral perimeter.
    if (!(j1 + j2 + J).is_integer())
        return SignedSqrtRational::zero();
    if (J > j1 + j2 || J < (j1 - j2).abs())
        return SignedSqrtRational::zero();

    using detail::factorial;
    using detail::half;

    const std::int64_t t_j12J = half((j1 + j2 - J).twice()); // j1+j2-J
    const std::int64_t t_j1Jm2 = half((j1 - j2 + J).twice());
    const std::int64_t t_j2Jm1 = half((-j1 + j2 + J).twice());
    const std::int64_t t_sum1 = half((j1 + j2 + J).twice()) + 1;

    const std::int64_t jm1m = half((j1 - m1).twice());
    const std::int64_t jm1p = half((j1 + m1).twice());
    const std::int64_t jm2m = half((j2 - m2).twice());
    const std::int64_t jm2p = half((j2 + m2).twice());
    const std::int64_t JMm = half((J - M).twice());
    const std::int64_t JMp = half((J + M).twice());

    BigRational prefactor = BigRational(J.twice() + 1) * factorial(t_j12J) * factorial(t_j1Jm2) *
                            factorial(t_j2Jm1) / factorial(t_sum1);
    prefactor *= BigRational(factorial(JMp)) * factorial(JMm) * factorial(jm1m) * factorial(jm1p) *
                 factorial(jm2m) * factorial(jm2p);

    // Racah sum over t; alternating rational series.
    const std::int64_t a1 = half((J - j2 + m1).twice()); // J - j2 + m1
    const std::int64_t a2 = half((J - j1 - m2).twice()); // J - j1 - m2
    const std::int64_t t_lo = std::max<std::int64_t>({0, -a1, -a2});
    const std::int64_t t_hi = std::min<std::int64_t>({t_j12J, jm1m, jm2p});
    if (t_lo > t_hi)
        return SignedSqrtRational::zero();

    BigRational series = 0;
    for (std::int64_t t = t_lo; t <= t_hi; ++t) {
        BigInt denom = factorial(t) * factorial(t_j12J - t) * factorial(jm1m - t) * factorial(jm2p - t) *
                       factorial(a1 + t) * factorial(a2 + t);
        BigRational term(1, denom);
        if (t % 2)
            series -= term;
        else
            series += term;
    }
    if (series == 0)
        return SignedSqrtRational::zero();
    const int sign = series > 0 ? 1 : -1;
    return {sign, series * series * prefactor};
}

} // namespace spincode
