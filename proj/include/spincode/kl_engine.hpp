#pragma once

#include "spincode/spherical_tensor.hpp"
#include "spincode/spin_code.hpp"

#include <algorithm>
#include <cstdint>
#include <string>
#include <vector>

namespace spincode {

enum class ConditionKind { OnDiag, OffDiag };

inline const char* kind_name(ConditionKind k) { return k == ConditionKind::OnDiag ? "on-diag" : "off-diag"; }

/// One Knill-Laflamme condition surviving the covariance reduction: k odd,
/// with q = 0 mod 2b (on-diagonal, q >= 0) or q = 2a-1 mod 2b (off-diagonal).
struct ReducedCondition {
    ConditionKind kind;
    int k;
    int q;
};

/// Residual record for one evaluated condition. For spin checks k/q identify
/// the tensor; multiqubit checks fill `label` instead (k = -1).
struct KLEntry {
    ConditionKind kind;
    double residual;
    int k = -1;
    int q = 0;
    std::string label;
};

struct KLReport {
    std::vector<KLEntry> conditions;
    double max_residual = 0.0;
    double tolerance = 0.0;
    bool pass = false;

    void finalize(double tol) {
        tolerance = tol;
        max_residual = 0.0;
        for (const auto& c : conditions)
            max_residual = std::max(max_residual, c.residual);
        pass = max_residual < tol;
    }
};

/// Unreduced ground-truth check: every rank 0 <= k < d and |q| <= k. For each
/// tensor the two off-diagonal matrix elements must vanish and the two
/// diagonal expectations must agree (the shared value is the allowed
/// constant).
template <typename Map> KLReport kl_check_full_maps(HalfInt j, const Map& amp0, const Map& amp1, int d, double tol) {
    if (d < 1)
        throw std::invalid_argument("kl_check_full: d must be >= 1");
    if (d > j.twice() + 1)
        throw std::out_of_range("kl_check_full: d exceeds 2j+1 tensor ranks");
    KLReport report;
    for (int k = 0; k < d; ++k) {
        for (int q = -k; q <= k; ++q) {
            SphericalTensor t(j, k, q);
            const auto v01 = t.sandwich(amp0, amp1);
            const auto v10 = t.sandwich(amp1, amp0);
            const auto vdiff = t.sandwich(amp0, amp0) - t.sandwich(amp1, amp1);
            report.conditions.push_back({ConditionKind::OffDiag, std::abs(v01), k, q});
            report.conditions.push_back({ConditionKind::OffDiag, std::abs(v10), k, q});
            report.conditions.push_back({ConditionKind::OnDiag, std::abs(vdiff), k, q});
        }
    }
    report.finalize(tol);
    return report;
}

inline KLReport kl_check_full(const SpinCode& code, int d, double tol = 1e-12) {
    return kl_check_full_maps(code.j, code.amp0, code.amp1, d, tol);
}

/// The conditions of the covariance reduction for ranks k <= d-2 (even ranks
/// and all other q are automatically satisfied; d must be odd).
inline std::vector<ReducedCondition> reduced_conditions(const Irrep& rep, int d) {
    if (d < 1 || d % 2 == 0)
        throw std::invalid_argument("reduced_conditions: d must be odd and >= 1");
    const int twob = 2 * rep.b;
    const int twos = 2 * rep.a - 1;
    std::vector<ReducedCondition> out;
    for (int k = 1; k <= d - 2; k += 2) {
        for (int q = 0; q <= k; q += twob)
            out.push_back({ConditionKind::OnDiag, k, q});
        // q = 2s mod 2b over -k..k
        int q0 = twos % twob;
        int start = -k + (((q0 - (-k)) % twob + twob) % twob);
        for (int q = start; q <= k; q += twob)
            out.push_back({ConditionKind::OffDiag, k, q});
    }
    return out;
}

/// Condition counts from the floor-sum formulas; first = on-diagonal,
/// second = off-diagonal. Matches the length of reduced_conditions by kind.
inline std::pair<std::int64_t, std::int64_t> count_conditions(const Irrep& rep, int d) {
    if (d < 1 || d % 2 == 0)
        throw std::invalid_argument("count_conditions: d must be odd and >= 1");
    auto floor_div = [](std::int64_t num, std::int64_t den) {
        std::int64_t qt = num / den, rm = num % den;
        return (rm != 0 && ((rm < 0) != (den < 0))) ? qt - 1 : qt;
    };
    const std::int64_t twob = 2 * rep.b;
    const std::int64_t twos = 2 * rep.a - 1;
    std::int64_t on = 0, off = 0;
    for (std::int64_t k = 1; k <= d - 2; k += 2) {
        on += 1 + floor_div(k, twob);
        off += 1 + floor_div(k - twos, twob) + floor_div(k + twos, twob);
    }
    return {on, off};
}

/// Closed-form total count nu for d = 2t+1:
///   nu = (3/2b) t^2 + ((2+b)/2b) t + (2a(a-b-1)+b+1)/(2b) + c
/// with the mod-bracket correction c; everything is assembled over a common
/// denominator 2b and the division is exact.
inline std::int64_t count_conditions_closed(const Irrep& rep, int d) {
    if (d < 1 || d % 2 == 0)
        throw std::invalid_argument("count_conditions_closed: d must be odd and >= 1");
    const std::int64_t b = rep.b, a = rep.a;
    const std::int64_t t = (d - 1) / 2;
    auto mod = [](std::int64_t x, std::int64_t y) { return ((x % y) + y) % y; };

    const std::int64_t A = mod(-a + t + 1, b);
    const std::int64_t B = mod(t - a, b);
    const std::int64_t C = mod(a + t, b);
    const std::int64_t D = mod(a + t - 1, b);
    const std::int64_t E = mod(t, b);
    const std::int64_t twoF = mod(2 * t - 1, 2 * b); // twice ((t - 1/2) mod b)

    const std::int64_t c_scaled = A * A + (-2 * B + b - 2) * A + C * (-2 * D + C + b - 2) + E * E +
                                  (-twoF + b - 1) * E; // = 2b * c
    const std::int64_t total = 3 * t * t + (2 + b) * t + 2 * a * (a - b - 1) + b + 1 + c_scaled;
    if (total % (2 * b) != 0)
        throw std::logic_error("count_conditions_closed: non-integer result");
    return total / (2 * b);
}

/// The mod-bracket correction c alone (as 2b*c), exposed for range checks.
inline std::int64_t closed_form_correction_times_2b(const Irrep& rep, int d) {
    const std::int64_t b = rep.b, a = rep.a;
    const std::int64_t t = (d - 1) / 2;
    auto mod = [](std::int64_t x, std::int64_t y) { return ((x % y) + y) % y; };
    const std::int64_t A = mod(-a + t + 1, b);
    const std::int64_t B = mod(t - a, b);
    const std::int64_t C = mod(a + t, b);
    const std::int64_t D = mod(a + t - 1, b);
    const std::int64_t E = mod(t, b);
    const std::int64_t twoF = mod(2 * t - 1, 2 * b);
    return A * A + (-2 * B + b - 2) * A + C * (-2 * D + C + b - 2) + E * E + (-twoF + b - 1) * E;
}

/// Evaluates only the reduced conditions on a concrete code. The on-diagonal
/// residual is <0|T|0> - <1|T|1>; the off-diagonal residual is <0|T|1>.
inline KLReport kl_check_reduced(const SpinCode& code, int d, double tol = 1e-12) {
    KLReport report;
    for (const auto& cond : reduced_conditions(code.rep, d)) {
        SphericalTensor t(code.j, cond.k, cond.q);
        double r = 0;
        if (cond.kind == ConditionKind::OnDiag)
            r = t.sandwich(code.amp0, code.amp0) - t.sandwich(code.amp1, code.amp1);
        else
            r = t.sandwich(code.amp0, code.amp1);
        report.conditions.push_back({cond.kind, std::abs(r), cond.k, cond.q});
    }
    report.finalize(tol);
    return report;
}

} // namespace spincode
