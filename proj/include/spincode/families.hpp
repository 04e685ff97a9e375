#pragma once

#include "spincode/dicke.hpp"
#include "spincode/kl_engine.hpp"

#include <algorithm>
#include <cstdint>
#include <limits>
#include <sstream>
#include <string>
#include <vector>

namespace spincode {

/// Reported parameters ((n, K, d, G)) of a constructed code, with the
/// faithful-image group descriptor.
struct CodeParams {
    int n;
    int K;
    int d;
    Irrep rep;
    int group_degree; // 2b' of the implemented group
    bool faithful;
    bool exotic;

    std::string group_name() const {
        const int half = group_degree / 2;
        if ((half & (half - 1)) == 0) {
            int r = 0;
            for (int v = half; v > 1; v >>= 1)
                ++r;
            // degree 2^r: generalized quaternion alias
            return "BD" + std::to_string(group_degree) + " (Q^(" + std::to_string(r + 1) + "))";
        }
        return "BD" + std::to_string(group_degree);
    }
};

inline CodeParams code_params(const Irrep& rep, int n, int d) {
    const int deg = effective_degree(rep);
    return {n, 2, d, rep, deg, is_faithful(rep), is_exotic_degree(deg / 2)};
}

/// The two-point distance-3 codeword family for middle irreps 1 < a < b:
///   |0bar> = sqrt((2b-s)/2b) |j,s> + sqrt(s/2b) |j,s-2b>
/// valid for any half-integral j >= 2b - s. The single surviving condition
/// s a1^2 + (s-2b) a2^2 = 0 holds exactly.
inline SpinCode family_d3(const Irrep& rep, HalfInt j) {
    if (rep.a <= 1 || rep.a >= rep.b)
        throw std::invalid_argument("family_d3: requires a middle irrep (1 < a < b)");
    if (j.is_integer())
        throw std::invalid_argument("family_d3: spin must be half-integral");
    const HalfInt s = rep.starting_spin();
    const HalfInt min_j = HalfInt(2 * rep.b) - s;
    if (j < min_j)
        throw std::invalid_argument("family_d3: spin too small, need j >= " + min_j.str());
    const std::int64_t twob = 2 * rep.b;
    // amplitudes squared: (2b-s)/2b on m=s, s/2b on m=s-2b (twice-values over 4b)
    const BigRational hi(2 * twob - s.twice(), 2 * twob);
    const BigRational lo(s.twice(), 2 * twob);
    AmpMap amp0;
    amp0[s] = SignedSqrtRational(1, hi).to_double();
    amp0[s - twob] = SignedSqrtRational(1, lo).to_double();
    return make_spin_code(rep, j, amp0);
}

/// Exact amplitude forms of family_d3 keyed by Dicke weight, in the
/// canonical (unswapped) labeling of the bootstrap.
inline std::map<int, SignedSqrtRational> family_d3_exact_weights(const Irrep& rep, HalfInt j) {
    const HalfInt s = rep.starting_spin();
    const std::int64_t twob = 2 * rep.b;
    std::map<int, SignedSqrtRational> out;
    out[static_cast<int>((j - s).to_integer())] = SignedSqrtRational(1, BigRational(2 * twob - s.twice(), 2 * twob));
    out[static_cast<int>((j - (s - twob)).to_integer())] = SignedSqrtRational(1, BigRational(s.twice(), 2 * twob));
    return out;
}

/// Multiqubit image of family_d3 in the normalized presentation, with exact
/// amplitudes attached to both codewords.
inline MultiqubitCode code_d3(const Irrep& rep, HalfInt j) {
    SpinCode spin = family_d3(rep, j);
    MultiqubitCode code = normalized_labeling(bootstrap(spin));
    code.d = 3;
    for (const auto& [w, v] : family_d3_exact_weights(rep, j)) {
        if (code.amp0.count(w)) {
            code.exact0[w] = v;
            code.exact1[code.n - w] = v;
        } else {
            code.exact1[w] = v;
            code.exact0[code.n - w] = v;
        }
    }
    return code;
}

/// ((2b+3, 2, 3)) multiqubit family from the a = b-1 irrep:
///   |0bar> = (1/sqrt(4b)) ( sqrt(4b-n)|D_0^n> + sqrt(n)|D_2b^n> ).
/// Implements the degree-2b group when 3 does not divide b, else degree 2b/3.
inline MultiqubitCode code1(int b) {
    if (b < 3)
        throw std::invalid_argument("code1: requires b >= 3");
    const Irrep rep(b, b - 1);
    return code_d3(rep, HalfInt::from_twice(2 * b + 3)); // j = (2b+3)/2
}

/// ((2^r + 3, 2, 3)) family with generalized-quaternion transversal group:
/// code1 at b = 2^{r-1}.
inline MultiqubitCode code2(int r) {
    if (r < 3)
        throw std::invalid_argument("code2: requires r >= 3");
    return code1(1 << (r - 1));
}

/// Length law of the distance-d family on the degree-8 group:
///   n = (3d^2 + 6d - 7 + 2 (d mod 8)) / 4.
inline std::int64_t code3_length(int d) {
    if (d < 3 || d % 2 == 0)
        throw std::invalid_argument("code3_length: d must be odd and >= 3");
    const std::int64_t dd = d;
    return (3 * dd * dd + 6 * dd - 7 + 2 * (dd % 8)) / 4;
}

/// Predicted multiqubit length for a (rep, d) cell: mu = nu + 1 degrees of
/// freedom at the first spin that provides them, n = 2j. Cells with d >= 15
/// rest on the existence conjecture and are tagged downstream.
inline std::int64_t predicted_length(const Irrep& rep, int d) {
    const std::int64_t mu = count_conditions_closed(rep, d) + 1;
    if (mu > std::numeric_limits<int>::max())
        throw std::out_of_range("predicted_length: mu overflow");
    return first_spin_with_freedom(rep, static_cast<int>(mu)).twice();
}

/// Irrep minimizing predicted_length at b = 4 for a given odd d; ties break
/// toward smaller a.
inline Irrep code3_irrep(int d) {
    Irrep best(4, 1);
    std::int64_t best_n = predicted_length(best, d);
    for (int a = 2; a <= 4; ++a) {
        const Irrep cand(4, a);
        const std::int64_t n = predicted_length(cand, d);
        if (n < best_n) {
            best = cand;
            best_n = n;
        }
    }
    return best;
}

struct AtlasCell {
    int b;
    int a;
    int d;
    std::int64_t n;
    bool faithful;
    int group_degree;
    bool conjectured;
    bool group_min; // smallest n among the faithful irreps of this group at this d
};

/// Grid of predicted lengths over b <= b_max, a <= b, odd d <= d_max.
inline std::vector<AtlasCell> atlas(int b_max, int d_max) {
    std::vector<AtlasCell> cells;
    for (int b = 1; b <= b_max; ++b) {
        for (int a = 1; a <= b; ++a) {
            const Irrep rep(b, a);
            for (int d = 1; d <= d_max; d += 2)
                cells.push_back({b, a, d, predicted_length(rep, d), is_faithful(rep), effective_degree(rep),
                                 d >= 15, false});
        }
    }
    // mark per-(group, d) minima over faithful irreps
    for (auto& cell : cells) {
        if (!cell.faithful)
            continue;
        bool is_min = true;
        for (const auto& other : cells)
            if (other.b == cell.b && other.d == cell.d && other.faithful && other.n < cell.n)
                is_min = false;
        cell.group_min = is_min;
    }
    return cells;
}

inline std::string atlas_csv(const std::vector<AtlasCell>& cells) {
    std::ostringstream out;
    out << "b,a,d,n,faithful,group_degree,conjectured\n";
    for (const auto& c : cells)
        out << c.b << ',' << c.a << ',' << c.d << ',' << c.n << ',' << (c.faithful ? 1 : 0) << ','
            << c.group_degree << ',' << (c.conjectured ? 1 : 0) << '\n';
    return out.str();
}

/// Markdown table mirroring the atlas layout: one row per irrep, one column
/// per distance. Non-faithful irreps are struck through; per-group minima
/// are bold. Conjectured columns carry a trailing marker.
inline std::string atlas_markdown(const std::vector<AtlasCell>& cells) {
    if (cells.empty())
        return "";
    int d_max = 0, b_max = 0;
    for (const auto& c : cells) {
        d_max = std::max(d_max, c.d);
        b_max = std::max(b_max, c.b);
    }
    std::ostringstream out;
    out << "| group | irrep |";
    for (int d = 1; d <= d_max; d += 2)
        out << " d=" << d << (d >= 15 ? "^" : "") << " |";
    out << "\n|---|---|";
    for (int d = 1; d <= d_max; d += 2)
        out << "---|";
    out << '\n';
    for (int b = 1; b <= b_max; ++b) {
        for (int a = 1; a <= b; ++a) {
            bool faithful = true;
            for (const auto& c : cells)
                if (c.b == b && c.a == a) {
                    faithful = c.faithful;
                    break;
                }
            out << "| BD" << 2 * b << " | " << (faithful ? "" : "~~") << "delta_" << a << (faithful ? "" : "~~")
                << " |";
            for (int d = 1; d <= d_max; d += 2) {
                for (const auto& c : cells)
                    if (c.b == b && c.a == a && c.d == d) {
                        if (c.group_min)
                            out << " **" << c.n << "** |";
                        else
                            out << ' ' << c.n << " |";
                        break;
                    }
            }
            out << '\n';
        }
    }
    return out.str();
}

} // namespace spincode
