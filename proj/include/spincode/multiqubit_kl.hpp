#pragma once

#include "spincode/kl_engine.hpp"
#include "spincode/parallel.hpp"
#include "spincode/pauli_sym.hpp"

#include <array>
#include <cmath>
#include <string>
#include <vector>

namespace spincode {

enum class KLMode { Dense, Symmetric };

constexpr int kDenseKLGuard = 14;

namespace detail {

inline Complex inner(const CVec& a, const CVec& b) {
    Complex acc = 0;
    for (std::size_t i = 0; i < a.size(); ++i)
        acc += std::conj(a[i]) * b[i];
    return acc;
}

template <typename F> void for_each_pauli_of_weight(int n, int w, F&& fn) {
    // choose w positions, then letters from {X,Y,Z}^w
    std::vector<int> pos(static_cast<std::size_t>(w));
    for (int i = 0; i < w; ++i)
        pos[static_cast<std::size_t>(i)] = i;
    const char letters[3] = {'X', 'Y', 'Z'};
    while (true) {
        std::vector<int> letter_idx(static_cast<std::size_t>(w), 0);
        while (true) {
            std::string s(static_cast<std::size_t>(n), 'I');
            for (int i = 0; i < w; ++i)
                s[static_cast<std::size_t>(pos[static_cast<std::size_t>(i)])] =
                    letters[letter_idx[static_cast<std::size_t>(i)]];
            fn(PauliString{s});
            int carry = w - 1;
            while (carry >= 0 && ++letter_idx[static_cast<std::size_t>(carry)] == 3) {
                letter_idx[static_cast<std::size_t>(carry)] = 0;
                --carry;
            }
            if (carry < 0)
                break;
        }
        // next combination of positions
        int i = w - 1;
        while (i >= 0 && pos[static_cast<std::size_t>(i)] == n - w + i)
            --i;
        if (i < 0)
            break;
        ++pos[static_cast<std::size_t>(i)];
        for (int k = i + 1; k < w; ++k)
            pos[static_cast<std::size_t>(k)] = pos[static_cast<std::size_t>(k - 1)] + 1;
    }
}

} // namespace detail

/// Knill-Laflamme check for a permutationally invariant code.
///
/// Dense mode evaluates every Pauli string of weight 1..d-1 on full 2^n
/// statevectors (n <= 14). Symmetric mode evaluates one symmetrized
/// representative per letter-count class via the exact combinatorial matrix
/// elements, which is valid for permutationally invariant codewords and
/// keeps the condition count at O(d^3) regardless of n.
inline KLReport multiqubit_kl_check(const MultiqubitCode& code, int d, KLMode mode, double tol = 1e-12) {
    if (d < 1)
        throw std::invalid_argument("multiqubit_kl_check: d must be >= 1");
    KLReport report;
    if (mode == KLMode::Dense) {
        if (code.n > kDenseKLGuard)
            throw ResourceError("multiqubit_kl_check: dense mode limited to n <= 14");
        const CVec v0 = dense_codeword(code.n, code.amp0);
        const CVec v1 = dense_codeword(code.n, code.amp1);
        for (int w = 1; w < d; ++w) {
            detail::for_each_pauli_of_weight(code.n, w, [&](const PauliString& p) {
                const CVec e0 = apply_pauli(p, v0);
                const CVec e1 = apply_pauli(p, v1);
                const Complex m01 = detail::inner(v0, e1);
                const Complex m10 = detail::inner(v1, e0);
                const Complex diff = detail::inner(v0, e0) - detail::inner(v1, e1);
                report.conditions.push_back({ConditionKind::OffDiag, std::abs(m01), -1, 0, p.letters});
                report.conditions.push_back({ConditionKind::OffDiag, std::abs(m10), -1, 0, p.letters});
                report.conditions.push_back({ConditionKind::OnDiag, std::abs(diff), -1, 0, p.letters});
            });
        }
    } else {
        // one class per (nx, ny, nz), evaluated in parallel
        std::vector<PauliClass> classes;
        for (int w = 1; w < d; ++w)
            for (int nx = 0; nx <= w; ++nx)
                for (int ny = 0; ny + nx <= w; ++ny)
                    classes.push_back({nx, ny, w - nx - ny});
        std::vector<std::array<double, 3>> residuals(classes.size());
        parallel_for(classes.size(), [&](std::size_t i) {
            const PauliClass& cls = classes[i];
            Complex m00 = 0, m01 = 0, m10 = 0, m11 = 0;
            for (const auto& [wb, ab] : code.amp0)
                for (const auto& [wk, ak] : code.amp0)
                    m00 += ab * ak * sym_matrix_element(code.n, wb, cls, wk);
            for (const auto& [wb, ab] : code.amp1)
                for (const auto& [wk, ak] : code.amp1)
                    m11 += ab * ak * sym_matrix_element(code.n, wb, cls, wk);
            for (const auto& [wb, ab] : code.amp0)
                for (const auto& [wk, ak] : code.amp1)
                    m01 += ab * ak * sym_matrix_element(code.n, wb, cls, wk);
            for (const auto& [wb, ab] : code.amp1)
                for (const auto& [wk, ak] : code.amp0)
                    m10 += ab * ak * sym_matrix_element(code.n, wb, cls, wk);
            residuals[i] = {std::abs(m01), std::abs(m10), std::abs(m00 - m11)};
        });
        for (std::size_t i = 0; i < classes.size(); ++i) {
            report.conditions.push_back({ConditionKind::OffDiag, residuals[i][0], -1, 0, classes[i].str()});
            report.conditions.push_back({ConditionKind::OffDiag, residuals[i][1], -1, 0, classes[i].str()});
            report.conditions.push_back({ConditionKind::OnDiag, residuals[i][2], -1, 0, classes[i].str()});
        }
    }
    report.finalize(tol);
    return report;
}

/// Result of certifying one transversal group element against the irrep.
struct TransversalCert {
    Mat2 logical;          // action on (|0bar>, |1bar>) in the stored labeling
    double leakage;        // worst off-codespace norm
    double irrep_mismatch; // deviation from irrep_matrix after phase gauge
    bool matches_irrep;
};

namespace detail {

inline Mat2 phase_gauge(const Mat2& m) {
    const Complex dom = m.dominant_entry();
    const double mag = std::abs(dom);
    if (mag < 1e-300)
        return m;
    const Complex ph = dom / mag;
    Mat2 out = m;
    for (auto& v : out.m)
        v /= ph;
    return out;
}

} // namespace detail

/// Computes the logical action of g^{tensor n} on a code with spin
/// provenance, working on the spin side (diagonal gates scale amplitudes by
/// e^{-i alpha m}; X mirrors). Certifies that the codespace is preserved and
/// that the logical matrix equals the irrep matrix up to one global phase.
/// Throws NotTransversalError when amplitude leaks out of the codespace.
inline TransversalCert transversal_action(const MultiqubitCode& code, const GroupElement& g, double tol = 1e-12) {
    if (!code.rep)
        throw std::invalid_argument("transversal_action: code has no spin provenance");
    const Irrep rep = *code.rep;
    if (g.b() != rep.b)
        throw std::invalid_argument("transversal_action: group degree mismatch");
    const HalfInt j = code.spin();
    const std::size_t dim = static_cast<std::size_t>(j.twice() + 1);

    auto to_spin_vec = [&](const std::map<int, double>& amps) {
        CVec v(dim);
        for (const auto& [w, a] : amps)
            v[static_cast<std::size_t>(w)] = a; // index j - m = w
        return v;
    };
    const CVec v0 = to_spin_vec(code.amp0);
    const CVec v1 = to_spin_vec(code.amp1);

    const CVec g0 = spin_rep_apply(g, j, v0);
    const CVec g1 = spin_rep_apply(g, j, v1);

    Mat2 logical;
    logical(0, 0) = detail::inner(v0, g0);
    logical(0, 1) = detail::inner(v0, g1);
    logical(1, 0) = detail::inner(v1, g0);
    logical(1, 1) = detail::inner(v1, g1);

    double leak2 = 0;
    for (std::size_t s = 0; s < dim; ++s) {
        const Complex r0 = g0[s] - logical(0, 0) * v0[s] - logical(1, 0) * v1[s];
        const Complex r1 = g1[s] - logical(0, 1) * v0[s] - logical(1, 1) * v1[s];
        leak2 = std::max(leak2, std::norm(r0) + std::norm(r1));
    }
    const double leakage = std::sqrt(leak2);
    if (leakage >= tol)
        throw NotTransversalError("transversal_action: leakage " + std::to_string(leakage) + " for g = " + g.str());

    Mat2 expected = irrep_matrix(rep, g);
    if (code.labeling == Labeling::Swapped) {
        // conjugate by the basis swap |0> <-> |1>
        Mat2 swapped;
        swapped(0, 0) = expected(1, 1);
        swapped(0, 1) = expected(1, 0);
        swapped(1, 0) = expected(0, 1);
        swapped(1, 1) = expected(0, 0);
        expected = swapped;
    }
    const double mismatch = detail::phase_gauge(logical).max_abs_diff(detail::phase_gauge(expected));
    return {logical, leakage, mismatch, mismatch < tol};
}

/// Certifies every element of the degree-2b group on the code and checks
/// multiplicativity of the logical matrices. Returns the worst leakage,
/// irrep mismatch, and closure deviation.
struct GroupCertificate {
    double max_leakage = 0;
    double max_irrep_mismatch = 0;
    double max_closure_deviation = 0;
    bool ok = false;
};

inline GroupCertificate certify_group(const MultiqubitCode& code, double tol = 1e-12) {
    if (!code.rep)
        throw std::invalid_argument("certify_group: code has no spin provenance");
    const auto elements = GroupElement::all_elements(code.rep->b);
    std::vector<Mat2> logicals(elements.size());
    GroupCertificate cert;
    for (std::size_t i = 0; i < elements.size(); ++i) {
        const TransversalCert c = transversal_action(code, elements[i], tol);
        logicals[i] = c.logical;
        cert.max_leakage = std::max(cert.max_leakage, c.leakage);
        cert.max_irrep_mismatch = std::max(cert.max_irrep_mismatch, c.irrep_mismatch);
    }
    auto index_of = [&](const GroupElement& g) {
        for (std::size_t i = 0; i < elements.size(); ++i)
            if (elements[i] == g)
                return i;
        throw std::logic_error("certify_group: product left the element table");
    };
    for (std::size_t i = 0; i < elements.size(); ++i)
        for (std::size_t k = 0; k < elements.size(); ++k) {
            const std::size_t ik = index_of(elements[i] * elements[k]);
            const Mat2 prod = logicals[i] * logicals[k];
            cert.max_closure_deviation = std::max(cert.max_closure_deviation, prod.max_abs_diff(logicals[ik]));
        }
    cert.ok = cert.max_leakage < tol && cert.max_irrep_mismatch < tol && cert.max_closure_deviation < tol;
    return cert;
}

} // namespace spincode
