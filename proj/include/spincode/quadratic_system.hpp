#pragma once

#include "spincode/kl_engine.hpp"

#include <cstdint>
#include <unordered_map>
#include <vector>

namespace spincode {

/// Small dense symmetric matrix for the reduced-condition quadratic forms.
struct SymMat {
    int n = 0;
    std::vector<double> a; // row-major n*n

    explicit SymMat(int dim) : n(dim), a(static_cast<std::size_t>(dim) * static_cast<std::size_t>(dim), 0.0) {}

    double& at(int r, int c) { return a[static_cast<std::size_t>(r) * static_cast<std::size_t>(n) + static_cast<std::size_t>(c)]; }
    double at(int r, int c) const { return a[static_cast<std::size_t>(r) * static_cast<std::size_t>(n) + static_cast<std::size_t>(c)]; }

    void symmetrize() {
        for (int r = 0; r < n; ++r)
            for (int c = r + 1; c < n; ++c) {
                const double v = 0.5 * (at(r, c) + at(c, r));
                at(r, c) = at(c, r) = v;
            }
    }

    /// x^T B x
    double quad(const std::vector<double>& x) const {
        double acc = 0;
        for (int r = 0; r < n; ++r) {
            double row = 0;
            for (int c = 0; c < n; ++c)
                row += at(r, c) * x[static_cast<std::size_t>(c)];
            acc += x[static_cast<std::size_t>(r)] * row;
        }
        return acc;
    }

    /// B x
    std::vector<double> apply(const std::vector<double>& x) const {
        std::vector<double> out(static_cast<std::size_t>(n), 0.0);
        for (int r = 0; r < n; ++r) {
            double acc = 0;
            for (int c = 0; c < n; ++c)
                acc += at(r, c) * x[static_cast<std::size_t>(c)];
            out[static_cast<std::size_t>(r)] = acc;
        }
        return out;
    }
};

/// The reduced KL conditions of a (rep, j, d) instance expressed as real
/// symmetric quadratic forms in the free |0bar> amplitudes; |1bar> is induced
/// by the mirror convention. residual_i(x) = x^T B_i x.
struct QuadraticSystem {
    Irrep rep;
    HalfInt j;
    int d = 1;
    std::vector<HalfInt> lattice; // descending m, one coordinate each
    std::vector<ReducedCondition> conditions;
    std::vector<SymMat> forms;

    int dim() const { return static_cast<int>(lattice.size()); }

    std::vector<double> residuals(const std::vector<double>& x) const {
        std::vector<double> out;
        out.reserve(forms.size());
        for (const auto& f : forms)
            out.push_back(f.quad(x));
        return out;
    }

    /// Sum of squared form values; the search objective.
    double objective(const std::vector<double>& x) const {
        double acc = 0;
        for (const auto& f : forms) {
            const double r = f.quad(x);
            acc += r * r;
        }
        return acc;
    }
};

/// Assembles one symmetric form per reduced condition:
///   on-diagonal (k, q):  <0|T^k_q|0> - <1|T^k_q|1>
///   off-diagonal (k, q): <0|T^k_q|1>
/// written as bilinear forms in the amp0 coordinates.
inline QuadraticSystem build_system(const Irrep& rep, HalfInt j, int d) {
    QuadraticSystem sys{rep, j, d, support_lattice(rep, j), reduced_conditions(rep, d), {}};
    if (sys.lattice.empty())
        throw std::invalid_argument("build_system: empty support lattice, no degrees of freedom");
    const int mu = sys.dim();
    std::unordered_map<std::int64_t, int> index;
    for (int i = 0; i < mu; ++i)
        index[sys.lattice[static_cast<std::size_t>(i)].twice()] = i;
    auto find = [&](HalfInt m) -> int {
        auto it = index.find(m.twice());
        return it == index.end() ? -1 : it->second;
    };

    for (const auto& cond : sys.conditions) {
        SphericalTensor tensor(j, cond.k, cond.q);
        SymMat B(mu);
        const HalfInt q(cond.q);
        for (int vi = 0; vi < mu; ++vi) {
            const HalfInt v = sys.lattice[static_cast<std::size_t>(vi)];
            if (cond.kind == ConditionKind::OnDiag) {
                if (int ui = find(v + q); ui >= 0)
                    B.at(ui, vi) += tensor.entry(v);
                if (int ui = find(v - q); ui >= 0)
                    B.at(ui, vi) -= tensor.entry(-v);
            } else {
                if (int ui = find(q - v); ui >= 0)
                    B.at(ui, vi) += tensor.entry(-v);
            }
        }
        B.symmetrize();
        sys.forms.push_back(std::move(B));
    }
    return sys;
}

} // namespace spincode
