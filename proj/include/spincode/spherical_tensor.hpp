#pragma once

#include "spincode/clebsch_gordan.hpp"
#include "spincode/wigner_gates.hpp"

#include <complex>
#include <map>
#include <vector>

namespace spincode {

/// Irreducible rank-k spherical tensor T^k_q on spin j:
///   T^k_q = sqrt((2k+1)/(2j+1)) sum_m C^{j m+q}_{k q, j m} |j,m+q><j,m|.
/// The only nonzero entry in column m sits at row m+q; entries are real and
/// kept exact until a float is requested. Index order is m descending from
/// +j, so row/column 0 is m = +j.
class SphericalTensor {
  public:
    SphericalTensor(HalfInt j, int k, int q) : j_(j), k_(k), q_(q) {
        if (j.twice() < 0)
            throw std::invalid_argument("SphericalTensor: negative spin");
        if (k < 0 || k > j.twice()) // rank bounded by 2j
            throw std::out_of_range("SphericalTensor: rank k out of range 0 <= k <= 2j");
        if (std::abs(q) > k)
            throw std::out_of_range("SphericalTensor: component |q| > k");
        const std::int64_t dim = j.twice() + 1;
        exact_.resize(static_cast<std::size_t>(dim));
        const SignedSqrtRational norm(1, BigRational(2 * k + 1, j.twice() + 1));
        const HalfInt hk(k), hq(q);
        for (std::int64_t c = 0; c < dim; ++c) {
            const HalfInt m = HalfInt::from_twice(j.twice() - 2 * c);
            const HalfInt mq = m + hq;
            if (mq.abs() > j)
                continue; // stays zero
            // State-first coupling order, so that T^1_0 = +J_z / |J_z|.
            exact_[static_cast<std::size_t>(c)] = norm * cg(j, m, hk, hq, j, mq);
        }
    }

    HalfInt j() const { return j_; }
    int k() const { return k_; }
    int q() const { return q_; }
    std::int64_t dim() const { return j_.twice() + 1; }

    std::int64_t index_of(HalfInt m) const { return (j_ - m).to_integer(); }
    HalfInt m_of_index(std::int64_t i) const { return HalfInt::from_twice(j_.twice() - 2 * i); }

    /// Exact value of the entry (m+q, m); zero when m+q falls outside [-j, j].
    const SignedSqrtRational& entry_exact(HalfInt m) const {
        return exact_[static_cast<std::size_t>(index_of(m))];
    }

    double entry(HalfInt m) const { return entry_exact(m).to_double(); }

    /// Dense real matrix, row-major.
    std::vector<double> dense() const {
        const std::int64_t n = dim();
        std::vector<double> mat(static_cast<std::size_t>(n * n), 0.0);
        for (std::int64_t c = 0; c < n; ++c) {
            const std::int64_t r = c - q_; // index of m+q when column index is c
            if (r < 0 || r >= n)
                continue;
            mat[static_cast<std::size_t>(r * n + c)] = exact_[static_cast<std::size_t>(c)].to_double();
        }
        return mat;
    }

    CVec apply(const CVec& v) const {
        if (static_cast<std::int64_t>(v.size()) != dim())
            throw std::invalid_argument("SphericalTensor::apply: dimension mismatch");
        CVec out(v.size());
        const std::int64_t n = dim();
        for (std::int64_t c = 0; c < n; ++c) {
            const std::int64_t r = c - q_;
            if (r < 0 || r >= n)
                continue;
            out[static_cast<std::size_t>(r)] =
                exact_[static_cast<std::size_t>(c)].to_double() * v[static_cast<std::size_t>(c)];
        }
        return out;
    }

    /// <bra| T |ket> for amplitude maps keyed by m; the bra coefficients are
    /// conjugated when complex.
    template <typename Map> auto sandwich(const Map& bra, const Map& ket) const {
        using Value = typename Map::mapped_type;
        Value acc{};
        const HalfInt hq(q_);
        for (const auto& [m, amp] : ket) {
            const HalfInt mq = m + hq;
            if (mq.abs() > j_)
                continue;
            auto it = bra.find(mq);
            if (it == bra.end())
                continue;
            if constexpr (std::is_same_v<Value, Complex>)
                acc += std::conj(it->second) * entry(m) * amp;
            else
                acc += it->second * entry(m) * amp;
        }
        return acc;
    }

  private:
    HalfInt j_;
    int k_, q_;
    std::vector<SignedSqrtRational> exact_; // indexed by column (descending m)
};

/// Hilbert-Schmidt inner product Tr(A^dagger B); structurally zero unless the
/// two tensors shift by the same q.
inline double trace_inner(const SphericalTensor& a, const SphericalTensor& b) {
    if (a.j() != b.j())
        throw std::invalid_argument("trace_inner: mismatched spins");
    if (a.q() != b.q())
        return 0.0;
    double acc = 0;
    for (std::int64_t c = 0; c < a.dim(); ++c) {
        const HalfInt m = a.m_of_index(c);
        acc += a.entry(m) * b.entry(m);
    }
    return acc;
}

/// Expansion T1*T2 = sum_k c_k T^k_{q1+q2} by trace projection onto the
/// orthonormal tensor basis. Returns k -> c_k over the admissible rank range.
inline std::map<int, double> decompose_product(const SphericalTensor& t1, const SphericalTensor& t2) {
    if (t1.j() != t2.j())
        throw std::invalid_argument("decompose_product: mismatched spins");
    const HalfInt j = t1.j();
    const std::int64_t n = t1.dim();
    const int q = t1.q() + t2.q();

    // Product entries: column m -> value at row m + q1 + q2.
    std::vector<double> prod(static_cast<std::size_t>(n), 0.0);
    for (std::int64_t c = 0; c < n; ++c) {
        const HalfInt m = t1.m_of_index(c);
        const HalfInt mid = m + HalfInt(t2.q());
        if (mid.abs() > j)
            continue;
        const HalfInt top = mid + HalfInt(t1.q());
        if (top.abs() > j)
            continue;
        prod[static_cast<std::size_t>(c)] = t1.entry(mid) * t2.entry(m);
    }

    const int k_lo = std::max(std::abs(t1.k() - t2.k()), std::abs(q));
    const int k_hi = std::min(t1.k() + t2.k(), static_cast<int>(j.twice()));
    std::map<int, double> coeffs;
    for (int k = k_lo; k <= k_hi; ++k) {
        SphericalTensor basis(j, k, q);
        double c_k = 0;
        for (std::int64_t c = 0; c < n; ++c)
            c_k += basis.entry(t1.m_of_index(c)) * prod[static_cast<std::size_t>(c)];
        coeffs[k] = c_k;
    }
    return coeffs;
}

/// Frobenius norm of T1*T2 - sum_k c_k T^k_{q1+q2}; diagnostic for the
/// completeness of the expansion.
inline double product_reconstruction_residual(const SphericalTensor& t1, const SphericalTensor& t2,
                                              const std::map<int, double>& coeffs) {
    const HalfInt j = t1.j();
    const std::int64_t n = t1.dim();
    const int q = t1.q() + t2.q();
    std::vector<SphericalTensor> basis;
    basis.reserve(coeffs.size());
    for (const auto& [k, c] : coeffs)
        basis.emplace_back(j, k, q);
    double acc = 0;
    for (std::int64_t c = 0; c < n; ++c) {
        const HalfInt m = t1.m_of_index(c);
        double entry = 0;
        const HalfInt mid = m + HalfInt(t2.q());
        if (mid.abs() <= j) {
            const HalfInt top = mid + HalfInt(t1.q());
            if (top.abs() <= j)
                entry = t1.entry(mid) * t2.entry(m);
        }
        std::size_t i = 0;
        for (const auto& [k, ck] : coeffs)
            entry -= ck * basis[i++].entry(m);
        acc += entry * entry;
    }
    return std::sqrt(acc);
}

} // namespace spincode
