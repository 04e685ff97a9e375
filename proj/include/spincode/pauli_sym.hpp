#pragma once

#include "spincode/clebsch_gordan.hpp"
#include "spincode/dicke.hpp"
#include "spincode/errors.hpp"

#include <algorithm>
#include <bit>
#include <complex>
#include <cstdint>
#include <string>
#include <vector>

namespace spincode {

/// An n-qubit Pauli string over letters I, X, Y, Z.
struct PauliString {
    std::string letters;

    static PauliString parse(const std::string& s) {
        for (char c : s)
            if (c != 'I' && c != 'X' && c != 'Y' && c != 'Z')
                throw std::invalid_argument("PauliString: bad letter '" + std::string(1, c) + "'");
        return {s};
    }

    int n() const { return static_cast<int>(letters.size()); }
    int weight() const {
        return static_cast<int>(std::count_if(letters.begin(), letters.end(), [](char c) { return c != 'I'; }));
    }
};

/// The S_n orbit of all Pauli strings with the given letter counts.
struct PauliClass {
    int nx = 0;
    int ny = 0;
    int nz = 0;

    int weight() const { return nx + ny + nz; }

    static PauliClass of(const PauliString& p) {
        PauliClass c;
        for (char l : p.letters) {
            if (l == 'X')
                ++c.nx;
            else if (l == 'Y')
                ++c.ny;
            else if (l == 'Z')
                ++c.nz;
        }
        return c;
    }

    std::string str() const {
        return "X^" + std::to_string(nx) + " Y^" + std::to_string(ny) + " Z^" + std::to_string(nz);
    }
};

/// E|v> for a dense 2^n statevector. X flips a bit, Y flips with the
/// (i, -i) phases, Z signs set bits.
inline CVec apply_pauli(const PauliString& p, const CVec& v) {
    const int n = p.n();
    const std::size_t dim = std::size_t{1} << n;
    if (v.size() != dim)
        throw std::invalid_argument("apply_pauli: dimension mismatch");
    std::size_t flip = 0;
    std::vector<int> ybits, zbits;
    for (int i = 0; i < n; ++i) {
        // qubit i <-> bit i
        const char l = p.letters[static_cast<std::size_t>(i)];
        if (l == 'X' || l == 'Y')
            flip |= std::size_t{1} << i;
        if (l == 'Y')
            ybits.push_back(i);
        if (l == 'Z')
            zbits.push_back(i);
    }
    CVec out(dim);
    for (std::size_t s = 0; s < dim; ++s) {
        Complex phase{1.0, 0.0};
        for (int yb : ybits)
            phase *= (s >> yb) & 1 ? Complex(0, -1) : Complex(0, 1); // Y|1>=-i|0>, Y|0>=i|1>
        for (int zb : zbits)
            if ((s >> zb) & 1)
                phase = -phase;
        out[s ^ flip] += phase * v[s];
    }
    return out;
}

namespace detail {

/// Visits every distinct arrangement of the class letters on n sites.
template <typename F> void for_each_arrangement(int n, const PauliClass& cls, F&& fn) {
    std::string letters(static_cast<std::size_t>(n - cls.weight()), 'I');
    letters += std::string(static_cast<std::size_t>(cls.nx), 'X');
    letters += std::string(static_cast<std::size_t>(cls.ny), 'Y');
    letters += std::string(static_cast<std::size_t>(cls.nz), 'Z');
    std::sort(letters.begin(), letters.end());
    do {
        fn(PauliString{letters});
    } while (std::next_permutation(letters.begin(), letters.end()));
}

inline BigInt arrangement_count(int n, const PauliClass& cls) {
    const BigInt nf = factorial(n);
    return nf / (factorial(cls.nx) * factorial(cls.ny) * factorial(cls.nz) * factorial(n - cls.weight()));
}

} // namespace detail

/// Sym(E)|v> = (1/n!) sum_sigma P_sigma^dagger E P_sigma |v>, evaluated as a
/// uniform average over the distinct letter arrangements.
inline CVec sym_apply(int n, const PauliClass& cls, const CVec& v) {
    CVec acc(v.size());
    std::size_t count = 0;
    detail::for_each_arrangement(n, cls, [&](const PauliString& p) {
        CVec term = apply_pauli(p, v);
        for (std::size_t s = 0; s < acc.size(); ++s)
            acc[s] += term[s];
        ++count;
    });
    const double inv = 1.0 / static_cast<double>(count);
    for (auto& c : acc)
        c *= inv;
    return acc;
}

/// Dense operator on n qubits, row-major 2^n x 2^n.
struct DenseOp {
    int n = 0;
    CVec mat;

    std::size_t dim() const { return std::size_t{1} << n; }
    Complex& at(std::size_t r, std::size_t c) { return mat[r * dim() + c]; }
    Complex at(std::size_t r, std::size_t c) const { return mat[r * dim() + c]; }

    CVec apply(const CVec& v) const {
        const std::size_t d = dim();
        CVec out(d);
        for (std::size_t r = 0; r < d; ++r) {
            Complex acc = 0;
            for (std::size_t c = 0; c < d; ++c)
                acc += mat[r * d + c] * v[c];
            out[r] = acc;
        }
        return out;
    }

    Complex sandwich(const CVec& bra, const CVec& ket) const {
        const std::size_t d = dim();
        Complex acc = 0;
        for (std::size_t r = 0; r < d; ++r) {
            if (bra[r] == Complex{})
                continue;
            Complex row = 0;
            for (std::size_t c = 0; c < d; ++c)
                row += mat[r * d + c] * ket[c];
            acc += std::conj(bra[r]) * row;
        }
        return acc;
    }
};

constexpr int kSymDenseGuard = 10;

/// Sym(E) as a dense operator (n <= 10).
inline DenseOp sym_error_dense(const PauliString& p) {
    const int n = p.n();
    if (n > kSymDenseGuard)
        throw ResourceError("sym_error_dense: limited to n <= 10");
    const PauliClass cls = PauliClass::of(p);
    const std::size_t dim = std::size_t{1} << n;
    DenseOp op{n, CVec(dim * dim)};
    std::size_t count = 0;
    detail::for_each_arrangement(n, cls, [&](const PauliString& arr) {
        CVec basis(dim);
        for (std::size_t c = 0; c < dim; ++c) {
            std::fill(basis.begin(), basis.end(), Complex{});
            basis[c] = 1.0;
            CVec col = apply_pauli(arr, basis);
            for (std::size_t r = 0; r < dim; ++r)
                op.at(r, c) += col[r];
        }
        ++count;
    });
    const double inv = 1.0 / static_cast<double>(count);
    for (auto& v : op.mat)
        v *= inv;
    return op;
}

/// Sph(E) = Sym(E_1) ... Sym(E_w) over the weight-1 factors of E (n <= 10).
inline DenseOp sph_error_dense(const PauliString& p) {
    const int n = p.n();
    if (n > kSymDenseGuard)
        throw ResourceError("sph_error_dense: limited to n <= 10");
    const std::size_t dim = std::size_t{1} << n;

    std::vector<PauliClass> factors;
    for (char l : p.letters) {
        if (l == 'I')
            continue;
        PauliClass c;
        if (l == 'X')
            c.nx = 1;
        else if (l == 'Y')
            c.ny = 1;
        else
            c.nz = 1;
        factors.push_back(c);
    }

    DenseOp op{n, CVec(dim * dim)};
    CVec basis(dim);
    for (std::size_t c = 0; c < dim; ++c) {
        std::fill(basis.begin(), basis.end(), Complex{});
        basis[c] = 1.0;
        CVec col = basis;
        for (auto it = factors.rbegin(); it != factors.rend(); ++it)
            col = sym_apply(n, *it, col);
        for (std::size_t r = 0; r < dim; ++r)
            op.at(r, c) = col[r];
    }
    return op;
}

/// Exact <D_wbra^n| Sym(E) |D_wket^n> for any E in the class, by counting
/// letter placements against a reference ket string: a X's, c Y's, e Z's on
/// set bits contribute the flip bookkeeping
///   w_bra = w_ket + nx + ny - 2a - 2c
/// and the phase i^{ny} (-1)^{c+e}. Inconsistent weights give exact zero.
inline Complex sym_matrix_element(int n, int w_bra, const PauliClass& cls, int w_ket) {
    if (w_bra < 0 || w_bra > n || w_ket < 0 || w_ket > n)
        return {};
    using detail::binomial;
    BigRational sum = 0;
    for (int a = 0; a <= std::min(cls.nx, w_ket); ++a) {
        for (int c = 0; c <= std::min(cls.ny, w_ket - a); ++c) {
            if (w_ket + cls.nx + cls.ny - 2 * a - 2 * c != w_bra)
                continue;
            for (int e = 0; e <= std::min(cls.nz, w_ket - a - c); ++e) {
                BigInt ways = binomial(w_ket, a) * binomial(w_ket - a, c) * binomial(w_ket - a - c, e);
                const int zeros = n - w_ket;
                ways *= binomial(zeros, cls.nx - a) * binomial(zeros - (cls.nx - a), cls.ny - c) *
                        binomial(zeros - (cls.nx - a) - (cls.ny - c), cls.nz - e);
                if (ways == 0)
                    continue;
                if ((c + e) % 2)
                    sum -= BigRational(ways);
                else
                    sum += BigRational(ways);
            }
        }
    }
    if (sum == 0)
        return {};
    sum /= BigRational(detail::arrangement_count(n, cls));
    // sqrt(C(n,w_ket)/C(n,w_bra)) from the Dicke normalizations
    const double scale =
        SignedSqrtRational::sqrt_to_double(BigRational(detail::binomial(n, w_ket), detail::binomial(n, w_bra)));
    const double mag = sum.convert_to<double>() * scale;
    switch (cls.ny % 4) {
    case 0: return {mag, 0};
    case 1: return {0, mag};
    case 2: return {-mag, 0};
    default: return {0, -mag};
    }
}

} // namespace spincode
