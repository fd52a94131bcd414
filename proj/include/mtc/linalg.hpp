#pragma once

#include <complex>
#include <cstddef>
#include <vector>

#include "mtc/error.hpp"

namespace mtc {

using Complex = std::complex<double>;

// Dense square complex matrix, row major. Sized for desk-scale label counts.
struct CMatrix {
    std::size_t n = 0;
    std::vector<Complex> a;

    CMatrix() = default;
    explicit CMatrix(std::size_t n_) : n(n_), a(n_ * n_, Complex(0.0, 0.0)) {}

    Complex& at(std::size_t i, std::size_t j) { return a[i * n + j]; }
    const Complex& at(std::size_t i, std::size_t j) const { return a[i * n + j]; }

    static CMatrix identity(std::size_t n) {
        CMatrix m(n);
        for (std::size_t i = 0; i < n; ++i)
            m.at(i, i) = 1.0;
        return m;
    }
};

inline CMatrix operator*(const CMatrix& x, const CMatrix& y) {
    if (x.n != y.n)
        throw StructuralError("matrix size mismatch");
    CMatrix z(x.n);
    for (std::size_t i = 0; i < x.n; ++i)
        for (std::size_t k = 0; k < x.n; ++k) {
            const Complex xik = x.at(i, k);
            if (xik == Complex(0.0, 0.0))
                continue;
            for (std::size_t j = 0; j < x.n; ++j)
                z.at(i, j) += xik * y.at(k, j);
        }
    return z;
}

inline CMatrix conj_transpose(const CMatrix& x) {
    CMatrix z(x.n);
    for (std::size_t i = 0; i < x.n; ++i)
        for (std::size_t j = 0; j < x.n; ++j)
            z.at(i, j) = std::conj(x.at(j, i));
    return z;
}

inline double max_abs_diff(const CMatrix& x, const CMatrix& y) {
    if (x.n != y.n)
        throw StructuralError("matrix size mismatch");
    double m = 0.0;
    for (std::size_t i = 0; i < x.a.size(); ++i)
        m = std::max(m, std::abs(x.a[i] - y.a[i]));
    return m;
}

// Kronecker product, used for tensor powers of modular data.
inline CMatrix kronecker(const CMatrix& x, const CMatrix& y) {
    CMatrix z(x.n * y.n);
    for (std::size_t i = 0; i < x.n; ++i)
        for (std::size_t j = 0; j < x.n; ++j)
            for (std::size_t k = 0; k < y.n; ++k)
                for (std::size_t l = 0; l < y.n; ++l)
                    z.at(i * y.n + k, j * y.n + l) = x.at(i, j) * y.at(k, l);
    return z;
}

} // namespace mtc
