#pragma once

#include "chernum/rational.hpp"

#include <stdexcept>
#include <vector>

namespace chernum {

// Dense square matrices over exact rationals; just enough linear algebra for
// basis transitions and cobordism-basis decompositions.
using Matrix = std::vector<std::vector<Rational>>;

inline Matrix identity_matrix(std::size_t n) {
    Matrix m(n, std::vector<Rational>(n, 0));
    for (std::size_t i = 0; i < n; ++i) m[i][i] = 1;
    return m;
}

inline Matrix matrix_mul(const Matrix& a, const Matrix& b) {
    std::size_t n = a.size(), k = b.size(), m = b.empty() ? 0 : b[0].size();
    Matrix out(n, std::vector<Rational>(m, 0));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t t = 0; t < k; ++t) {
            if (a[i][t] == 0) continue;
            for (std::size_t j = 0; j < m; ++j) out[i][j] += a[i][t] * b[t][j];
        }
    return out;
}

// Exact Gauss-Jordan inverse; throws on singular input.
inline Matrix matrix_inverse(Matrix a) {
    std::size_t n = a.size();
    Matrix inv = identity_matrix(n);
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t piv = col;
        while (piv < n && a[piv][col] == 0) ++piv;
        if (piv == n) throw std::domain_error("matrix_inverse: singular matrix");
        std::swap(a[piv], a[col]);
        std::swap(inv[piv], inv[col]);
        Rational d = a[col][col];
        for (std::size_t j = 0; j < n; ++j) {
            a[col][j] /= d;
            inv[col][j] /= d;
        }
        for (std::size_t i = 0; i < n; ++i) {
            if (i == col || a[i][col] == 0) continue;
            Rational f = a[i][col];
            for (std::size_t j = 0; j < n; ++j) {
                a[i][j] -= f * a[col][j];
                inv[i][j] -= f * inv[col][j];
            }
        }
    }
    return inv;
}

// Row vector times matrix.
inline std::vector<Rational> vec_mat(const std::vector<Rational>& v, const Matrix& m) {
    std::size_t n = m.size(), k = m.empty() ? 0 : m[0].size();
    std::vector<Rational> out(k, 0);
    for (std::size_t i = 0; i < n; ++i) {
        if (v[i] == 0) continue;
        for (std::size_t j = 0; j < k; ++j) out[j] += v[i] * m[i][j];
    }
    return out;
}

// Matrix times column vector.
inline std::vector<Rational> mat_vec(const Matrix& m, const std::vector<Rational>& v) {
    std::vector<Rational> out(m.size(), 0);
    for (std::size_t i = 0; i < m.size(); ++i)
        for (std::size_t j = 0; j < v.size(); ++j)
            if (m[i][j] != 0 && v[j] != 0) out[i] += m[i][j] * v[j];
    return out;
}

}  // namespace chernum
