/*
   Copyright 2026 The ffhyp Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#ifndef FFHYP_LINALG_HPP
#define FFHYP_LINALG_HPP

#include <cstddef>
#include <optional>
#include <vector>

#include "ffhyp/kelem.hpp"

namespace ffhyp {

template <class R>
class Matrix {
   public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols, const R& fill) : rows_(rows), cols_(cols), a_(rows * cols, fill) {}

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }
    R& operator()(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
    const R& operator()(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }
    void swap_rows(std::size_t i, std::size_t k) {
        if (i == k) return;
        for (std::size_t j = 0; j < cols_; ++j) std::swap(a_[i * cols_ + j], a_[k * cols_ + j]);
    }

   private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<R> a_;
};

/*
   Row reduction over a field with cheap division (F_{q'}). Returns the pivot columns;
   the matrix is left in reduced row echelon form.
*/
template <class R>
std::vector<std::size_t> rref(Matrix<R>& m) {
    std::vector<std::size_t> pivots;
    std::size_t r = 0;
    for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
        std::size_t p = r;
        while (p < m.rows() && m(p, c).is_zero()) ++p;
        if (p == m.rows()) continue;
        m.swap_rows(p, r);
        R inv = R::one(m(r, c).context()) / m(r, c);
        for (std::size_t j = c; j < m.cols(); ++j) m(r, j) = m(r, j) * inv;
        for (std::size_t i = 0; i < m.rows(); ++i) {
            if (i == r || m(i, c).is_zero()) continue;
            R f = m(i, c);
            for (std::size_t j = c; j < m.cols(); ++j) m(i, j) = m(i, j) - f * m(r, j);
        }
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

template <class R>
std::size_t rank(Matrix<R> m) {
    return rref(m).size();
}

template <class R>
R determinant(Matrix<R> m) {
    const std::size_t n = m.rows();
    if (n == 0) fail(Errc::InvalidArgument, "determinant of an empty matrix");
    R det = R::one(m(0, 0).context());
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t p = c;
        while (p < n && m(p, c).is_zero()) ++p;
        if (p == n) return R::zero(det.context());
        if (p != c) {
            m.swap_rows(p, c);
            det = -det;
        }
        det = det * m(c, c);
        R inv = R::one(det.context()) / m(c, c);
        for (std::size_t i = c + 1; i < n; ++i) {
            if (m(i, c).is_zero()) continue;
            R f = m(i, c) * inv;
            for (std::size_t j = c; j < n; ++j) m(i, j) = m(i, j) - f * m(c, j);
        }
    }
    return det;
}

// a solution of A x = b with free variables zero, if one exists
template <class R>
std::optional<std::vector<R>> solve(const Matrix<R>& A, const std::vector<R>& b, const R& zero) {
    Matrix<R> m(A.rows(), A.cols() + 1, zero);
    for (std::size_t i = 0; i < A.rows(); ++i) {
        for (std::size_t j = 0; j < A.cols(); ++j) m(i, j) = A(i, j);
        m(i, A.cols()) = b[i];
    }
    auto piv = rref(m);
    if (!piv.empty() && piv.back() == A.cols()) return std::nullopt;
    std::vector<R> x(A.cols(), zero);
    for (std::size_t r = 0; r < piv.size(); ++r) x[piv[r]] = m(r, A.cols());
    return x;
}

// basis of {x : A x = 0}
template <class R>
std::vector<std::vector<R>> nullspace(Matrix<R> A, const R& zero) {
    auto piv = rref(A);
    std::vector<bool> is_pivot(A.cols(), false);
    for (auto c : piv) is_pivot[c] = true;
    std::vector<std::vector<R>> out;
    for (std::size_t f = 0; f < A.cols(); ++f) {
        if (is_pivot[f]) continue;
        std::vector<R> v(A.cols(), zero);
        v[f] = R::one(zero.context());
        for (std::size_t r = 0; r < piv.size(); ++r) v[piv[r]] = -A(r, f);
        out.push_back(std::move(v));
    }
    return out;
}

/*
   Determinant over a commutative ring without division: expansion along rows with
   memoized minors over column subsets, 2^n n products.
*/
template <class T>
T laplace_determinant(const Matrix<T>& m, const T& zero) {
    const std::size_t n = m.rows();
    if (n == 0 || n > 20) fail(Errc::InvalidArgument, "unsupported matrix size for subset expansion");
    // minors of the bottom k rows on column subsets of size k
    std::vector<T> minor(std::size_t(1) << n, zero);
    for (std::size_t j = 0; j < n; ++j) {
        minor[std::size_t(1) << j] = m(n - 1, j);
    }
    for (std::size_t k = 2; k <= n; ++k) {
        const std::size_t row = n - k;
        for (std::size_t s = 1; s < minor.size(); ++s) {
            if (static_cast<std::size_t>(__builtin_popcountll(s)) != k) continue;
            T acc = zero;
            std::size_t idx = 0;
            for (std::size_t j = 0; j < n; ++j) {
                if (!(s >> j & 1)) continue;
                const std::size_t rest = s & ~(std::size_t(1) << j);
                if (!m(row, j).is_zero() && !minor[rest].is_zero()) {
                    T term = m(row, j) * minor[rest];
                    if (idx % 2 == 0)
                        acc = acc + term;
                    else
                        acc = acc - term;
                }
                ++idx;
            }
            minor[s] = std::move(acc);
        }
        // minors of size k-1 are no longer needed
        for (std::size_t s = 1; s < minor.size(); ++s)
            if (static_cast<std::size_t>(__builtin_popcountll(s)) == k - 1) minor[s] = zero;
    }
    return minor.back();
}

// fraction-free elimination over F_{q'}[tau]

// multiply each row by the lcm of its denominators
Matrix<FqPoly> clear_row_denominators(const Matrix<KElem>& m, std::vector<FqPoly>* multipliers = nullptr);
FqPoly bareiss_determinant(Matrix<FqPoly> m);
std::size_t fraction_free_rank(Matrix<FqPoly> m);

KElem determinant(const Matrix<KElem>& m);
std::size_t rank(const Matrix<KElem>& m);
// the unique solution of A x = b (A square), or nullopt if A is singular
std::optional<std::vector<KElem>> solve_unique(const Matrix<KElem>& A, const std::vector<KElem>& b);

}  // namespace ffhyp

#endif
