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

#include "ffhyp/linalg.hpp"

namespace ffhyp {

namespace {

void strip_content(Matrix<FqPoly>& m, std::size_t i, std::size_t from) {
    FqPoly g(m(i, from).context());
    for (std::size_t j = from; j < m.cols(); ++j) {
        if (m(i, j).is_zero()) continue;
        g = g.is_zero() ? m(i, j).monic() : gcd(g, m(i, j));
        if (g.degree() == 0) return;
    }
    if (g.degree() <= 0) return;
    for (std::size_t j = from; j < m.cols(); ++j)
        if (!m(i, j).is_zero()) m(i, j) = m(i, j) / g;
}

// forward elimination on the first `cols` columns; returns the pivot columns
std::vector<std::size_t> fraction_free_echelon(Matrix<FqPoly>& m, std::size_t cols) {
    std::vector<std::size_t> pivots;
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < m.rows(); ++c) {
        // smallest-degree nonzero pivot keeps entries short
        std::size_t p = m.rows();
        for (std::size_t i = r; i < m.rows(); ++i)
            if (!m(i, c).is_zero() && (p == m.rows() || m(i, c).degree() < m(p, c).degree())) p = i;
        if (p == m.rows()) continue;
        m.swap_rows(p, r);
        for (std::size_t i = r + 1; i < m.rows(); ++i) {
            if (m(i, c).is_zero()) continue;
            FqPoly g = gcd(m(r, c), m(i, c));
            FqPoly a = m(r, c) / g;
            FqPoly b = m(i, c) / g;
            for (std::size_t j = c; j < m.cols(); ++j) m(i, j) = a * m(i, j) - b * m(r, j);
            strip_content(m, i, c);
        }
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

}  // namespace

Matrix<FqPoly> clear_row_denominators(const Matrix<KElem>& m, std::vector<FqPoly>* multipliers) {
    FieldRef f = m.rows() && m.cols() ? m(0, 0).context() : nullptr;
    Matrix<FqPoly> out(m.rows(), m.cols(), FqPoly(f));
    if (multipliers) multipliers->clear();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        FqPoly L(FieldElem::one(f));
        for (std::size_t j = 0; j < m.cols(); ++j)
            if (!m(i, j).is_polynomial()) L = lcm(L, m(i, j).den());
        for (std::size_t j = 0; j < m.cols(); ++j) {
            const KElem& e = m(i, j);
            out(i, j) = e.is_polynomial() ? e.num() * L : e.num() * (L / e.den());
        }
        if (multipliers) multipliers->push_back(L);
    }
    return out;
}

FqPoly bareiss_determinant(Matrix<FqPoly> m) {
    const std::size_t n = m.rows();
    if (n == 0) fail(Errc::InvalidArgument, "determinant of an empty matrix");
    FieldRef f = m(0, 0).context();
    FqPoly prev(FieldElem::one(f));
    bool negate = false;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (m(k, k).is_zero()) {
            std::size_t p = k + 1;
            while (p < n && m(p, k).is_zero()) ++p;
            if (p == n) return FqPoly(f);
            m.swap_rows(p, k);
            negate = !negate;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                FqPoly v = m(k, k) * m(i, j) - m(i, k) * m(k, j);
                m(i, j) = prev.is_one() ? v : v.divexact(prev);
            }
            m(i, k) = FqPoly(f);
        }
        prev = m(k, k);
    }
    FqPoly d = m(n - 1, n - 1);
    return negate ? -d : d;
}

std::size_t fraction_free_rank(Matrix<FqPoly> m) { return fraction_free_echelon(m, m.cols()).size(); }

KElem determinant(const Matrix<KElem>& m) {
    std::vector<FqPoly> mult;
    Matrix<FqPoly> pm = clear_row_denominators(m, &mult);
    FqPoly d = bareiss_determinant(std::move(pm));
    FieldRef f = m(0, 0).context();
    FqPoly den(FieldElem::one(f));
    for (const auto& L : mult) den = den * L;
    return KElem(d, den);
}

std::size_t rank(const Matrix<KElem>& m) {
    if (m.rows() == 0 || m.cols() == 0) return 0;
    return fraction_free_rank(clear_row_denominators(m));
}

std::optional<std::vector<KElem>> solve_unique(const Matrix<KElem>& A, const std::vector<KElem>& b) {
    const std::size_t n = A.rows();
    if (A.cols() != n || b.size() != n) fail(Errc::InvalidArgument, "solve_unique needs a square system");
    if (n == 0) return std::vector<KElem>{};
    FieldRef f = A(0, 0).context();
    Matrix<KElem> aug(n, n + 1, KElem::zero(f));
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) aug(i, j) = A(i, j);
        aug(i, n) = b[i];
    }
    Matrix<FqPoly> m = clear_row_denominators(aug);
    for (std::size_t i = 0; i < n; ++i) strip_content(m, i, 0);
    auto piv = fraction_free_echelon(m, n);
    if (piv.size() != n) return std::nullopt;
    std::vector<KElem> x(n, KElem::zero(f));
    for (std::size_t c = n; c-- > 0;) {
        KElem acc(m(c, n));
        for (std::size_t j = c + 1; j < n; ++j)
            if (!m(c, j).is_zero()) acc -= KElem(m(c, j)) * x[j];
        x[c] = acc / KElem(m(c, c));
    }
    return x;
}

}  // namespace ffhyp
