/*
   Copyright 2026 The thuetwist authors

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

#ifndef THUETWIST_MATRIX_HPP
#define THUETWIST_MATRIX_HPP

#include <utility>
#include <vector>

#include "thuetwist/errors.hpp"
#include "thuetwist/integer.hpp"
#include "thuetwist/polynomial.hpp"

namespace thuetwist {

/** Dense matrix of rationals, row major. */
class RatMatrix {
  public:
    RatMatrix(int rows, int cols)
        : rows_(rows), cols_(cols), a_(static_cast<size_t>(rows) * cols, Rational(0)) {
        if (rows < 0 || cols < 0) throw domain_error("negative matrix dimension");
    }
    static RatMatrix identity(int n) {
        RatMatrix m(n, n);
        for (int i = 0; i < n; ++i) m.at(i, i) = 1;
        return m;
    }

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    Rational& at(int i, int j) { return a_[static_cast<size_t>(i) * cols_ + j]; }
    const Rational& at(int i, int j) const { return a_[static_cast<size_t>(i) * cols_ + j]; }

  private:
    int rows_, cols_;
    std::vector<Rational> a_;
};

namespace detail {

/// Characteristic polynomial of an integer matrix by the Faddeev-LeVerrier
/// recurrence. All divisions are exact over the integers.
inline std::vector<Integer> charpoly_int(const std::vector<Integer>& n, int d) {
    auto idx = [d](int i, int j) { return static_cast<size_t>(i) * d + j; };
    std::vector<Integer> c(static_cast<size_t>(d) + 1, Integer(0));
    c[static_cast<size_t>(d)] = 1;
    std::vector<Integer> m(static_cast<size_t>(d) * d, Integer(0));  // M_0 = 0
    for (int k = 1; k <= d; ++k) {
        // M_k = N * M_{k-1} + c_{d-k+1} * I
        std::vector<Integer> nm(static_cast<size_t>(d) * d, Integer(0));
        for (int i = 0; i < d; ++i)
            for (int l = 0; l < d; ++l) {
                const Integer& nil = n[idx(i, l)];
                if (nil == 0) continue;
                for (int j = 0; j < d; ++j) nm[idx(i, j)] += nil * m[idx(l, j)];
            }
        for (int i = 0; i < d; ++i) nm[idx(i, i)] += c[static_cast<size_t>(d - k + 1)];
        // c_{d-k} = -tr(N * M_k) / k
        Integer tr(0);
        for (int i = 0; i < d; ++i)
            for (int l = 0; l < d; ++l) tr += n[idx(i, l)] * nm[idx(l, i)];
        c[static_cast<size_t>(d - k)] = -int_divexact(tr, Integer(k));
        m = std::move(nm);
    }
    return c;
}

}  // namespace detail

/**
 * Exact characteristic polynomial det(X*I - M) of a square rational matrix,
 * returned monic of degree rows(). The matrix is scaled to an integer one by
 * the lcm D of all entry denominators; with N = D*M,
 * charpoly_M(X) = D^{-d} charpoly_N(D*X).
 */
inline RatPoly charpoly(const RatMatrix& m) {
    if (m.rows() != m.cols()) throw domain_error("charpoly of non-square matrix");
    int d = m.rows();
    if (d == 0) return RatPoly(std::vector<Rational>{Rational(1)});
    Integer den(1);
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j) den = int_lcm(den, m.at(i, j).get_den());
    std::vector<Integer> n(static_cast<size_t>(d) * d);
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j) {
            Rational v = Rational(den) * m.at(i, j);
            n[static_cast<size_t>(i) * d + j] = v.get_num();
        }
    std::vector<Integer> ci = detail::charpoly_int(n, d);
    // coefficient of X^k is ci[k] / den^{d-k}
    std::vector<Rational> rc(static_cast<size_t>(d) + 1);
    for (int k = 0; k <= d; ++k) {
        Rational v(ci[static_cast<size_t>(k)]);
        v /= Rational(int_pow(den, static_cast<unsigned long>(d - k)));
        rc[static_cast<size_t>(k)] = v;
    }
    return RatPoly(std::move(rc));
}

/// Exact rank over the rationals (Gaussian elimination).
inline int rank(RatMatrix m) {
    int r = 0;
    for (int col = 0; col < m.cols() && r < m.rows(); ++col) {
        int piv = -1;
        for (int i = r; i < m.rows(); ++i)
            if (m.at(i, col) != 0) {
                piv = i;
                break;
            }
        if (piv < 0) continue;
        if (piv != r)
            for (int j = col; j < m.cols(); ++j) std::swap(m.at(piv, j), m.at(r, j));
        Rational inv = Rational(1) / m.at(r, col);
        for (int i = r + 1; i < m.rows(); ++i) {
            if (m.at(i, col) == 0) continue;
            Rational f = m.at(i, col) * inv;
            for (int j = col; j < m.cols(); ++j) m.at(i, j) -= f * m.at(r, j);
        }
        ++r;
    }
    return r;
}

}  // namespace thuetwist

#endif
