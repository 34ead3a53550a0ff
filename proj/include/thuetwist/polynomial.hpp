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

#ifndef THUETWIST_POLYNOMIAL_HPP
#define THUETWIST_POLYNOMIAL_HPP

#include <algorithm>
#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

#include "thuetwist/errors.hpp"
#include "thuetwist/integer.hpp"

namespace thuetwist {

/**
 * Univariate polynomial with Integer coefficients, stored lowest degree
 * first. The zero polynomial is the empty coefficient vector; otherwise the
 * leading coefficient is nonzero.
 */
class IntPoly {
  public:
    IntPoly() = default;
    explicit IntPoly(std::vector<Integer> coeffs) : c_(std::move(coeffs)) { normalize(); }
    IntPoly(std::initializer_list<long> coeffs) {
        for (long v : coeffs) c_.emplace_back(v);
        normalize();
    }

    static IntPoly zero() { return IntPoly(); }
    static IntPoly constant(Integer v) { return IntPoly(std::vector<Integer>{std::move(v)}); }
    /// X^k
    static IntPoly monomial(int k, Integer v = 1) {
        std::vector<Integer> c(static_cast<size_t>(k) + 1, Integer(0));
        c.back() = std::move(v);
        return IntPoly(std::move(c));
    }

    bool is_zero() const { return c_.empty(); }
    /// Degree; -1 for the zero polynomial.
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    const Integer& lead() const {
        if (is_zero()) throw domain_error("lead of zero polynomial");
        return c_.back();
    }
    Integer coeff(int k) const {
        if (k < 0 || k >= static_cast<int>(c_.size())) return Integer(0);
        return c_[static_cast<size_t>(k)];
    }
    const std::vector<Integer>& coeffs() const { return c_; }

    bool operator==(const IntPoly& o) const { return c_ == o.c_; }
    bool operator!=(const IntPoly& o) const { return !(*this == o); }

    IntPoly operator-() const {
        std::vector<Integer> r(c_);
        for (auto& v : r) v = -v;
        return IntPoly(std::move(r));
    }

    friend IntPoly operator+(const IntPoly& a, const IntPoly& b) {
        std::vector<Integer> r(std::max(a.c_.size(), b.c_.size()), Integer(0));
        for (size_t i = 0; i < a.c_.size(); ++i) r[i] += a.c_[i];
        for (size_t i = 0; i < b.c_.size(); ++i) r[i] += b.c_[i];
        return IntPoly(std::move(r));
    }
    friend IntPoly operator-(const IntPoly& a, const IntPoly& b) { return a + (-b); }
    friend IntPoly operator*(const IntPoly& a, const IntPoly& b) {
        if (a.is_zero() || b.is_zero()) return IntPoly();
        std::vector<Integer> r(a.c_.size() + b.c_.size() - 1, Integer(0));
        for (size_t i = 0; i < a.c_.size(); ++i)
            for (size_t j = 0; j < b.c_.size(); ++j) r[i + j] += a.c_[i] * b.c_[j];
        return IntPoly(std::move(r));
    }
    friend IntPoly operator*(const Integer& s, const IntPoly& a) {
        std::vector<Integer> r(a.c_);
        for (auto& v : r) v *= s;
        return IntPoly(std::move(r));
    }

    /// Substitution p(q(X)), exact.
    IntPoly compose(const IntPoly& q) const {
        IntPoly acc;  // Horner on coefficients, highest first
        for (int k = degree(); k >= 0; --k) acc = acc * q + IntPoly::constant(coeff(k));
        return acc;
    }

    IntPoly derivative() const {
        if (degree() < 1) return IntPoly();
        std::vector<Integer> r(c_.size() - 1);
        for (size_t i = 1; i < c_.size(); ++i) r[i - 1] = Integer(static_cast<long>(i)) * c_[i];
        return IntPoly(std::move(r));
    }

    Integer eval(const Integer& x) const {
        Integer acc(0);
        for (int k = degree(); k >= 0; --k) acc = acc * x + coeff(k);
        return acc;
    }
    Rational eval(const Rational& x) const {
        Rational acc(0);
        for (int k = degree(); k >= 0; --k) acc = acc * x + Rational(coeff(k));
        return acc;
    }

    /// gcd of the coefficients (nonnegative); 0 for the zero polynomial.
    Integer content() const {
        Integer g(0);
        for (const auto& v : c_) g = int_gcd(g, v);
        return g;
    }

    /// Exact division by a monic divisor. Throws if the division leaves a
    /// remainder.
    IntPoly divexact_monic(const IntPoly& d) const {
        if (d.is_zero() || d.lead() != 1) throw domain_error("divisor must be monic");
        std::vector<Integer> rem(c_);
        int dd = d.degree();
        int qd = degree() - dd;
        if (qd < 0) {
            if (!is_zero()) throw domain_error("inexact monic division");
            return IntPoly();
        }
        std::vector<Integer> q(static_cast<size_t>(qd) + 1, Integer(0));
        for (int k = qd; k >= 0; --k) {
            Integer f = rem[static_cast<size_t>(k + dd)];
            q[static_cast<size_t>(k)] = f;
            if (f != 0)
                for (int i = 0; i <= dd; ++i) rem[static_cast<size_t>(k + i)] -= f * d.coeff(i);
        }
        for (const auto& v : rem)
            if (v != 0) throw domain_error("inexact monic division");
        return IntPoly(std::move(q));
    }

    /// True iff all odd-degree coefficients vanish, i.e. the polynomial is a
    /// polynomial in X^2 (roots then come in (r, -r) pairs).
    bool is_even_structured() const {
        for (size_t i = 1; i < c_.size(); i += 2)
            if (c_[i] != 0) return false;
        return !is_zero();
    }

    /// p(-X)
    IntPoly reflected() const {
        std::vector<Integer> r(c_);
        for (size_t i = 1; i < r.size(); i += 2) r[i] = -r[i];
        return IntPoly(std::move(r));
    }

    std::string to_string(const std::string& var = "X") const;

  private:
    void normalize() {
        while (!c_.empty() && c_.back() == 0) c_.pop_back();
    }
    std::vector<Integer> c_;
};

/** Univariate polynomial over the rationals, lowest degree first. */
class RatPoly {
  public:
    RatPoly() = default;
    explicit RatPoly(std::vector<Rational> coeffs) : c_(std::move(coeffs)) {
        for (auto& v : c_) v.canonicalize();
        normalize();
    }
    explicit RatPoly(const IntPoly& p) {
        c_.reserve(p.coeffs().size());
        for (const auto& v : p.coeffs()) c_.emplace_back(v);
    }

    bool is_zero() const { return c_.empty(); }
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    const Rational& lead() const {
        if (is_zero()) throw domain_error("lead of zero polynomial");
        return c_.back();
    }
    Rational coeff(int k) const {
        if (k < 0 || k >= static_cast<int>(c_.size())) return Rational(0);
        return c_[static_cast<size_t>(k)];
    }
    const std::vector<Rational>& coeffs() const { return c_; }

    bool operator==(const RatPoly& o) const { return c_ == o.c_; }

    friend RatPoly operator+(const RatPoly& a, const RatPoly& b) {
        std::vector<Rational> r(std::max(a.c_.size(), b.c_.size()), Rational(0));
        for (size_t i = 0; i < a.c_.size(); ++i) r[i] += a.c_[i];
        for (size_t i = 0; i < b.c_.size(); ++i) r[i] += b.c_[i];
        return RatPoly(std::move(r));
    }
    friend RatPoly operator-(const RatPoly& a, const RatPoly& b) {
        std::vector<Rational> r(std::max(a.c_.size(), b.c_.size()), Rational(0));
        for (size_t i = 0; i < a.c_.size(); ++i) r[i] += a.c_[i];
        for (size_t i = 0; i < b.c_.size(); ++i) r[i] -= b.c_[i];
        return RatPoly(std::move(r));
    }
    friend RatPoly operator*(const RatPoly& a, const RatPoly& b) {
        if (a.is_zero() || b.is_zero()) return RatPoly();
        std::vector<Rational> r(a.c_.size() + b.c_.size() - 1, Rational(0));
        for (size_t i = 0; i < a.c_.size(); ++i)
            for (size_t j = 0; j < b.c_.size(); ++j) r[i + j] += a.c_[i] * b.c_[j];
        return RatPoly(std::move(r));
    }
    friend RatPoly operator*(const Rational& s, const RatPoly& a) {
        std::vector<Rational> r(a.c_);
        for (auto& v : r) v *= s;
        return RatPoly(std::move(r));
    }

    RatPoly monic() const {
        if (is_zero()) return *this;
        Rational inv = Rational(1) / lead();
        return inv * *this;
    }

    RatPoly derivative() const {
        if (degree() < 1) return RatPoly();
        std::vector<Rational> r(c_.size() - 1);
        for (size_t i = 1; i < c_.size(); ++i) r[i - 1] = Rational(static_cast<long>(i)) * c_[i];
        return RatPoly(std::move(r));
    }

    /// Euclidean remainder of *this by d (d nonzero).
    RatPoly rem(const RatPoly& d) const {
        if (d.is_zero()) throw domain_error("division by zero polynomial");
        RatPoly r = *this;
        Rational dl_inv = Rational(1) / d.lead();
        while (!r.is_zero() && r.degree() >= d.degree()) {
            int shift = r.degree() - d.degree();
            Rational f = r.lead() * dl_inv;
            std::vector<Rational> rc(r.c_);
            for (int i = 0; i <= d.degree(); ++i)
                rc[static_cast<size_t>(i + shift)] -= f * d.coeff(i);
            r = RatPoly(std::move(rc));
        }
        return r;
    }

    /// Minimal positive integer s with s * (*this) integral, and that scaled
    /// polynomial. For a monic input the scaled polynomial is primitive.
    std::pair<Integer, IntPoly> clear_denominators() const {
        Integer s(1);
        for (const auto& v : c_) s = int_lcm(s, v.get_den());
        std::vector<Integer> r;
        r.reserve(c_.size());
        for (const auto& v : c_) {
            Rational q = Rational(s) * v;
            r.push_back(q.get_num());
        }
        return {s, IntPoly(std::move(r))};
    }

    bool is_integral() const {
        for (const auto& v : c_)
            if (v.get_den() != 1) return false;
        return true;
    }

    std::string to_string(const std::string& var = "X") const;

  private:
    void normalize() {
        while (!c_.empty() && c_.back() == 0) c_.pop_back();
    }
    std::vector<Rational> c_;
};

/// Monic gcd over the rationals (Euclid). gcd(0, 0) = 0.
inline RatPoly poly_gcd(RatPoly a, RatPoly b) {
    while (!b.is_zero()) {
        RatPoly r = a.rem(b);
        a = std::move(b);
        b = std::move(r);
    }
    return a.monic();
}

/// True iff gcd(g, g') is constant, i.e. g has no repeated complex root.
inline bool squarefree_check(const IntPoly& g) {
    if (g.is_zero()) throw domain_error("squarefree_check of zero polynomial");
    if (g.degree() == 0) return true;
    RatPoly d = poly_gcd(RatPoly(g), RatPoly(g.derivative()));
    return d.degree() == 0;
}

/// g / gcd(g, g') as a primitive integer polynomial with positive leading
/// coefficient: same roots as g, each once.
inline IntPoly squarefree_part(const IntPoly& g) {
    if (g.is_zero()) throw domain_error("squarefree_part of zero polynomial");
    RatPoly d = poly_gcd(RatPoly(g), RatPoly(g.derivative()));
    if (d.degree() == 0) {
        IntPoly r = g;
        Integer c = int_gcd(r.content(), Integer(0));
        if (c > 1) {
            std::vector<Integer> v;
            for (const auto& x : r.coeffs()) v.push_back(int_divexact(x, c));
            r = IntPoly(std::move(v));
        }
        if (r.lead() < 0) r = -r;
        return r;
    }
    // exact quotient over Q, then clear denominators
    RatPoly q = RatPoly(g);
    RatPoly quot;
    {
        // long division q / d, exact by construction
        std::vector<Rational> qc(static_cast<size_t>(q.degree() - d.degree()) + 1, Rational(0));
        RatPoly r = q;
        Rational dl_inv = Rational(1) / d.lead();
        while (!r.is_zero() && r.degree() >= d.degree()) {
            int shift = r.degree() - d.degree();
            Rational f = r.lead() * dl_inv;
            qc[static_cast<size_t>(shift)] = f;
            std::vector<Rational> rc(r.coeffs());
            for (int i = 0; i <= d.degree(); ++i)
                rc[static_cast<size_t>(i + shift)] -= f * d.coeff(i);
            r = RatPoly(std::move(rc));
        }
        quot = RatPoly(std::move(qc));
    }
    auto [s, ip] = quot.clear_denominators();
    (void)s;
    Integer c = ip.content();
    if (c > 1) {
        std::vector<Integer> v;
        for (const auto& x : ip.coeffs()) v.push_back(int_divexact(x, c));
        ip = IntPoly(std::move(v));
    }
    if (ip.lead() < 0) ip = -ip;
    return ip;
}

/// n-th cyclotomic polynomial by exact division of X^n - 1 by all lower
/// cyclotomic factors.
inline IntPoly cyclotomic(int n) {
    if (n < 1) throw domain_error("cyclotomic index must be >= 1");
    std::vector<IntPoly> phi(static_cast<size_t>(n) + 1);
    for (int k = 1; k <= n; ++k) {
        IntPoly num = IntPoly::monomial(k) - IntPoly::constant(1);
        for (int d = 1; d < k; ++d)
            if (k % d == 0) num = num.divexact_monic(phi[static_cast<size_t>(d)]);
        phi[static_cast<size_t>(k)] = num;
    }
    return phi[static_cast<size_t>(n)];
}

namespace detail {
inline void append_term(std::string& out, const std::string& cs, bool neg, const std::string& mono) {
    if (out.empty()) {
        if (neg) out += "-";
    } else {
        out += neg ? "-" : "+";
    }
    if (mono.empty()) {
        out += cs;
    } else {
        if (cs != "1") out += cs;
        out += mono;
    }
}
}  // namespace detail

inline std::string IntPoly::to_string(const std::string& var) const {
    if (is_zero()) return "0";
    std::string out;
    for (int k = degree(); k >= 0; --k) {
        Integer c = coeff(k);
        if (c == 0) continue;
        bool neg = c < 0;
        std::string cs = to_decimal(int_abs(c));
        std::string mono;
        if (k >= 1) mono = var + (k == 1 ? "" : "^" + std::to_string(k));
        detail::append_term(out, cs, neg, mono);
    }
    return out;
}

inline std::string RatPoly::to_string(const std::string& var) const {
    if (is_zero()) return "0";
    std::string out;
    for (int k = degree(); k >= 0; --k) {
        Rational c = coeff(k);
        if (c == 0) continue;
        bool neg = c < 0;
        Rational a = neg ? Rational(-c) : c;
        std::string cs = a.get_str();
        std::string mono;
        if (k >= 1) mono = var + (k == 1 ? "" : "^" + std::to_string(k));
        detail::append_term(out, cs, neg, mono);
    }
    return out;
}

}  // namespace thuetwist

#endif
