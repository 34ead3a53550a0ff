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

#ifndef THUETWIST_NUMBER_FIELD_HPP
#define THUETWIST_NUMBER_FIELD_HPP

#include <memory>
#include <numeric>
#include <utility>
#include <vector>

#include "thuetwist/errors.hpp"
#include "thuetwist/integer.hpp"
#include "thuetwist/matrix.hpp"
#include "thuetwist/polynomial.hpp"

namespace thuetwist {

/**
 * K = Q[theta]/(g) for a monic squarefree integer polynomial g of degree >= 2
 * with no rational root. Those are sanity gates; irreducibility itself is
 * asserted by the caller, and every place the library needs "degree d over Q"
 * it tests the operative rank condition instead.
 */
class NumberField {
  public:
    static std::shared_ptr<const NumberField> create(IntPoly g) {
        if (g.degree() < 2) throw domain_error("defining polynomial must have degree >= 2");
        if (g.lead() != 1) throw domain_error("defining polynomial must be monic");
        if (!squarefree_check(g)) throw domain_error("defining polynomial must be squarefree");
        if (has_integer_root(g)) throw domain_error("defining polynomial has a rational root");
        return std::shared_ptr<const NumberField>(new NumberField(std::move(g)));
    }

    const IntPoly& defining_poly() const { return g_; }
    int degree() const { return d_; }

    bool same_as(const NumberField& o) const { return this == &o || g_ == o.g_; }

  private:
    explicit NumberField(IntPoly g) : g_(std::move(g)), d_(g_.degree()) {}

    /// A rational root of a monic integer polynomial is an integer dividing
    /// the constant term. Complete whenever |g(0)| <= 10^12; larger constant
    /// terms are probed with the divisors found below 10^6.
    static bool has_integer_root(const IntPoly& g) {
        Integer c0 = g.coeff(0);
        if (c0 == 0) return true;
        Integer a = int_abs(c0);
        std::vector<Integer> cand;
        Integer i(1);
        for (; i * i <= a && i <= 1000000; ++i) {
            if (a % i == 0) {
                cand.push_back(i);
                cand.push_back(int_divexact(a, i));
            }
        }
        for (const auto& r : cand) {
            if (g.eval(r) == 0 || g.eval(Integer(-r)) == 0) return true;
        }
        return false;
    }

    IntPoly g_;
    int d_;
};

using FieldPtr = std::shared_ptr<const NumberField>;

/**
 * Element of K over the power basis 1, theta, ..., theta^{d-1}: integer
 * coordinates with a common positive denominator, normalized so that
 * gcd(content(coords), den) = 1. Immutable value type.
 */
class FieldElement {
  public:
    FieldElement(FieldPtr field, std::vector<Integer> coords, Integer den = 1)
        : k_(std::move(field)), num_(std::move(coords)), den_(std::move(den)) {
        if (!k_) throw domain_error("element needs a field");
        if (static_cast<int>(num_.size()) > k_->degree())
            throw domain_error("coordinate count exceeds field degree");
        num_.resize(static_cast<size_t>(k_->degree()), Integer(0));
        normalize();
    }

    static FieldElement zero(FieldPtr field) {
        return FieldElement(std::move(field), std::vector<Integer>{});
    }
    static FieldElement one(FieldPtr field) {
        return FieldElement(std::move(field), std::vector<Integer>{Integer(1)});
    }
    static FieldElement theta(FieldPtr field) {
        return FieldElement(std::move(field), std::vector<Integer>{Integer(0), Integer(1)});
    }
    static FieldElement from_rational(FieldPtr field, const Rational& q) {
        return FieldElement(std::move(field), std::vector<Integer>{q.get_num()}, q.get_den());
    }
    static FieldElement from_rational_coords(FieldPtr field, const std::vector<Rational>& c) {
        Integer den(1);
        for (const auto& q : c) den = int_lcm(den, q.get_den());
        std::vector<Integer> num;
        num.reserve(c.size());
        for (const auto& q : c) {
            Rational v = Rational(den) * q;
            num.push_back(v.get_num());
        }
        return FieldElement(std::move(field), std::move(num), den);
    }

    const FieldPtr& field() const { return k_; }
    int degree() const { return k_->degree(); }
    const std::vector<Integer>& coords() const { return num_; }
    const Integer& den() const { return den_; }
    Rational coord(int i) const { return Rational(num_[static_cast<size_t>(i)], den_); }

    bool is_zero() const {
        for (const auto& v : num_)
            if (v != 0) return false;
        return true;
    }
    bool is_one() const {
        if (den_ != 1 || num_[0] != 1) return false;
        for (size_t i = 1; i < num_.size(); ++i)
            if (num_[i] != 0) return false;
        return true;
    }
    bool is_rational() const {
        for (size_t i = 1; i < num_.size(); ++i)
            if (num_[i] != 0) return false;
        return true;
    }

    bool operator==(const FieldElement& o) const {
        return k_->same_as(*o.k_) && den_ == o.den_ && num_ == o.num_;
    }
    bool operator!=(const FieldElement& o) const { return !(*this == o); }

    friend FieldElement operator+(const FieldElement& a, const FieldElement& b) {
        a.check_same_field(b);
        Integer den = int_lcm(a.den_, b.den_);
        Integer fa = int_divexact(den, a.den_), fb = int_divexact(den, b.den_);
        std::vector<Integer> c(a.num_.size());
        for (size_t i = 0; i < c.size(); ++i) c[i] = fa * a.num_[i] + fb * b.num_[i];
        return FieldElement(a.k_, std::move(c), den);
    }
    friend FieldElement operator-(const FieldElement& a, const FieldElement& b) {
        return a + (-b);
    }
    FieldElement operator-() const {
        std::vector<Integer> c(num_);
        for (auto& v : c) v = -v;
        return FieldElement(k_, std::move(c), den_);
    }
    friend FieldElement operator*(const FieldElement& a, const FieldElement& b) {
        a.check_same_field(b);
        IntPoly p = IntPoly(std::vector<Integer>(a.num_)) * IntPoly(std::vector<Integer>(b.num_));
        std::vector<Integer> red = reduce_mod_g(p, a.k_->defining_poly(), a.k_->degree());
        return FieldElement(a.k_, std::move(red), a.den_ * b.den_);
    }
    friend FieldElement operator*(const Rational& s, const FieldElement& a) {
        std::vector<Integer> c(a.num_);
        for (auto& v : c) v *= s.get_num();
        return FieldElement(a.k_, std::move(c), a.den_ * s.get_den());
    }

    /// Multiplicative inverse via the extended Euclidean algorithm in Q[X].
    FieldElement inverse() const {
        if (is_zero()) throw domain_error("inversion of zero");
        RatPoly a{IntPoly(std::vector<Integer>(num_))};  // numerator polynomial
        RatPoly g{k_->defining_poly()};
        // extended gcd: u*a + v*g = r, track u only
        RatPoly r0 = g, r1 = a;
        RatPoly u0, u1(std::vector<Rational>{Rational(1)});
        while (!r1.is_zero() && r1.degree() > 0) {
            // quotient of r0 by r1
            RatPoly q;
            {
                RatPoly rem = r0;
                std::vector<Rational> qc(
                    static_cast<size_t>(std::max(0, r0.degree() - r1.degree())) + 1, Rational(0));
                Rational linv = Rational(1) / r1.lead();
                while (!rem.is_zero() && rem.degree() >= r1.degree()) {
                    int shift = rem.degree() - r1.degree();
                    Rational f = rem.lead() * linv;
                    qc[static_cast<size_t>(shift)] = f;
                    std::vector<Rational> rc(rem.coeffs());
                    for (int i = 0; i <= r1.degree(); ++i)
                        rc[static_cast<size_t>(i + shift)] -= f * r1.coeff(i);
                    rem = RatPoly(std::move(rc));
                }
                q = RatPoly(std::move(qc));
            }
            RatPoly r2 = r0 - q * r1;
            RatPoly u2 = u0 - q * u1;
            r0 = std::move(r1);
            r1 = std::move(r2);
            u0 = std::move(u1);
            u1 = std::move(u2);
        }
        if (r1.is_zero())
            throw domain_error("element is a zero divisor (defining polynomial reducible)");
        // now r1 is a nonzero constant: a^{-1} = u1 / r1 modulo g
        Rational rinv = Rational(1) / r1.coeff(0);
        std::vector<Rational> inv_coords(static_cast<size_t>(k_->degree()), Rational(0));
        for (int i = 0; i <= u1.degree() && i < k_->degree(); ++i)
            inv_coords[static_cast<size_t>(i)] = u1.coeff(i) * rinv * Rational(den_);
        return from_rational_coords(k_, inv_coords);
    }

    /// Binary exponentiation; negative exponents invert first.
    FieldElement pow(long e) const {
        if (e < 0) return inverse().pow(-e);
        FieldElement acc = one(k_);
        FieldElement base = *this;
        unsigned long ue = static_cast<unsigned long>(e);
        while (ue > 0) {
            if (ue & 1UL) acc = acc * base;
            base = base * base;
            ue >>= 1UL;
        }
        return acc;
    }

    /// Matrix of multiplication by this element on the power basis (columns
    /// are the images of 1, theta, ..., theta^{d-1}).
    RatMatrix multiplication_matrix() const {
        int d = k_->degree();
        RatMatrix m(d, d);
        FieldElement col = *this;
        FieldElement th = theta(k_);
        for (int j = 0; j < d; ++j) {
            for (int i = 0; i < d; ++i) m.at(i, j) = col.coord(i);
            if (j + 1 < d) col = col * th;
        }
        return m;
    }

  private:
    static std::vector<Integer> reduce_mod_g(const IntPoly& p, const IntPoly& g, int d) {
        std::vector<Integer> c(p.coeffs());
        c.resize(std::max(c.size(), static_cast<size_t>(d)), Integer(0));
        for (int k = static_cast<int>(c.size()) - 1; k >= d; --k) {
            Integer f = c[static_cast<size_t>(k)];
            if (f == 0) continue;
            c[static_cast<size_t>(k)] = 0;
            for (int i = 0; i < d; ++i) c[static_cast<size_t>(k - d + i)] -= f * g.coeff(i);
        }
        c.resize(static_cast<size_t>(d));
        return c;
    }

    void check_same_field(const FieldElement& o) const {
        if (!k_->same_as(*o.k_)) throw domain_error("field mismatch");
    }

    void normalize() {
        if (den_ == 0) throw domain_error("zero denominator");
        if (den_ < 0) {
            den_ = -den_;
            for (auto& v : num_) v = -v;
        }
        Integer c(0);
        for (const auto& v : num_) c = int_gcd(c, v);
        if (c == 0) {
            den_ = 1;
            return;
        }
        Integer s = int_gcd(c, den_);
        if (s > 1) {
            for (auto& v : num_) v = int_divexact(v, s);
            den_ = int_divexact(den_, s);
        }
    }

    FieldPtr k_;
    std::vector<Integer> num_;
    Integer den_;
};

/// Exact characteristic polynomial of x over Q, monic of degree d.
inline RatPoly charpoly_of(const FieldElement& x) { return charpoly(x.multiplication_matrix()); }

/// Characteristic polynomial as an integer polynomial P plus the scale s with
/// charpoly = P / s; s is minimal positive, so s = 1 iff x is integral over Z
/// in the power-basis order.
inline std::pair<IntPoly, Integer> charpoly_scaled(const FieldElement& x) {
    auto [s, p] = charpoly_of(x).clear_denominators();
    return {p, s};
}

/// N(x) = (-1)^d * charpoly(0), multiplicative.
inline Rational norm(const FieldElement& x) {
    RatPoly c = charpoly_of(x);
    Rational n = c.coeff(0);
    if (x.degree() % 2 != 0) n = -n;
    return n;
}

inline Rational trace(const FieldElement& x) {
    RatPoly c = charpoly_of(x);
    return -c.coeff(x.degree() - 1);
}

/// Unit test: integral characteristic polynomial and norm +-1.
inline bool is_unit(const FieldElement& x) {
    if (x.is_zero()) return false;
    RatPoly c = charpoly_of(x);
    if (!c.is_integral()) return false;
    Rational n = c.coeff(0);
    return n == 1 || n == -1;
}

/// Rank test for Q(x) = K: the d x d coordinate matrix of 1, x, ..., x^{d-1}
/// has full rank.
inline bool generates_field(const FieldElement& x) {
    int d = x.degree();
    RatMatrix m(d, d);
    FieldElement p = FieldElement::one(x.field());
    for (int i = 0; i < d; ++i) {
        for (int j = 0; j < d; ++j) m.at(i, j) = p.coord(j);
        if (i + 1 < d) p = p * x;
    }
    return rank(m) == d;
}

/// Exact root-of-unity test: x^k = 1 for some k with Euler phi(k) <= d, which
/// caps k at the largest integer with phi(k) <= d.
inline bool is_root_of_unity(const FieldElement& x) {
    if (x.is_zero()) return false;
    int d = x.degree();
    int kmax = 2;
    for (int k = 2; k <= 6 * d * d + 6; ++k) {
        int phi = 0;
        for (int j = 1; j <= k; ++j)
            if (std::gcd(j, k) == 1) ++phi;
        if (phi <= d) kmax = k;
    }
    FieldElement p = x;
    FieldElement one = FieldElement::one(x.field());
    for (int k = 1; k <= kmax; ++k) {
        if (p == one) return true;
        p = p * x;
    }
    return false;
}

}  // namespace thuetwist

#endif
