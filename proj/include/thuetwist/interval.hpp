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

#ifndef THUETWIST_INTERVAL_HPP
#define THUETWIST_INTERVAL_HPP

#include <algorithm>
#include <string>
#include <utility>

#include <mpfr.h>

#include "thuetwist/errors.hpp"
#include "thuetwist/integer.hpp"

namespace thuetwist {

/** Minimal RAII wrapper around mpfr_t. */
class Mpfr {
  public:
    explicit Mpfr(mpfr_prec_t prec = 64) { mpfr_init2(v_, prec); }
    Mpfr(const Mpfr& o) {
        mpfr_init2(v_, mpfr_get_prec(o.v_));
        mpfr_set(v_, o.v_, MPFR_RNDN);
    }
    Mpfr(Mpfr&& o) noexcept {
        mpfr_init2(v_, mpfr_get_prec(o.v_));
        mpfr_swap(v_, o.v_);
    }
    Mpfr& operator=(const Mpfr& o) {
        if (this != &o) {
            mpfr_set_prec(v_, mpfr_get_prec(o.v_));
            mpfr_set(v_, o.v_, MPFR_RNDN);
        }
        return *this;
    }
    Mpfr& operator=(Mpfr&& o) noexcept {
        mpfr_swap(v_, o.v_);
        return *this;
    }
    ~Mpfr() { mpfr_clear(v_); }

    mpfr_ptr raw() { return v_; }
    mpfr_srcptr raw() const { return v_; }
    mpfr_prec_t prec() const { return mpfr_get_prec(v_); }
    double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }

  private:
    mpfr_t v_;
};

/**
 * Closed real interval [lo, hi] with outward-rounded endpoint arithmetic.
 * Every operation returns an interval guaranteed to contain the exact result
 * over all points of the inputs.
 */
class RealInterval {
  public:
    explicit RealInterval(mpfr_prec_t prec = 64) : lo_(prec), hi_(prec) {
        mpfr_set_zero(lo_.raw(), 1);
        mpfr_set_zero(hi_.raw(), 1);
    }

    static RealInterval from_double(double x, mpfr_prec_t prec) {
        RealInterval r(prec);
        mpfr_set_d(r.lo_.raw(), x, MPFR_RNDD);
        mpfr_set_d(r.hi_.raw(), x, MPFR_RNDU);
        return r;
    }
    static RealInterval from_integer(const Integer& x, mpfr_prec_t prec) {
        RealInterval r(prec);
        mpfr_set_z(r.lo_.raw(), x.get_mpz_t(), MPFR_RNDD);
        mpfr_set_z(r.hi_.raw(), x.get_mpz_t(), MPFR_RNDU);
        return r;
    }
    static RealInterval from_rational(const Rational& x, mpfr_prec_t prec) {
        RealInterval r(prec);
        mpfr_set_q(r.lo_.raw(), x.get_mpq_t(), MPFR_RNDD);
        mpfr_set_q(r.hi_.raw(), x.get_mpq_t(), MPFR_RNDU);
        return r;
    }
    static RealInterval from_long(long x, mpfr_prec_t prec) {
        RealInterval r(prec);
        mpfr_set_si(r.lo_.raw(), x, MPFR_RNDD);
        mpfr_set_si(r.hi_.raw(), x, MPFR_RNDU);
        return r;
    }
    static RealInterval from_endpoints(Mpfr lo, Mpfr hi) {
        RealInterval r(std::max(lo.prec(), hi.prec()));
        r.lo_ = std::move(lo);
        r.hi_ = std::move(hi);
        if (mpfr_cmp(r.lo_.raw(), r.hi_.raw()) > 0) throw domain_error("inverted interval");
        return r;
    }
    /// Exact point interval from an mpfr value.
    static RealInterval point(const Mpfr& x) {
        RealInterval r(x.prec());
        r.lo_ = x;
        r.hi_ = x;
        return r;
    }

    mpfr_prec_t prec() const { return std::max(lo_.prec(), hi_.prec()); }
    const Mpfr& lo() const { return lo_; }
    const Mpfr& hi() const { return hi_; }

    bool contains_zero() const {
        return mpfr_sgn(lo_.raw()) <= 0 && mpfr_sgn(hi_.raw()) >= 0;
    }
    bool is_positive() const { return mpfr_sgn(lo_.raw()) > 0; }
    bool is_negative() const { return mpfr_sgn(hi_.raw()) < 0; }
    bool contains(const Rational& q) const {
        return mpfr_cmp_q(lo_.raw(), q.get_mpq_t()) <= 0 &&
               mpfr_cmp_q(hi_.raw(), q.get_mpq_t()) >= 0;
    }
    bool contains_double(double x) const {
        return mpfr_cmp_d(lo_.raw(), x) <= 0 && mpfr_cmp_d(hi_.raw(), x) >= 0;
    }

    /// Certified strict comparison: every point of *this < every point of o.
    bool certainly_less(const RealInterval& o) const {
        return mpfr_cmp(hi_.raw(), o.lo_.raw()) < 0;
    }
    bool certainly_le(const RealInterval& o) const {
        return mpfr_cmp(hi_.raw(), o.lo_.raw()) <= 0;
    }
    bool overlaps(const RealInterval& o) const {
        return !(certainly_less(o) || o.certainly_less(*this));
    }
    /// True unless the inequality this <= o is certainly violated.
    bool le_possible(const RealInterval& o) const {
        return mpfr_cmp(lo_.raw(), o.hi_.raw()) <= 0;
    }

    RealInterval operator-() const {
        RealInterval r(prec());
        mpfr_neg(r.lo_.raw(), hi_.raw(), MPFR_RNDD);
        mpfr_neg(r.hi_.raw(), lo_.raw(), MPFR_RNDU);
        return r;
    }

    friend RealInterval operator+(const RealInterval& a, const RealInterval& b) {
        RealInterval r(std::max(a.prec(), b.prec()));
        mpfr_add(r.lo_.raw(), a.lo_.raw(), b.lo_.raw(), MPFR_RNDD);
        mpfr_add(r.hi_.raw(), a.hi_.raw(), b.hi_.raw(), MPFR_RNDU);
        return r;
    }
    friend RealInterval operator-(const RealInterval& a, const RealInterval& b) {
        RealInterval r(std::max(a.prec(), b.prec()));
        mpfr_sub(r.lo_.raw(), a.lo_.raw(), b.hi_.raw(), MPFR_RNDD);
        mpfr_sub(r.hi_.raw(), a.hi_.raw(), b.lo_.raw(), MPFR_RNDU);
        return r;
    }
    friend RealInterval operator*(const RealInterval& a, const RealInterval& b) {
        mpfr_prec_t p = std::max(a.prec(), b.prec());
        RealInterval r(p);
        Mpfr t(p);
        bool first = true;
        auto consider = [&](mpfr_srcptr x, mpfr_srcptr y) {
            mpfr_mul(t.raw(), x, y, MPFR_RNDD);
            if (first || mpfr_cmp(t.raw(), r.lo_.raw()) < 0) mpfr_set(r.lo_.raw(), t.raw(), MPFR_RNDD);
            mpfr_mul(t.raw(), x, y, MPFR_RNDU);
            if (first || mpfr_cmp(t.raw(), r.hi_.raw()) > 0) mpfr_set(r.hi_.raw(), t.raw(), MPFR_RNDU);
            first = false;
        };
        consider(a.lo_.raw(), b.lo_.raw());
        consider(a.lo_.raw(), b.hi_.raw());
        consider(a.hi_.raw(), b.lo_.raw());
        consider(a.hi_.raw(), b.hi_.raw());
        return r;
    }
    friend RealInterval operator/(const RealInterval& a, const RealInterval& b) {
        if (b.contains_zero()) throw certification_error("interval division by interval containing 0");
        mpfr_prec_t p = std::max(a.prec(), b.prec());
        RealInterval r(p);
        Mpfr t(p);
        bool first = true;
        auto consider = [&](mpfr_srcptr x, mpfr_srcptr y) {
            mpfr_div(t.raw(), x, y, MPFR_RNDD);
            if (first || mpfr_cmp(t.raw(), r.lo_.raw()) < 0) mpfr_set(r.lo_.raw(), t.raw(), MPFR_RNDD);
            mpfr_div(t.raw(), x, y, MPFR_RNDU);
            if (first || mpfr_cmp(t.raw(), r.hi_.raw()) > 0) mpfr_set(r.hi_.raw(), t.raw(), MPFR_RNDU);
            first = false;
        };
        consider(a.lo_.raw(), b.lo_.raw());
        consider(a.lo_.raw(), b.hi_.raw());
        consider(a.hi_.raw(), b.lo_.raw());
        consider(a.hi_.raw(), b.hi_.raw());
        return r;
    }

    RealInterval sqr() const {
        RealInterval r(prec());
        if (!contains_zero()) {
            const Mpfr& a = is_positive() ? lo_ : hi_;
            const Mpfr& b = is_positive() ? hi_ : lo_;
            mpfr_sqr(r.lo_.raw(), a.raw(), MPFR_RNDD);
            mpfr_sqr(r.hi_.raw(), b.raw(), MPFR_RNDU);
        } else {
            mpfr_set_zero(r.lo_.raw(), 1);
            Mpfr t(prec());
            mpfr_sqr(t.raw(), lo_.raw(), MPFR_RNDU);
            mpfr_sqr(r.hi_.raw(), hi_.raw(), MPFR_RNDU);
            if (mpfr_cmp(t.raw(), r.hi_.raw()) > 0) mpfr_set(r.hi_.raw(), t.raw(), MPFR_RNDU);
        }
        return r;
    }

    RealInterval abs() const {
        RealInterval r(prec());
        if (is_positive() || (mpfr_sgn(lo_.raw()) == 0)) return *this;
        if (is_negative() || mpfr_sgn(hi_.raw()) == 0) return -*this;
        mpfr_set_zero(r.lo_.raw(), 1);
        Mpfr t(prec());
        mpfr_neg(t.raw(), lo_.raw(), MPFR_RNDU);
        if (mpfr_cmp(t.raw(), hi_.raw()) > 0)
            mpfr_set(r.hi_.raw(), t.raw(), MPFR_RNDU);
        else
            mpfr_set(r.hi_.raw(), hi_.raw(), MPFR_RNDU);
        return r;
    }

    RealInterval sqrt() const {
        if (mpfr_sgn(lo_.raw()) < 0) throw domain_error("sqrt of interval with negative part");
        RealInterval r(prec());
        mpfr_sqrt(r.lo_.raw(), lo_.raw(), MPFR_RNDD);
        mpfr_sqrt(r.hi_.raw(), hi_.raw(), MPFR_RNDU);
        return r;
    }

    /// k-th root, k >= 1, of a nonnegative interval.
    RealInterval rootn(unsigned long k) const {
        if (mpfr_sgn(lo_.raw()) < 0) throw domain_error("rootn of interval with negative part");
        RealInterval r(prec());
        mpfr_rootn_ui(r.lo_.raw(), lo_.raw(), k, MPFR_RNDD);
        mpfr_rootn_ui(r.hi_.raw(), hi_.raw(), k, MPFR_RNDU);
        return r;
    }

    RealInterval log() const {
        if (mpfr_sgn(lo_.raw()) <= 0) throw domain_error("log of interval reaching <= 0");
        RealInterval r(prec());
        mpfr_log(r.lo_.raw(), lo_.raw(), MPFR_RNDD);
        mpfr_log(r.hi_.raw(), hi_.raw(), MPFR_RNDU);
        return r;
    }

    RealInterval exp() const {
        RealInterval r(prec());
        mpfr_exp(r.lo_.raw(), lo_.raw(), MPFR_RNDD);
        mpfr_exp(r.hi_.raw(), hi_.raw(), MPFR_RNDU);
        return r;
    }

    /// Integer power. Negative exponents require an interval excluding zero.
    RealInterval pow_int(long k) const {
        if (k == 0) return from_long(1, prec());
        if (k < 0) {
            RealInterval p = pow_int(-k);
            return from_long(1, prec()) / p;
        }
        if (is_positive() || mpfr_sgn(lo_.raw()) == 0) {
            RealInterval r(prec());
            mpfr_pow_si(r.lo_.raw(), lo_.raw(), k, MPFR_RNDD);
            mpfr_pow_si(r.hi_.raw(), hi_.raw(), k, MPFR_RNDU);
            return r;
        }
        // general sign handling via repeated squaring on intervals
        RealInterval base = *this;
        RealInterval acc = from_long(1, prec());
        long e = k;
        while (e > 0) {
            if (e & 1) acc = acc * base;
            base = base.sqr();
            e >>= 1;
        }
        return acc;
    }

    /// max{1, x} elementwise.
    RealInterval max1() const {
        RealInterval one = from_long(1, prec());
        RealInterval r(prec());
        mpfr_max(r.lo_.raw(), lo_.raw(), one.lo().raw(), MPFR_RNDD);
        mpfr_max(r.hi_.raw(), hi_.raw(), one.hi().raw(), MPFR_RNDU);
        return r;
    }

    friend RealInterval interval_min(const RealInterval& a, const RealInterval& b) {
        RealInterval r(std::max(a.prec(), b.prec()));
        mpfr_min(r.lo_.raw(), a.lo_.raw(), b.lo_.raw(), MPFR_RNDD);
        mpfr_min(r.hi_.raw(), a.hi_.raw(), b.hi_.raw(), MPFR_RNDU);
        return r;
    }
    friend RealInterval interval_max(const RealInterval& a, const RealInterval& b) {
        RealInterval r(std::max(a.prec(), b.prec()));
        mpfr_max(r.lo_.raw(), a.lo_.raw(), b.lo_.raw(), MPFR_RNDD);
        mpfr_max(r.hi_.raw(), a.hi_.raw(), b.hi_.raw(), MPFR_RNDU);
        return r;
    }

    /// Intersection; both inputs must enclose the same true value.
    friend RealInterval intersect(const RealInterval& a, const RealInterval& b) {
        RealInterval r(std::max(a.prec(), b.prec()));
        mpfr_max(r.lo_.raw(), a.lo_.raw(), b.lo_.raw(), MPFR_RNDD);
        mpfr_min(r.hi_.raw(), a.hi_.raw(), b.hi_.raw(), MPFR_RNDU);
        if (mpfr_cmp(r.lo_.raw(), r.hi_.raw()) > 0)
            throw certification_error("empty interval intersection");
        return r;
    }

    /// Convex hull of two intervals.
    friend RealInterval interval_hull(const RealInterval& a, const RealInterval& b) {
        RealInterval r(std::max(a.prec(), b.prec()));
        mpfr_min(r.lo_.raw(), a.lo_.raw(), b.lo_.raw(), MPFR_RNDD);
        mpfr_max(r.hi_.raw(), a.hi_.raw(), b.hi_.raw(), MPFR_RNDU);
        return r;
    }

    double mid() const {
        Mpfr m(prec());
        mpfr_add(m.raw(), lo_.raw(), hi_.raw(), MPFR_RNDN);
        mpfr_div_2si(m.raw(), m.raw(), 1, MPFR_RNDN);
        return m.to_double();
    }

    Mpfr mid_mpfr() const {
        Mpfr m(prec());
        mpfr_add(m.raw(), lo_.raw(), hi_.raw(), MPFR_RNDN);
        mpfr_div_2si(m.raw(), m.raw(), 1, MPFR_RNDN);
        return m;
    }

    /// Upper bound on hi - lo as a double (may be +inf, never underflows to a
    /// value below the truth).
    double width_upper() const {
        Mpfr w(64);
        mpfr_sub(w.raw(), hi_.raw(), lo_.raw(), MPFR_RNDU);
        return mpfr_get_d(w.raw(), MPFR_RNDU);
    }

    /// True iff hi - lo <= 2^e.
    bool width_below_2exp(long e) const {
        Mpfr w(64);
        mpfr_sub(w.raw(), hi_.raw(), lo_.raw(), MPFR_RNDU);
        if (mpfr_sgn(w.raw()) == 0) return true;
        return mpfr_get_exp(w.raw()) <= e;
    }

    /// True iff hi - lo <= bound.lo (bound nonnegative).
    bool width_below(const RealInterval& bound) const {
        Mpfr w(prec());
        mpfr_sub(w.raw(), hi_.raw(), lo_.raw(), MPFR_RNDU);
        return mpfr_cmp(w.raw(), bound.lo().raw()) <= 0;
    }

    std::string to_string(int digits = 20) const {
        char* sl = nullptr;
        char* sh = nullptr;
        mpfr_asprintf(&sl, "%.*Rg", digits, lo_.raw());
        mpfr_asprintf(&sh, "%.*Rg", digits, hi_.raw());
        std::string out = std::string("[") + sl + ", " + sh + "]";
        mpfr_free_str(sl);
        mpfr_free_str(sh);
        return out;
    }

  private:
    Mpfr lo_, hi_;
};

/// max{1, log x} on a positive interval.
inline RealInterval log_star(const RealInterval& x) {
    if (mpfr_sgn(x.lo().raw()) <= 0) throw domain_error("log_star of nonpositive value");
    return x.log().max1();
}

}  // namespace thuetwist

#endif
