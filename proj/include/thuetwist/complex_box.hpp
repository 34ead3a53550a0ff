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

#ifndef THUETWIST_COMPLEX_BOX_HPP
#define THUETWIST_COMPLEX_BOX_HPP

#include <utility>
#include <vector>

#include "thuetwist/integer.hpp"
#include "thuetwist/interval.hpp"
#include "thuetwist/polynomial.hpp"

namespace thuetwist {

/**
 * Axis-aligned complex rectangle (a "ball" in the max metric). All operations
 * are outward rounded: the result always contains the exact value. The
 * serialized view is a center plus a Euclidean radius enclosing the box.
 */
struct ComplexBox {
    RealInterval re, im;

    explicit ComplexBox(mpfr_prec_t prec = 64) : re(prec), im(prec) {}
    ComplexBox(RealInterval r, RealInterval i) : re(std::move(r)), im(std::move(i)) {}

    static ComplexBox from_real(const RealInterval& r) {
        return ComplexBox(r, RealInterval(r.prec()));
    }

    mpfr_prec_t prec() const { return std::max(re.prec(), im.prec()); }

    ComplexBox conj() const { return ComplexBox(re, -im); }
    ComplexBox operator-() const { return ComplexBox(-re, -im); }

    friend ComplexBox operator+(const ComplexBox& a, const ComplexBox& b) {
        return ComplexBox(a.re + b.re, a.im + b.im);
    }
    friend ComplexBox operator-(const ComplexBox& a, const ComplexBox& b) {
        return ComplexBox(a.re - b.re, a.im - b.im);
    }
    friend ComplexBox operator*(const ComplexBox& a, const ComplexBox& b) {
        return ComplexBox(a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re);
    }
    friend ComplexBox operator*(const RealInterval& s, const ComplexBox& a) {
        return ComplexBox(s * a.re, s * a.im);
    }
    friend ComplexBox operator/(const ComplexBox& a, const ComplexBox& b) {
        RealInterval n = b.re.sqr() + b.im.sqr();
        if (n.contains_zero()) throw certification_error("complex box division by box containing 0");
        ComplexBox num = a * b.conj();
        return ComplexBox(num.re / n, num.im / n);
    }

    /// |z|^2 as an interval.
    RealInterval abs_sqr() const { return re.sqr() + im.sqr(); }
    /// |z| as an interval.
    RealInterval abs() const { return abs_sqr().sqrt(); }

    bool contains_zero() const { return re.contains_zero() && im.contains_zero(); }
    bool overlaps(const ComplexBox& o) const { return re.overlaps(o.re) && im.overlaps(o.im); }

    friend ComplexBox intersect(const ComplexBox& a, const ComplexBox& b) {
        return ComplexBox(intersect(a.re, b.re), intersect(a.im, b.im));
    }
};

/// Horner evaluation of an integer polynomial on a complex box.
inline ComplexBox eval_box(const IntPoly& p, const ComplexBox& z) {
    mpfr_prec_t prec = z.prec();
    ComplexBox acc(prec);
    for (int k = p.degree(); k >= 0; --k) {
        acc = acc * z;
        acc.re = acc.re + RealInterval::from_integer(p.coeff(k), prec);
    }
    return acc;
}

/** Complex point arithmetic at a fixed precision, rounded to nearest. Used
 *  only to drive iterations; rigor comes from box arithmetic afterwards. */
struct PointComplex {
    Mpfr re, im;

    explicit PointComplex(mpfr_prec_t prec = 64) : re(prec), im(prec) {
        mpfr_set_zero(re.raw(), 1);
        mpfr_set_zero(im.raw(), 1);
    }
    PointComplex(double r, double i, mpfr_prec_t prec) : re(prec), im(prec) {
        mpfr_set_d(re.raw(), r, MPFR_RNDN);
        mpfr_set_d(im.raw(), i, MPFR_RNDN);
    }

    mpfr_prec_t prec() const { return re.prec(); }

    PointComplex at_prec(mpfr_prec_t p) const {
        PointComplex r(p);
        mpfr_set(r.re.raw(), re.raw(), MPFR_RNDN);
        mpfr_set(r.im.raw(), im.raw(), MPFR_RNDN);
        return r;
    }

    friend PointComplex operator+(const PointComplex& a, const PointComplex& b) {
        PointComplex r(std::max(a.prec(), b.prec()));
        mpfr_add(r.re.raw(), a.re.raw(), b.re.raw(), MPFR_RNDN);
        mpfr_add(r.im.raw(), a.im.raw(), b.im.raw(), MPFR_RNDN);
        return r;
    }
    friend PointComplex operator-(const PointComplex& a, const PointComplex& b) {
        PointComplex r(std::max(a.prec(), b.prec()));
        mpfr_sub(r.re.raw(), a.re.raw(), b.re.raw(), MPFR_RNDN);
        mpfr_sub(r.im.raw(), a.im.raw(), b.im.raw(), MPFR_RNDN);
        return r;
    }
    friend PointComplex operator*(const PointComplex& a, const PointComplex& b) {
        mpfr_prec_t p = std::max(a.prec(), b.prec());
        PointComplex r(p);
        Mpfr t1(p), t2(p);
        mpfr_mul(t1.raw(), a.re.raw(), b.re.raw(), MPFR_RNDN);
        mpfr_mul(t2.raw(), a.im.raw(), b.im.raw(), MPFR_RNDN);
        mpfr_sub(r.re.raw(), t1.raw(), t2.raw(), MPFR_RNDN);
        mpfr_mul(t1.raw(), a.re.raw(), b.im.raw(), MPFR_RNDN);
        mpfr_mul(t2.raw(), a.im.raw(), b.re.raw(), MPFR_RNDN);
        mpfr_add(r.im.raw(), t1.raw(), t2.raw(), MPFR_RNDN);
        return r;
    }
    friend PointComplex operator/(const PointComplex& a, const PointComplex& b) {
        mpfr_prec_t p = std::max(a.prec(), b.prec());
        Mpfr n(p);
        Mpfr t1(p), t2(p);
        mpfr_sqr(t1.raw(), b.re.raw(), MPFR_RNDN);
        mpfr_sqr(t2.raw(), b.im.raw(), MPFR_RNDN);
        mpfr_add(n.raw(), t1.raw(), t2.raw(), MPFR_RNDN);
        PointComplex num = a * PointComplex::conj_of(b);
        PointComplex r(p);
        mpfr_div(r.re.raw(), num.re.raw(), n.raw(), MPFR_RNDN);
        mpfr_div(r.im.raw(), num.im.raw(), n.raw(), MPFR_RNDN);
        return r;
    }

    static PointComplex conj_of(const PointComplex& a) {
        PointComplex r(a.prec());
        mpfr_set(r.re.raw(), a.re.raw(), MPFR_RNDN);
        mpfr_neg(r.im.raw(), a.im.raw(), MPFR_RNDN);
        return r;
    }

    /// |z| rounded to nearest (non-rigorous).
    Mpfr abs_approx() const {
        Mpfr r(prec());
        mpfr_hypot(r.raw(), re.raw(), im.raw(), MPFR_RNDN);
        return r;
    }

    bool is_finite() const { return mpfr_number_p(re.raw()) && mpfr_number_p(im.raw()); }

    /// Degenerate box [re, re] x [im, im].
    ComplexBox to_box() const {
        return ComplexBox(RealInterval::point(re), RealInterval::point(im));
    }
};

/// p(z) and p'(z) at a point, Horner, round-to-nearest.
inline std::pair<PointComplex, PointComplex> eval_point_with_derivative(const IntPoly& p,
                                                                        const PointComplex& z) {
    mpfr_prec_t prec = z.prec();
    PointComplex v(prec), d(prec);
    for (int k = p.degree(); k >= 0; --k) {
        d = d * z + v;
        PointComplex c(prec);
        mpfr_set_z(c.re.raw(), p.coeff(k).get_mpz_t(), MPFR_RNDN);
        v = v * z + c;
    }
    return {v, d};
}

}  // namespace thuetwist

#endif
