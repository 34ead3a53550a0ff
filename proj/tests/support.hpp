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

// Shared test fixtures and the independent oracles the suites check against.
// Everything here is deliberately simple-minded: brute force, expansion along
// rows, numeric products; none of it shares the code paths it cross-checks.

#ifndef THUETWIST_TESTS_SUPPORT_HPP
#define THUETWIST_TESTS_SUPPORT_HPP

#include <map>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "thuetwist/embeddings.hpp"
#include "thuetwist/matrix.hpp"
#include "thuetwist/number_field.hpp"
#include "thuetwist/solver.hpp"
#include "thuetwist/twist_family.hpp"

namespace twtest {

using namespace thuetwist;

inline std::mt19937& rng() {
    static std::mt19937 gen(0x5eed2026u);
    return gen;
}

inline long rand_in(long lo, long hi) {
    std::uniform_int_distribution<long> d(lo, hi);
    return d(rng());
}

/// Random integer polynomial of exact degree d, height <= h, positive lead.
inline IntPoly random_poly(int d, long h) {
    std::vector<Integer> c(static_cast<size_t>(d) + 1);
    for (auto& v : c) v = Integer(rand_in(-h, h));
    if (c.back() == 0) c.back() = 1;
    if (c.back() < 0)
        for (auto& v : c) v = -v;
    return IntPoly(std::move(c));
}

/// Exact determinant by cofactor expansion along the first row (oracle).
inline Rational cofactor_det(const RatMatrix& m) {
    int n = m.rows();
    if (n == 0) return Rational(1);
    if (n == 1) return m.at(0, 0);
    Rational acc(0);
    for (int j = 0; j < n; ++j) {
        if (m.at(0, j) == 0) continue;
        RatMatrix sub(n - 1, n - 1);
        for (int r = 1; r < n; ++r) {
            int cc = 0;
            for (int c = 0; c < n; ++c) {
                if (c == j) continue;
                sub.at(r - 1, cc++) = m.at(r, c);
            }
        }
        Rational t = m.at(0, j) * cofactor_det(sub);
        if (j % 2 == 0)
            acc += t;
        else
            acc -= t;
    }
    return acc;
}

/// Independent numeric-product oracle for twisted-form coefficients: embeds
/// alpha and upsilon at >= `bits`-bit root approximations of g, forms
/// sigma_j(alpha) sigma_j(upsilon)^a numerically, expands
/// a0 prod (X - w_j Y), and rounds. Fails the caller's expectations loudly if
/// any coefficient sits farther than 2^-100 from an integer.
struct OracleForm {
    std::vector<Integer> coeffs;  // X^d coefficient first
    bool exact = true;            // every coefficient within 2^-100 of an integer
};

inline OracleForm numeric_form_oracle(const TwistFamily& fam, long a, long bits = 220) {
    const IntPoly& g = fam.field()->defining_poly();
    int d = g.degree();
    EmbeddingSet emb = isolate_roots(g, PrecisionConfig{bits, std::max(bits * 8, 4096L)});
    mpfr_prec_t prec = static_cast<mpfr_prec_t>(bits + 64);

    auto eval_at = [&](const FieldElement& x, const PointComplex& t) {
        PointComplex acc(prec);
        for (int k = d - 1; k >= 0; --k) {
            PointComplex c(prec);
            mpfr_set_z(c.re.raw(), x.coords()[static_cast<size_t>(k)].get_mpz_t(), MPFR_RNDN);
            acc = acc * t + c;
        }
        PointComplex den(prec);
        mpfr_set_z(den.re.raw(), x.den().get_mpz_t(), MPFR_RNDN);
        return acc / den;
    };
    auto cpow = [&](PointComplex b, long e) {
        PointComplex one(prec);
        mpfr_set_ui(one.re.raw(), 1, MPFR_RNDN);
        if (e < 0) {
            b = one / b;
            e = -e;
        }
        PointComplex acc = one;
        while (e > 0) {
            if (e & 1) acc = acc * b;
            b = b * b;
            e >>= 1;
        }
        return acc;
    };

    // polynomial in X with complex coefficients; index k = coefficient of
    // X^{d-k} Y^k, built as prod (X - w_j Y)
    std::vector<PointComplex> coeff;
    coeff.emplace_back(prec);
    mpfr_set_ui(coeff[0].re.raw(), 1, MPFR_RNDN);
    for (int j = 0; j < d; ++j) {
        PointComplex th(prec);
        mpfr_set(th.re.raw(), emb.box(j).re.mid_mpfr().raw(), MPFR_RNDN);
        mpfr_set(th.im.raw(), emb.box(j).im.mid_mpfr().raw(), MPFR_RNDN);
        PointComplex w = eval_at(fam.alpha(), th) * cpow(eval_at(fam.upsilon(), th), a);
        std::vector<PointComplex> next(coeff.size() + 1, PointComplex(prec));
        for (size_t k = 0; k < coeff.size(); ++k) {
            next[k] = next[k] + coeff[k];
            next[k + 1] = next[k + 1] - w * coeff[k];
        }
        coeff = std::move(next);
    }

    OracleForm out;
    Mpfr t(prec), dev(prec);
    for (auto& c : coeff) {
        Mpfr re(prec);
        mpfr_mul_z(re.raw(), c.re.raw(), fam.a0().get_mpz_t(), MPFR_RNDN);
        Integer z;
        mpfr_get_z(z.get_mpz_t(), re.raw(), MPFR_RNDN);
        mpfr_set_z(t.raw(), z.get_mpz_t(), MPFR_RNDN);
        mpfr_sub(dev.raw(), re.raw(), t.raw(), MPFR_RNDN);
        mpfr_abs(dev.raw(), dev.raw(), MPFR_RNDN);
        if (mpfr_cmp_d(dev.raw(), std::ldexp(1.0, -100)) > 0) out.exact = false;
        Mpfr ia(prec);
        mpfr_mul_z(ia.raw(), c.im.raw(), fam.a0().get_mpz_t(), MPFR_RNDN);
        mpfr_abs(ia.raw(), ia.raw(), MPFR_RNDN);
        if (mpfr_cmp_d(ia.raw(), std::ldexp(1.0, -100)) > 0) out.exact = false;
        out.coeffs.push_back(std::move(z));
    }
    return out;
}

/// Unconditional full double-loop enumeration (solver oracle): same contract
/// as the windowed scan, no pruning at all.
inline SolutionSet fullscan_oracle(const TwistFamily& fam, const SearchBox& box,
                                   bool require_degree) {
    SolutionSet out;
    int d = fam.field()->degree();
    for (long a = box.a_min; a <= box.a_max; ++a) {
        FieldElement gamma = fam.alpha() * fam.upsilon().pow(a);
        if (require_degree && !generates_field(gamma)) {
            out.skipped_a.push_back(a);
            continue;
        }
        BinaryForm f = form_at(fam, a);
        for (long y = 1; y <= box.xy_max; ++y)
            for (long x = -box.xy_max; x <= box.xy_max; ++x) {
                if (x == 0) continue;
                Integer v = f(Integer(x), Integer(y));
                if (v == 0 || int_abs(v) > box.m) continue;
                out.solutions.push_back({Integer(x), Integer(y), a, v});
                Integer mv = (d % 2 == 0) ? v : Integer(-v);
                out.solutions.push_back({Integer(-x), Integer(-y), a, mv});
            }
    }
    std::sort(out.solutions.begin(), out.solutions.end());
    return out;
}

/// Brute-force unit search: elements of Z[theta] with coordinates in
/// [-box, box] that are units and not roots of unity, enriched with inverses.
/// Deterministic; results are cached per (field, box).
inline const std::vector<FieldElement>& find_units(const FieldPtr& k, long box = 2,
                                                   size_t limit = 24) {
    static std::map<std::pair<std::string, long>, std::vector<FieldElement>> cache;
    auto key = std::make_pair(k->defining_poly().to_string(), box);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;
    std::vector<FieldElement> found;
    int d = k->degree();
    std::vector<long> c(static_cast<size_t>(d), -box);
    while (true) {
        std::vector<Integer> coords;
        for (long v : c) coords.emplace_back(v);
        FieldElement x(k, coords);
        if (!x.is_zero() && !x.is_rational() && is_unit(x) && !is_root_of_unity(x)) {
            found.push_back(x);
            if (found.size() < limit) found.push_back(x.inverse());
        }
        if (found.size() >= limit) break;
        int i = 0;
        while (i < d && c[static_cast<size_t>(i)] == box) {
            c[static_cast<size_t>(i)] = -box;
            ++i;
        }
        if (i == d) break;
        ++c[static_cast<size_t>(i)];
    }
    auto [pos, _] = cache.emplace(key, std::move(found));
    return pos->second;
}

/// The bundled unit corpus: (defining polynomial of Q(u), u) pairs used
/// across the acceptance suite.
struct CorpusUnit {
    const char* name;
    IntPoly g;
    std::vector<long> upsilon_coords;
};

inline std::vector<CorpusUnit> unit_corpus() {
    return {
        {"golden", IntPoly({-1, -1, 1}), {0, 1}},
        {"silver", IntPoly({-1, -2, 1}), {0, 1}},  // 1 + sqrt(2)
        {"plastic", IntPoly({-1, -1, 0, 1}), {0, 1, 0}},
        {"cubic2", IntPoly({-2, 0, 0, 1}), {-1, 1, 0}},  // theta - 1, theta^3 = 2
        {"sharp_quartic", IntPoly({1, 0, -4, 0, 1}), {0, 1, 0, 0}},
    };
}

inline FieldElement element_from_longs(const FieldPtr& k, const std::vector<long>& c) {
    std::vector<Integer> coords;
    for (long v : c) coords.emplace_back(v);
    return FieldElement(k, coords);
}

/// Sample fields with a known unit for random-family generation.
inline std::vector<std::pair<IntPoly, std::vector<long>>> sample_family_fields() {
    return {
        {IntPoly({-1, -1, 0, 1}), {0, 1, 0}},
        {IntPoly({-2, 0, 0, 1}), {-1, 1, 0}},
        {IntPoly({-1, 1, 0, 1}), {0, 1, 0}},        // t^3 + t - 1, N(theta) = 1
        {IntPoly({-1, 0, 0, -1, 1}), {0, 1, 0, 0}}, // t^4 - t^3 - 1
        {IntPoly({1, 0, -4, 0, 1}), {0, 1, 0, 0}},  // t^4 - 4 t^2 + 1
    };
}

inline double d_lo(const RealInterval& v) { return mpfr_get_d(v.lo().raw(), MPFR_RNDD); }
inline double d_hi(const RealInterval& v) { return mpfr_get_d(v.hi().raw(), MPFR_RNDU); }

/// The interval sits within tol of the reference double (intervals here are
/// usually far tighter than double precision, so exact containment of a
/// rounded reference is the wrong test).
inline bool approx_in(const RealInterval& v, double x, double tol = 1e-12) {
    return d_lo(v) <= x + tol && x - tol <= d_hi(v);
}

}  // namespace twtest

#endif
