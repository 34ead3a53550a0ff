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

#ifndef THUETWIST_HEIGHTS_HPP
#define THUETWIST_HEIGHTS_HPP

#include <string>
#include <utility>
#include <vector>

#include "thuetwist/embeddings.hpp"
#include "thuetwist/errors.hpp"
#include "thuetwist/integer.hpp"
#include "thuetwist/interval.hpp"
#include "thuetwist/number_field.hpp"
#include "thuetwist/polynomial.hpp"

namespace thuetwist {

/// H(f): maximum absolute value of the coefficients, exact.
inline Integer naive_height(const IntPoly& f) {
    if (f.is_zero()) throw domain_error("height of zero polynomial");
    Integer h(0);
    for (const auto& c : f.coeffs()) {
        Integer a = int_abs(c);
        if (a > h) h = a;
    }
    return h;
}

/// M(f) = lead * prod max{1, |root|}, certified. Requires a positive leading
/// coefficient and an embedding set for f itself.
inline RealInterval mahler_measure(const IntPoly& f, const EmbeddingSet& emb) {
    if (f.is_zero() || f.lead() <= 0) throw domain_error("mahler_measure needs positive lead");
    if (!(emb.poly() == f)) throw domain_error("embedding set does not belong to f");
    mpfr_prec_t prec = static_cast<mpfr_prec_t>(std::max<long>(64, emb.bits()));
    RealInterval m = RealInterval::from_integer(f.lead(), prec);
    for (int k = 0; k < emb.degree(); ++k) m = m * emb.box(k).abs().max1();
    return m;
}

/// Mahler measure of a squarefree polynomial, isolating roots internally.
inline RealInterval mahler_measure(const IntPoly& f, const PrecisionConfig& cfg = {}) {
    if (f.is_zero() || f.lead() <= 0) throw domain_error("mahler_measure needs positive lead");
    if (f.degree() == 0) return RealInterval::from_integer(f.lead(), 64);
    EmbeddingSet emb = isolate_roots(f, cfg);
    return mahler_measure(f, emb);
}

/// Largest conjugate modulus (the top tie-group interval).
inline RealInterval house(const EmbeddingSet& emb) {
    return emb.group_modulus(static_cast<int>(emb.tie_groups().size()) - 1);
}

/// Smallest conjugate modulus.
inline RealInterval smallest_conjugate_modulus(const EmbeddingSet& emb) {
    return emb.group_modulus(0);
}

/// max{1, log x} for a positive real, exposed as a value type with the >= 1
/// invariant baked in.
struct LogStarValue {
    RealInterval value;
};

inline LogStarValue log_star_value(const RealInterval& x) { return {log_star(x)}; }

inline double log_star(double x) {
    if (!(x > 0)) throw domain_error("log_star of nonpositive value");
    double l = std::log(x);
    return l < 1.0 ? 1.0 : l;
}

/**
 * Logarithmic height h(x) = (1/deg x) log M(minimal polynomial of x),
 * computed from the characteristic polynomial: charpoly = minpoly^{d/e}
 * gives h = (1/d) log M(charpoly) with the leading scale cleared, so no
 * minimal polynomial is ever needed. The conjugate values come from the
 * field's embedding set.
 */
inline RealInterval log_height(const FieldElement& x, const EmbeddingSet& field_emb) {
    if (x.is_zero()) throw domain_error("log_height of zero");
    if (!(field_emb.poly() == x.field()->defining_poly()))
        throw domain_error("embedding set does not belong to the element's field");
    auto [p, s] = charpoly_scaled(x);
    (void)p;
    mpfr_prec_t prec = static_cast<mpfr_prec_t>(std::max<long>(64, field_emb.bits()));
    std::vector<ComplexBox> vals = embed_element(field_emb, x.coords(), x.den());
    RealInterval acc = RealInterval::from_integer(s, prec).log();
    for (const auto& v : vals) acc = acc + v.abs().max1().log();
    RealInterval d = RealInterval::from_long(x.degree(), prec);
    return acc / d;
}

/**
 * Certified evaluation of the two-sided real-conjugate separation statement
 * on an embedding set: with |g_1| <= ... <= |g_d|,
 *   (a) |g_1| < |g_2| and g_2 real implies |g_2| < |g_3|;
 *   (b) |g_{d-1}| < |g_d| and g_{d-1} real implies |g_{d-2}| < |g_{d-1}|.
 * For an irreducible polynomial a witness would contradict the theorem, so it
 * signals a certification bug (or a reducible input).
 */
struct TwoConjugatesReport {
    bool a_hypothesis = false;
    bool a_conclusion = false;
    bool b_hypothesis = false;
    bool b_conclusion = false;
    bool pass = true;
    std::string witness;  // empty unless a counterexample shape was found
};

inline TwoConjugatesReport check_two_conjugates_real(const EmbeddingSet& emb) {
    if (emb.degree() < 3) throw domain_error("two-conjugates check needs degree >= 3");
    TwoConjugatesReport r;
    const auto& groups = emb.tie_groups();
    int d = emb.degree();

    // (a): hypothesis needs the bottom group to be the singleton {1} and a
    // real root at sorted position 2; the conclusion |g_2| < |g_3| holds iff
    // the group containing position 2 is a singleton as well.
    {
        const auto& g0 = groups.front();
        if (g0.second - g0.first == 1) {
            int pos2_group = emb.tie_group_of(1);
            auto [b, e] = groups[static_cast<size_t>(pos2_group)];
            bool real_in_group = false;
            for (int k = b; k < e; ++k)
                if (emb.is_real(k)) real_in_group = true;
            if (real_in_group) {
                r.a_hypothesis = true;
                r.a_conclusion = (e - b == 1);
                if (!r.a_conclusion) {
                    r.pass = false;
                    r.witness = "part (a): second-smallest modulus is attained by a real root "
                                "and at least one other conjugate";
                }
            }
        }
    }
    // (b): mirrored at the top.
    {
        const auto& gl = groups.back();
        if (gl.second - gl.first == 1) {
            int posd1_group = emb.tie_group_of(d - 2);
            auto [b, e] = groups[static_cast<size_t>(posd1_group)];
            bool real_in_group = false;
            for (int k = b; k < e; ++k)
                if (emb.is_real(k)) real_in_group = true;
            if (real_in_group) {
                r.b_hypothesis = true;
                r.b_conclusion = (e - b == 1);
                if (!r.b_conclusion) {
                    r.pass = false;
                    if (!r.witness.empty()) r.witness += "; ";
                    r.witness += "part (b): second-largest modulus is attained by a real root "
                                 "and at least one other conjugate";
                }
            }
        }
    }
    return r;
}

}  // namespace thuetwist

#endif
