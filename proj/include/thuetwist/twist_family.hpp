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

#ifndef THUETWIST_TWIST_FAMILY_HPP
#define THUETWIST_TWIST_FAMILY_HPP

#include <array>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "thuetwist/embeddings.hpp"
#include "thuetwist/errors.hpp"
#include "thuetwist/heights.hpp"
#include "thuetwist/integer.hpp"
#include "thuetwist/number_field.hpp"
#include "thuetwist/polynomial.hpp"

namespace thuetwist {

/**
 * Homogeneous binary form of degree d with exact integer coefficients;
 * coeffs[k] multiplies X^{d-k} Y^k, so coeffs[0] is the leading coefficient.
 */
struct BinaryForm {
    int degree = 0;
    std::vector<Integer> coeffs;

    bool operator==(const BinaryForm& o) const { return degree == o.degree && coeffs == o.coeffs; }

    /// Exact evaluation at integer (x, y).
    Integer operator()(const Integer& x, const Integer& y) const {
        Integer acc(0);
        Integer ypow(1);
        // sum_k c_k x^{d-k} y^k via Horner in x
        for (int k = 0; k <= degree; ++k) {
            acc = acc * x + coeffs[static_cast<size_t>(k)] * ypow;
            if (k < degree) ypow *= y;
        }
        return acc;
    }

    std::string to_string(const std::string& xv = "X", const std::string& yv = "Y") const {
        std::string out;
        for (int k = 0; k <= degree; ++k) {
            const Integer& c = coeffs[static_cast<size_t>(k)];
            if (c == 0) continue;
            bool neg = c < 0;
            std::string cs = to_decimal(int_abs(c));
            std::string mono;
            int xe = degree - k, ye = k;
            if (xe > 0) mono += xv + (xe == 1 ? "" : "^" + std::to_string(xe));
            if (ye > 0) mono += yv + (ye == 1 ? "" : "^" + std::to_string(ye));
            detail::append_term(out, cs, neg, mono);
        }
        return out.empty() ? "0" : out;
    }
};

inline Integer evaluate_form(const BinaryForm& f, const Integer& x, const Integer& y) {
    return f(x, y);
}

enum class MuCase {
    case1_tie,         // |v_1| = |v_{d-1}| or |v_2| = |v_d|: mu = lambda
    case2_middle_tie,  // |v_1| < |v_2| = |v_{d-1}| < |v_d|
    case3_generic,     // |v_2| < |v_{d-1}|
};

inline const char* to_string(MuCase c) {
    switch (c) {
        case MuCase::case1_tie: return "case1_tie";
        case MuCase::case2_middle_tie: return "case2_middle_tie";
        case MuCase::case3_generic: return "case3_generic";
    }
    return "?";
}

struct FamilyInvariants {
    RealInterval lambda0;
    RealInterval lambda;
    RealInterval mu;
    MuCase mu_case = MuCase::case1_tie;
    /// lambda0 of the a0-rescaled family (alpha' = a0 alpha, a0' = 1); equals
    /// lambda0 when a0 = 1.
    RealInterval lambda0_rescaled;
};

/**
 * Labeling of the field embeddings by ascending |sigma_j(upsilon)| with
 * certified tie groups. The conjugate multiset of upsilon is matched against
 * the isolated roots of the squarefree part of its characteristic polynomial,
 * so equalities coming from upsilon generating a proper subfield are proven
 * exact as well.
 */
struct UnitConjugateOrder {
    std::vector<int> position_to_embedding;  // ascending |sigma(upsilon)|
    std::vector<int> group_of_position;
    std::vector<RealInterval> group_modulus;  // ascending
    int multiplicity = 1;

    int degree() const { return static_cast<int>(position_to_embedding.size()); }
    const RealInterval& modulus_at(int pos) const {
        return group_modulus[static_cast<size_t>(group_of_position[static_cast<size_t>(pos)])];
    }
    bool equal_positions(int p, int q) const {
        return group_of_position[static_cast<size_t>(p)] ==
               group_of_position[static_cast<size_t>(q)];
    }
};

namespace detail {

/// sigma(gamma) at position pos of the ascending-|sigma(upsilon)| labeling.
inline const ComplexBox& gamma_at(const std::vector<ComplexBox>& gvals,
                                  const UnitConjugateOrder& ord, int pos) {
    return gvals[static_cast<size_t>(ord.position_to_embedding[static_cast<size_t>(pos)])];
}

inline ComplexBox box_pow(const ComplexBox& z, long e) {
    mpfr_prec_t p = z.prec();
    ComplexBox one(p);
    one.re = RealInterval::from_long(1, p);
    if (e == 0) return one;
    if (e < 0) return one / box_pow(z, -e);
    ComplexBox acc = one;
    ComplexBox base = z;
    long k = e;
    while (k > 0) {
        if (k & 1) acc = acc * base;
        base = base * base;
        k >>= 1;
    }
    return acc;
}

}  // namespace detail

/**
 * Family of twisted forms F_a = a0 prod (X - sigma_i(alpha upsilon^a) Y).
 * Checked construction enforces the theorem hypotheses: upsilon a unit, not a
 * root of unity (exact power test, then M(upsilon) > 1 certified), a0 >= 1,
 * and a0 * charpoly(alpha) integral. The unchecked factory admits a
 * root-of-unity twist for the counterexample demo and flags itself.
 */
class TwistFamily {
  public:
    static TwistFamily create(FieldPtr field, FieldElement alpha, FieldElement upsilon,
                              Integer a0, const PrecisionConfig& cfg = {}) {
        return TwistFamily(std::move(field), std::move(alpha), std::move(upsilon), std::move(a0),
                           cfg, false);
    }
    /// Demo-only path that bypasses the root-of-unity rejection.
    static TwistFamily create_unchecked_root_of_unity(FieldPtr field, FieldElement alpha,
                                                      FieldElement upsilon, Integer a0,
                                                      const PrecisionConfig& cfg = {}) {
        return TwistFamily(std::move(field), std::move(alpha), std::move(upsilon), std::move(a0),
                           cfg, true);
    }

    const FieldPtr& field() const { return k_; }
    const FieldElement& alpha() const { return alpha_; }
    const FieldElement& upsilon() const { return upsilon_; }
    const Integer& a0() const { return a0_; }
    const EmbeddingSet& embeddings() const { return emb_; }
    const PrecisionConfig& precision() const { return cfg_; }
    bool outside_theorem_hypotheses() const { return unchecked_; }

  private:
    TwistFamily(FieldPtr field, FieldElement alpha, FieldElement upsilon, Integer a0,
                const PrecisionConfig& cfg, bool unchecked)
        : k_(std::move(field)),
          alpha_(std::move(alpha)),
          upsilon_(std::move(upsilon)),
          a0_(std::move(a0)),
          cfg_(cfg),
          unchecked_(unchecked),
          emb_(isolate_roots(k_->defining_poly(), cfg)) {
        if (!alpha_.field()->same_as(*k_) || !upsilon_.field()->same_as(*k_))
            throw domain_error("family members from different fields");
        if (alpha_.is_zero()) throw domain_error("alpha must be nonzero");
        if (a0_ < 1) throw domain_error("a0 must be >= 1");
        if (!is_unit(upsilon_)) throw domain_error("upsilon must be a unit");
        if (!unchecked_) {
            if (is_root_of_unity(upsilon_))
                throw domain_error("upsilon is a root of unity (excluded by hypothesis)");
        }
        // a0 * charpoly(alpha) must be integral (defines F_0 over Z)
        RatPoly ca = charpoly_of(alpha_);
        for (int i = 0; i <= ca.degree(); ++i) {
            Rational c = Rational(a0_) * ca.coeff(i);
            if (!is_integer(c))
                throw domain_error("a0 * charpoly(alpha) is not integral: invalid (alpha, a0)");
        }
        if (!unchecked_) certify_not_root_of_unity();
    }

    /// Kronecker part (a) in certified form: M(upsilon) > 1 strictly. The
    /// exact power test above already excluded roots of unity, so this
    /// terminates below the cap.
    void certify_not_root_of_unity() {
        PrecisionConfig c = cfg_;
        while (true) {
            EmbeddingSet e = (c.bits == cfg_.bits) ? emb_ : isolate_roots(k_->defining_poly(), c);
            RealInterval lam = lambda_from(e, upsilon_);
            if (mpfr_cmp_ui(lam.lo().raw(), 1) > 0) return;
            if (c.bits >= c.max_bits)
                throw certification_error("cannot certify M(upsilon) > 1 below the precision cap");
            c.bits = std::min(c.max_bits, c.bits * 2);
        }
    }

    static RealInterval lambda_from(const EmbeddingSet& e, const FieldElement& u) {
        mpfr_prec_t prec = static_cast<mpfr_prec_t>(std::max<long>(64, e.bits()));
        RealInterval acc = RealInterval::from_long(1, prec);
        for (const auto& v : embed_element(e, u.coords(), u.den())) acc = acc * v.abs().max1();
        return acc;
    }

    friend RealInterval family_lambda(const TwistFamily& fam);
    friend RealInterval family_lambda0(const TwistFamily& fam, bool rescaled);

    FieldPtr k_;
    FieldElement alpha_;
    FieldElement upsilon_;
    Integer a0_;
    PrecisionConfig cfg_;
    bool unchecked_;
    EmbeddingSet emb_;
};

/// lambda = prod max{1, |sigma_i(upsilon)|}, certified.
inline RealInterval family_lambda(const TwistFamily& fam) {
    return TwistFamily::lambda_from(fam.embeddings(), fam.upsilon());
}

/// lambda0 = a0 prod max{1, |sigma_i(alpha)|}; the rescaled variant reports
/// the same quantity for (alpha' = a0 alpha, a0' = 1).
inline RealInterval family_lambda0(const TwistFamily& fam, bool rescaled = false) {
    const EmbeddingSet& e = fam.embeddings();
    mpfr_prec_t prec = static_cast<mpfr_prec_t>(std::max<long>(64, e.bits()));
    if (!rescaled) {
        RealInterval acc = RealInterval::from_integer(fam.a0(), prec);
        for (const auto& v : embed_element(e, fam.alpha().coords(), fam.alpha().den()))
            acc = acc * v.abs().max1();
        return acc;
    }
    FieldElement scaled = Rational(fam.a0()) * fam.alpha();
    RealInterval acc = RealInterval::from_long(1, prec);
    for (const auto& v : embed_element(e, scaled.coords(), scaled.den()))
        acc = acc * v.abs().max1();
    return acc;
}

/**
 * Exact twisted form: coefficients are a0 times the characteristic polynomial
 * of alpha upsilon^a, homogenized with coeffs[0] = a0. Non-integral scaled
 * coefficients signal an invalid (alpha, a0) pair and raise domain_error.
 */
inline BinaryForm form_at(const TwistFamily& fam, long a) {
    FieldElement gamma = fam.alpha() * fam.upsilon().pow(a);
    RatPoly c = charpoly_of(gamma);
    int d = fam.field()->degree();
    BinaryForm f;
    f.degree = d;
    f.coeffs.resize(static_cast<size_t>(d) + 1);
    for (int k = 0; k <= d; ++k) {
        Rational v = Rational(fam.a0()) * c.coeff(d - k);
        if (!is_integer(v))
            throw domain_error("non-integral scaled coefficient in twisted form");
        f.coeffs[static_cast<size_t>(k)] = v.get_num();
    }
    return f;
}

/**
 * Ascending-|sigma(upsilon)| labeling with certified tie groups; see
 * UnitConjugateOrder. Escalates precision internally up to cfg.max_bits.
 */
inline UnitConjugateOrder unit_conjugate_order(const TwistFamily& fam) {
    const FieldElement& u = fam.upsilon();
    auto [cp, scale] = charpoly_scaled(u);
    if (scale != 1) throw domain_error("upsilon is not integral");
    IntPoly sf = squarefree_part(cp);
    int d = fam.field()->degree();
    int mult = d / std::max(1, sf.degree());
    PrecisionConfig cfg = fam.precision();

    PrecisionConfig local = cfg;
    while (true) {
        EmbeddingSet se = isolate_roots(sf, local);
        const EmbeddingSet& fe =
            (local.bits == cfg.bits) ? fam.embeddings()
                                     : isolate_roots(fam.field()->defining_poly(), local);
        std::vector<ComplexBox> vals = embed_element(fe, u.coords(), u.den());
        std::vector<int> assign(static_cast<size_t>(d), -1);
        bool ambiguous = false;
        for (int j = 0; j < d && !ambiguous; ++j) {
            int found = -1;
            for (int t = 0; t < se.degree(); ++t) {
                if (vals[static_cast<size_t>(j)].overlaps(se.box(t))) {
                    if (found >= 0) {
                        ambiguous = true;
                        break;
                    }
                    found = t;
                }
            }
            if (found < 0) ambiguous = true;  // should not happen; outward rounding
            assign[static_cast<size_t>(j)] = found;
        }
        if (!ambiguous) {
            // group sizes must be multiplicity * (class size in the squarefree part)
            std::vector<int> count(se.tie_groups().size(), 0);
            std::vector<int> grp(static_cast<size_t>(d));
            for (int j = 0; j < d; ++j) {
                int gi = se.tie_group_of(assign[static_cast<size_t>(j)]);
                grp[static_cast<size_t>(j)] = gi;
                ++count[static_cast<size_t>(gi)];
            }
            bool sizes_ok = true;
            for (size_t gi = 0; gi < count.size(); ++gi) {
                auto [b, e] = se.tie_groups()[gi];
                if (count[gi] != mult * (e - b)) sizes_ok = false;
            }
            if (sizes_ok) {
                UnitConjugateOrder out;
                out.multiplicity = mult;
                out.position_to_embedding.resize(static_cast<size_t>(d));
                std::iota(out.position_to_embedding.begin(), out.position_to_embedding.end(), 0);
                std::sort(out.position_to_embedding.begin(), out.position_to_embedding.end(),
                          [&](int x, int y) {
                              int gx = grp[static_cast<size_t>(x)], gy = grp[static_cast<size_t>(y)];
                              if (gx != gy) return gx < gy;
                              return x < y;
                          });
                out.group_of_position.resize(static_cast<size_t>(d));
                for (int p = 0; p < d; ++p)
                    out.group_of_position[static_cast<size_t>(p)] =
                        grp[static_cast<size_t>(out.position_to_embedding[static_cast<size_t>(p)])];
                for (size_t gi = 0; gi < se.tie_groups().size(); ++gi)
                    out.group_modulus.push_back(se.group_modulus(static_cast<int>(gi)));
                return out;
            }
        }
        if (local.bits >= local.max_bits)
            throw certification_error("cannot match upsilon conjugates to isolated roots "
                                      "below the precision cap");
        local.bits = std::min(local.max_bits, local.bits * 2);
    }
}

/**
 * The family invariants: certified lambda0 and lambda, and mu selected by the
 * exact three-case analysis on proven tie groups of |sigma(upsilon)|.
 */
inline FamilyInvariants invariants_of(const TwistFamily& fam) {
    FamilyInvariants inv{RealInterval(64), RealInterval(64), RealInterval(64),
                         MuCase::case1_tie, RealInterval(64)};
    inv.lambda0 = family_lambda0(fam, false);
    inv.lambda0_rescaled = family_lambda0(fam, true);
    inv.lambda = family_lambda(fam);
    UnitConjugateOrder ord = unit_conjugate_order(fam);
    int d = ord.degree();
    if (d < 2) throw domain_error("invariants need degree >= 2");
    // 1-indexed positions in the three-case analysis: 1, 2, d-1, d
    auto eq = [&](int p, int q) { return ord.equal_positions(p - 1, q - 1); };
    if (eq(1, d - 1) || eq(2, d)) {
        inv.mu_case = MuCase::case1_tie;
        inv.mu = inv.lambda;
    } else if (!eq(1, 2) && eq(2, d - 1) && !eq(d - 1, d)) {
        inv.mu_case = MuCase::case2_middle_tie;
        RealInterval r1 = ord.modulus_at(d - 2) / ord.modulus_at(0);
        RealInterval r2 = ord.modulus_at(d - 1) / ord.modulus_at(1);
        inv.mu = interval_min(r1, r2);
    } else {
        inv.mu_case = MuCase::case3_generic;
        inv.mu = ord.modulus_at(d - 2) / ord.modulus_at(1);
    }
    return inv;
}

/// chi = log*(lambda0) log*(lambda) log*(|a| min{1, log*(lambda)/log*(lambda0)}).
inline RealInterval chi(const RealInterval& lambda0, const RealInterval& lambda, long a) {
    if (a == 0) throw domain_error("chi needs a != 0");
    RealInterval l0 = log_star(lambda0);
    RealInterval l1 = log_star(lambda);
    mpfr_prec_t prec = std::max(l0.prec(), l1.prec());
    RealInterval one = RealInterval::from_long(1, prec);
    RealInterval ratio = interval_min(one, l1 / l0);
    RealInterval inner = RealInterval::from_long(a < 0 ? -a : a, prec) * ratio;
    return l0 * l1 * log_star(inner);
}

/**
 * The four certified unit-modulus inequalities
 *   lambda^{1/(d-1)} <= |v_d| <= lambda,  lambda^{-1} <= |v_1| <= lambda^{-1/(d-1)}.
 * They are theorems for any unit that is not a root of unity, so the check
 * reports only *certified violations* (boundary equalities, which do occur,
 * pass). A violation is a bug witness, not an input error.
 */
struct UnitModulusBoundsReport {
    bool house_lower_ok = true;   // lambda^{1/(d-1)} <= |v_d|
    bool house_upper_ok = true;   // |v_d| <= lambda
    bool small_lower_ok = true;   // lambda^{-1} <= |v_1|
    bool small_upper_ok = true;   // |v_1| <= lambda^{-1/(d-1)}
    bool pass() const { return house_lower_ok && house_upper_ok && small_lower_ok && small_upper_ok; }
};

inline UnitModulusBoundsReport check_unit_modulus_bounds(const UnitConjugateOrder& ord,
                                                         const RealInterval& lambda) {
    int d = ord.degree();
    if (d < 2) throw domain_error("unit modulus bounds need degree >= 2");
    const RealInterval& v1 = ord.modulus_at(0);
    const RealInterval& vd = ord.modulus_at(d - 1);
    RealInterval root = lambda.rootn(static_cast<unsigned long>(d - 1));
    mpfr_prec_t prec = lambda.prec();
    RealInterval one = RealInterval::from_long(1, prec);
    UnitModulusBoundsReport rep;
    rep.house_lower_ok = root.le_possible(vd);
    rep.house_upper_ok = vd.le_possible(lambda);
    rep.small_lower_ok = (one / lambda).le_possible(v1);
    rep.small_upper_ok = v1.le_possible(one / root);
    return rep;
}

/**
 * Normalized linear-factor ratios Psi_i at a solution (x, y, a) with y > 0:
 * beta_i = x - sigma_i(gamma) y over the ascending-|sigma(upsilon)| labeling,
 * i0 the certified argmin of |beta_i| (lowest index on proven ties), and
 *   Psi_i = beta_i / (gamma_{i0} y)              for i < i0,
 *   Psi_i = beta_i / (gamma_i y)                 for i > i0,
 *   Psi_{i0} = beta_{i0} y^{d-1} gamma_{i0}^{i0-2} / (m gamma_1 ... gamma_{i0-1})
 * where m = F_a(x, y) / a0 = prod beta_i exactly.
 */
struct PsiReport {
    int i0 = 0;  // 1-indexed position in the ascending-|sigma(upsilon)| order
    std::vector<RealInterval> psi_abs;
    RealInterval beta_product_re;  // contains m = value / a0
    bool product_contains_m = false;
    bool norm_identity_ok = false;  // prod Psi_i * N(gamma) contains 1
    Integer value;                  // F_a(x, y), exact
};

inline PsiReport psi_values(const TwistFamily& fam, const Integer& x, const Integer& y, long a,
                            const Integer& m) {
    if (y <= 0) throw domain_error("psi_values needs y > 0 (normalize signs first)");
    if (m < 1) throw domain_error("psi_values needs m >= 1");
    FieldElement gamma = fam.alpha() * fam.upsilon().pow(a);
    BinaryForm f = form_at(fam, a);
    Integer value = f(x, y);
    if (value == 0 || int_abs(value) > m)
        throw domain_error("(x, y, a) is not a solution of 0 < |F_a(x,y)| <= m");
    Rational mexact = Rational(value, fam.a0());
    mexact.canonicalize();

    UnitConjugateOrder ord = unit_conjugate_order(fam);
    int d = ord.degree();

    // The |beta_i| tie structure is exact, not numeric: the conjugates of
    // beta = x - gamma y are the roots of its characteristic polynomial, so
    // the certified tie groups of that polynomial's squarefree part decide
    // every modulus comparison (including the all-equal degenerate case).
    FieldElement beta_el =
        FieldElement::from_rational(fam.field(), Rational(x)) - Rational(y) * gamma;
    IntPoly beta_sf = squarefree_part(charpoly_of(beta_el).clear_denominators().second);

    PrecisionConfig local = fam.precision();
    while (true) {
        const EmbeddingSet fe = isolate_roots(fam.field()->defining_poly(), local);
        const EmbeddingSet be = isolate_roots(beta_sf, local);
        std::vector<ComplexBox> gvals = embed_element(fe, gamma.coords(), gamma.den());
        mpfr_prec_t prec = static_cast<mpfr_prec_t>(std::max<long>(64, fe.bits()));
        RealInterval xi = RealInterval::from_integer(x, prec);
        RealInterval yi = RealInterval::from_integer(y, prec);

        std::vector<ComplexBox> beta;
        beta.reserve(static_cast<size_t>(d));
        for (int p = 0; p < d; ++p) {
            const ComplexBox& g = gvals[static_cast<size_t>(ord.position_to_embedding[static_cast<size_t>(p)])];
            ComplexBox b(prec);
            b.re = xi - g.re * yi;
            b.im = -(g.im * yi);
            beta.push_back(std::move(b));
        }
        // match each beta_p to a root of the squarefree characteristic
        // polynomial; the root's tie group ranks |beta_p| exactly
        std::vector<int> rank(static_cast<size_t>(d), -1);
        bool ambiguous = false;
        for (int p = 0; p < d && !ambiguous; ++p) {
            int found = -1;
            for (int t = 0; t < be.degree(); ++t) {
                if (beta[static_cast<size_t>(p)].overlaps(be.box(t))) {
                    if (found >= 0) {
                        ambiguous = true;
                        break;
                    }
                    found = t;
                }
            }
            if (found < 0) ambiguous = true;
            else rank[static_cast<size_t>(p)] = be.tie_group_of(found);
        }
        if (ambiguous) {
            if (local.bits >= local.max_bits)
                throw certification_error("argmin |beta_i| not certifiable at the precision cap");
            local.bits = std::min(local.max_bits, local.bits * 2);
            continue;
        }
        int i0 = 0;  // lowest position inside the bottom tie group
        for (int p = 0; p < d; ++p)
            if (rank[static_cast<size_t>(p)] == 0) {
                i0 = p;
                break;
            }

        PsiReport rep;
        rep.i0 = i0 + 1;
        rep.value = value;
        std::vector<ComplexBox> psi(static_cast<size_t>(d), ComplexBox(prec));
        ComplexBox ycplx(prec);
        ycplx.re = yi;
        for (int p = 0; p < d; ++p) {
            if (p < i0)
                psi[static_cast<size_t>(p)] =
                    beta[static_cast<size_t>(p)] / (detail::gamma_at(gvals, ord, i0) * ycplx);
            else if (p > i0)
                psi[static_cast<size_t>(p)] =
                    beta[static_cast<size_t>(p)] / (detail::gamma_at(gvals, ord, p) * ycplx);
        }
        {
            // Psi_{i0} = beta_{i0} y^{d-1} gamma_{i0}^{i0-2} / (m prod_{p<i0} gamma_p)
            ComplexBox num = beta[static_cast<size_t>(i0)];
            RealInterval yp = yi.pow_int(d - 1);
            num.re = num.re * yp;
            num.im = num.im * yp;
            num = num * detail::box_pow(detail::gamma_at(gvals, ord, i0), i0 + 1 - 2);
            ComplexBox den(prec);
            den.re = RealInterval::from_rational(mexact, prec);
            for (int p = 0; p < i0; ++p) den = den * detail::gamma_at(gvals, ord, p);
            psi[static_cast<size_t>(i0)] = num / den;
        }
        for (const auto& ps : psi) rep.psi_abs.push_back(ps.abs());

        // consistency: prod beta_i contains m, and prod Psi_i * N(gamma) contains 1
        ComplexBox prod(prec);
        prod.re = RealInterval::from_long(1, prec);
        for (const auto& b : beta) prod = prod * b;
        rep.beta_product_re = prod.re;
        rep.product_contains_m = prod.re.contains(mexact) && prod.im.contains_zero();
        ComplexBox pprod(prec);
        pprod.re = RealInterval::from_long(1, prec);
        for (const auto& ps : psi) pprod = pprod * ps;
        Rational ng = norm(gamma);
        ComplexBox total = pprod;
        total.re = total.re * RealInterval::from_rational(ng, prec);
        total.im = total.im * RealInterval::from_rational(ng, prec);
        rep.norm_identity_ok = total.re.contains(Rational(1)) && total.im.contains_zero();
        return rep;
    }
}

/**
 * Degree-lh form prod_i (X^h - eps_i^a Y^h) for a unit eps of degree l >= 2:
 * substitute T -> X^h / Y^h in the characteristic polynomial of eps^a over
 * Q(eps) and clear Y^{lh}. Exact integer coefficients.
 */
inline BinaryForm power_family(const IntPoly& eps_minpoly, int h, long a) {
    if (h < 2) throw domain_error("power_family needs h >= 2");
    FieldPtr L = NumberField::create(eps_minpoly);
    FieldElement eps = FieldElement::theta(L);
    if (!is_unit(eps)) throw domain_error("power_family needs a unit eps");
    if (is_root_of_unity(eps)) throw domain_error("power_family needs eps not a root of unity");
    auto [cp, scale] = charpoly_scaled(eps.pow(a));
    if (scale != 1) throw domain_error("unexpected non-integral characteristic polynomial");
    int l = eps_minpoly.degree();
    int d = l * h;
    BinaryForm f;
    f.degree = d;
    f.coeffs.assign(static_cast<size_t>(d) + 1, Integer(0));
    // T^k contributes X^{hk} Y^{h(l-k)}: coefficient index j = h(l-k)
    for (int k = 0; k <= l; ++k)
        f.coeffs[static_cast<size_t>(h * (l - k))] = cp.coeff(k);
    return f;
}

/**
 * Counterexample demo: over K = Q(zeta_n) with upsilon = zeta_n (a root of
 * unity, so outside the theorem hypotheses; uses the unchecked constructor),
 * the twisted form of zeta_n^a equals the base form built from Phi_n for
 * every a coprime to n. For n = 12 also enumerates x^4 - x^2 y^2 + y^4 = 1
 * over |x|, |y| <= 10, xy != 0.
 */
struct CyclotomicReport {
    int n = 0;
    IntPoly phi;
    BinaryForm base_form;
    std::vector<long> coprime_a;
    bool all_forms_equal = false;
    std::vector<std::array<long, 2>> solutions;  // n = 12 scan
};

inline CyclotomicReport cyclotomic_demo(int n) {
    if (n < 3) throw domain_error("cyclotomic demo needs n >= 3");
    CyclotomicReport rep;
    rep.n = n;
    rep.phi = cyclotomic(n);
    int d = rep.phi.degree();
    FieldPtr K = NumberField::create(rep.phi);
    TwistFamily fam = TwistFamily::create_unchecked_root_of_unity(
        K, FieldElement::one(K), FieldElement::theta(K), Integer(1));
    // base form: a0 prod (X - sigma(zeta) Y), i.e. Phi_n homogenized
    rep.base_form.degree = d;
    rep.base_form.coeffs.resize(static_cast<size_t>(d) + 1);
    for (int k = 0; k <= d; ++k) rep.base_form.coeffs[static_cast<size_t>(k)] = rep.phi.coeff(d - k);
    rep.all_forms_equal = true;
    for (long a = 1; a <= n; ++a) {
        if (std::gcd(a, static_cast<long>(n)) != 1) continue;
        rep.coprime_a.push_back(a);
        if (!(form_at(fam, a) == rep.base_form)) rep.all_forms_equal = false;
    }
    if (n == 12) {
        for (long x = -10; x <= 10; ++x)
            for (long y = -10; y <= 10; ++y) {
                if (x == 0 || y == 0) continue;
                if (rep.base_form(Integer(x), Integer(y)) == 1)
                    rep.solutions.push_back({x, y});
            }
    }
    return rep;
}

}  // namespace thuetwist

#endif
