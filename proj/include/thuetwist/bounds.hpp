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

#ifndef THUETWIST_BOUNDS_HPP
#define THUETWIST_BOUNDS_HPP

#include <cmath>
#include <limits>
#include <string>
#include <vector>

#include "thuetwist/embeddings.hpp"
#include "thuetwist/errors.hpp"
#include "thuetwist/heights.hpp"
#include "thuetwist/integer.hpp"
#include "thuetwist/twist_family.hpp"

namespace thuetwist {

/**
 * Configurable constants for the two exponent-bound evaluators. The theory
 * guarantees effectively computable constants depending only on d but gives
 * no numeric values, so the defaults are 1 and every report echoes the
 * values used; empirical runs fit a minimal constant instead of asserting.
 */
struct KappaConfig {
    double kappa_thm1 = 1.0;
    double kappa_thm2 = 1.0;

    void validate() const {
        if (!(kappa_thm1 > 0) || !(kappa_thm2 > 0)) throw domain_error("kappa must be positive");
    }
};

/// kappa(d) of the modulus-separation estimate:
/// (sqrt(3)/2) (d(d+1)/2)^{-d(d+1)/4 - 1}.
inline double gs_constant(int d) {
    if (d < 2) throw domain_error("gs_constant needs d >= 2");
    double n = 0.5 * d * (d + 1);
    return 0.5 * std::sqrt(3.0) * std::pow(n, -(n / 2.0 + 1.0));
}

/// Guaranteed gap between distinct root moduli of an integer polynomial:
/// gs_constant(d) * M(P)^{-d(d^2+2d-1)/2}, evaluated with a certified upper
/// bound for M(P) (a smaller result, still a true lower bound for the gap).
inline double gs_separation(const IntPoly& p, const EmbeddingSet& emb) {
    int d = p.degree();
    if (d < 2) throw domain_error("gs_separation needs degree >= 2");
    double expo = 0.5 * d * (static_cast<double>(d) * d + 2.0 * d - 1.0);
    double log2m = emb.mahler_log2_upper();
    double log2gap = std::log2(gs_constant(d)) - expo * std::max(0.0, log2m);
    return std::exp2(log2gap);
}

/// Explicit floor for log(|v''|/|v'|) over conjugates of a unit with distinct
/// moduli: (gs_constant(d)/2) * lambda^{-(d^3+2d^2-d+2)/2}.
inline double ratio_lower_bound(int d, double lambda) {
    if (d < 3) throw domain_error("ratio_lower_bound needs degree >= 3");
    if (!(lambda >= 1.0)) throw domain_error("lambda must be >= 1");
    double expo = 0.5 * (static_cast<double>(d) * d * d + 2.0 * d * d - d + 2.0);
    return 0.5 * gs_constant(d) * std::exp(-expo * std::log(lambda));
}

/// Same floor, degree taken from the embedding set of the unit's minimal (or
/// squarefree characteristic) polynomial.
inline double ratio_lower_bound(const EmbeddingSet& upsilon_emb, double lambda) {
    return ratio_lower_bound(upsilon_emb.degree(), lambda);
}

/// Certified lower end of min log(|v''|/|v'|) over pairs of tie groups; the
/// quantity the explicit floor bounds. Returns +inf when every pair of
/// moduli is tied (vacuous case).
inline double min_log_modulus_ratio(const EmbeddingSet& emb) {
    double best = std::numeric_limits<double>::infinity();
    int ng = static_cast<int>(emb.tie_groups().size());
    for (int a = 0; a < ng; ++a)
        for (int b = a + 1; b < ng; ++b) {
            RealInterval ratio = emb.group_modulus(b) / emb.group_modulus(a);
            double lo = mpfr_get_d(ratio.log().lo().raw(), MPFR_RNDD);
            best = std::min(best, lo);
        }
    return best;
}

/**
 * Height threshold below which an algebraic integer of degree d must be a
 * root of unity: log 2 for d = 1 and 2/(d (log 3d)^3) for d >= 2 (Voutier's
 * explicit refinement of Dobrowolski). Any valid threshold at d = 2 must sit
 * below h(golden ratio) = 0.2406..., which this one does; the occasionally
 * quoted variant without the fraction bar would not.
 */
inline double voutier_bound(int d) {
    if (d < 1) throw domain_error("voutier_bound needs d >= 1");
    if (d == 1) return std::log(2.0);
    double l = std::log(3.0 * d);
    return 2.0 / (d * l * l * l);
}

/// Universal regulator floor for degree >= 2 (0.2052).
inline constexpr double friedman_regulator_floor = 0.2052;

inline bool friedman_check(const RealInterval& regulator) {
    return mpfr_cmp_d(regulator.lo().raw(), friedman_regulator_floor) > 0;
}

/// U <= V log* U implies U < 2 V log* V; evaluated as data for property tests.
struct ElementaryLemmaReport {
    bool hypothesis = false;
    bool conclusion = false;
};

inline ElementaryLemmaReport lemma_elementary(double u, double v) {
    if (!(u > 0) || !(v > 0)) throw domain_error("lemma_elementary needs positive inputs");
    ElementaryLemmaReport r;
    r.hypothesis = u <= v * log_star(u);
    r.conclusion = u < 2.0 * v * log_star(v);
    return r;
}

/// log of the right-hand side of the refined exponent bound
/// kappa (log lambda / log mu)(R + log m + log lambda0 + log lambda) R
///       log*(R (log lambda)^2 / log mu);
/// the inner logarithm is clamped with log* to keep the evaluator total.
inline double a_bound_thm2_log(double r, double m, double lambda0, double lambda,
                               double mu, const KappaConfig& cfg) {
    cfg.validate();
    if (!(lambda > 1)) throw domain_error("lambda must be > 1");
    if (!(mu > 1)) throw domain_error("mu must be > 1");
    if (!(r > 0)) throw domain_error("R must be positive");
    if (!(m >= 1)) throw domain_error("m must be >= 1");
    double logm = std::log(m);
    double loglam = std::log(lambda);
    double logmu = std::log(mu);
    double sum = r + logm + std::log(lambda0) + loglam;
    if (!(sum > 0)) throw domain_error("R + log m + log lambda0 + log lambda must be positive");
    double inner = log_star(r * loglam * loglam / logmu);
    return std::log(cfg.kappa_thm2) + std::log(loglam) - std::log(logmu) + std::log(sum) +
           std::log(r) + std::log(inner);
}

inline double a_bound_thm2(double r, double m, double lambda0, double lambda, double mu,
                           const KappaConfig& cfg) {
    return std::exp(a_bound_thm2_log(r, m, lambda0, lambda, mu, cfg));
}

inline double a_bound_thm2(double r, const Integer& m, double lambda0, double lambda, double mu,
                           const KappaConfig& cfg) {
    return a_bound_thm2(r, mpz_get_d(m.get_mpz_t()), lambda0, lambda, mu, cfg);
}

/// log of the right-hand side of the lambda-power exponent bound
/// kappa lambda^{d^2(d+2)/2} (R + log m + log lambda0) R log* R.
inline double a_bound_thm1_log(double r, double m, double lambda0, double lambda, int d,
                               const KappaConfig& cfg) {
    cfg.validate();
    if (d < 3) throw domain_error("degree must be >= 3");
    if (!(lambda > 1)) throw domain_error("lambda must be > 1");
    if (!(r > 0)) throw domain_error("R must be positive");
    if (!(m >= 1)) throw domain_error("m must be >= 1");
    double logm = std::log(m);
    double sum = r + logm + std::log(lambda0);
    if (!(sum > 0)) throw domain_error("R + log m + log lambda0 must be positive");
    double expo = 0.5 * d * d * (d + 2.0);
    return std::log(cfg.kappa_thm1) + expo * std::log(lambda) + std::log(sum) + std::log(r) +
           std::log(log_star(r));
}

inline double a_bound_thm1(double r, double m, double lambda0, double lambda, int d,
                           const KappaConfig& cfg) {
    return std::exp(a_bound_thm1_log(r, m, lambda0, lambda, d, cfg));
}

inline double a_bound_thm1(double r, const Integer& m, double lambda0, double lambda, int d,
                           const KappaConfig& cfg) {
    return a_bound_thm1(r, mpz_get_d(m.get_mpz_t()), lambda0, lambda, d, cfg);
}

/// The mu floor used to chain the refined bound into the lambda-power bound:
/// log mu >= kappa (log lambda)^2 / lambda^{d^2(d+2)/2} (kappa = 1 here; the
/// source constant is unspecified). Exposed for cross-checks against
/// certified mu values.
inline double mu_floor_log(double lambda, int d, double kappa = 1.0) {
    if (d < 3) throw domain_error("degree must be >= 3");
    if (!(lambda > 1)) throw domain_error("lambda must be > 1");
    double expo = 0.5 * d * d * (d + 2.0);
    double loglam = std::log(lambda);
    return kappa * loglam * loglam * std::exp(-expo * loglam);
}

/// log of the coordinate bound
/// log max{|x|, |y|} <= kappa (R + log* m + |a| log lambda + log lambda0) R log* R
/// with log kappa = (r+27) log 3 + (7r+19) log(r+1) + (2d+6r+15) log d; the
/// astronomically large kappa never materializes.
inline double xy_bound_log_kappa(int d, int unit_rank) {
    if (unit_rank < 0) throw domain_error("unit rank must be >= 0");
    if (d < 2) throw domain_error("degree must be >= 2");
    double rr = static_cast<double>(unit_rank);
    return (rr + 27.0) * std::log(3.0) + (7.0 * rr + 19.0) * std::log(rr + 1.0) +
           (2.0 * d + 6.0 * rr + 15.0) * std::log(static_cast<double>(d));
}

inline double xy_bound_log(double reg, double m, double lambda0, double lambda, double abs_a,
                           int d, int unit_rank) {
    if (!(reg > 0)) throw domain_error("R must be positive");
    if (!(m >= 1)) throw domain_error("m must be >= 1");
    if (!(abs_a >= 0)) throw domain_error("|a| must be >= 0");
    double sum = reg + log_star(m) + abs_a * std::log(lambda) + std::log(lambda0);
    return xy_bound_log_kappa(d, unit_rank) + std::log(sum) + std::log(reg) +
           std::log(log_star(reg));
}

inline double xy_bound_log(double reg, const Integer& m, double lambda0, double lambda,
                           const Integer& a, int d, int unit_rank) {
    return xy_bound_log(reg, mpz_get_d(m.get_mpz_t()), lambda0, lambda,
                        std::fabs(mpz_get_d(a.get_mpz_t())), d, unit_rank);
}

/**
 * Evaluated right-hand sides of the two exponent bounds and the coordinate
 * bound, all in log scale, with inputs and constants echoed. The headline
 * constants are not specified numerically by the theory; these evaluators
 * exist to compare bound shapes and to drive empirical fits, never to assert
 * the theorems.
 */
struct BoundReport {
    double log_a_bound_thm1 = 0;
    double log_a_bound_thm2 = 0;
    double log_xy_bound = 0;
    double regulator = 0;
    double lambda0 = 0;
    double lambda = 0;
    double mu = 0;
    std::string m;
    std::string a;
    int d = 0;
    int unit_rank = 0;
    double kappa_thm1 = 1;
    double kappa_thm2 = 1;
    double mu_floor_log_value = 0;  // chained floor for log mu (kappa = 1)
    bool mu_above_floor = false;
};

inline BoundReport make_bound_report(double reg, const Integer& m, double lambda0, double lambda,
                                     double mu, const Integer& a, int d, int unit_rank,
                                     const KappaConfig& cfg) {
    BoundReport rep;
    double md = mpz_get_d(m.get_mpz_t());
    rep.log_a_bound_thm1 = a_bound_thm1_log(reg, md, lambda0, lambda, d, cfg);
    rep.log_a_bound_thm2 = a_bound_thm2_log(reg, md, lambda0, lambda, mu, cfg);
    rep.log_xy_bound = xy_bound_log(reg, m, lambda0, lambda, a, d, unit_rank);
    rep.regulator = reg;
    rep.lambda0 = lambda0;
    rep.lambda = lambda;
    rep.mu = mu;
    rep.m = to_decimal(m);
    rep.a = to_decimal(a);
    rep.d = d;
    rep.unit_rank = unit_rank;
    rep.kappa_thm1 = cfg.kappa_thm1;
    rep.kappa_thm2 = cfg.kappa_thm2;
    rep.mu_floor_log_value = mu_floor_log(lambda, d);
    rep.mu_above_floor = std::log(mu) >= rep.mu_floor_log_value;
    return rep;
}

}  // namespace thuetwist

#endif
