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

#ifndef THUETWIST_SOLVER_HPP
#define THUETWIST_SOLVER_HPP

#include <algorithm>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "thuetwist/bounds.hpp"
#include "thuetwist/errors.hpp"
#include "thuetwist/integer.hpp"
#include "thuetwist/twist_family.hpp"

namespace thuetwist {

/// Desk-scale truncation of the unbounded search: exponents a in
/// [a_min, a_max], coordinates |x|, |y| <= xy_max, inequality bound m >= 1.
struct SearchBox {
    long a_min = 0;
    long a_max = 0;
    long xy_max = 1;
    Integer m = 1;

    void validate() const {
        if (a_min > a_max) throw domain_error("a_min > a_max");
        if (xy_max < 1) throw domain_error("xy_max must be >= 1");
        if (m < 1) throw domain_error("m must be >= 1");
    }
};

struct SolutionTriple {
    Integer x, y;
    long a = 0;
    Integer value;  // F_a(x, y), exact

    friend bool operator==(const SolutionTriple& s, const SolutionTriple& t) {
        return s.a == t.a && s.x == t.x && s.y == t.y && s.value == t.value;
    }
    friend bool operator<(const SolutionTriple& s, const SolutionTriple& t) {
        if (s.a != t.a) return s.a < t.a;
        if (s.y != t.y) return s.y < t.y;
        return s.x < t.x;
    }
};

struct SolutionSet {
    std::vector<SolutionTriple> solutions;  // sorted by (a, y, x), no duplicates
    std::vector<long> skipped_a;            // excluded by the degree filter
    long fullscan_fallbacks = 0;            // y-rows scanned without windows
};

namespace detail {

inline long to_long_clamped(const Integer& v) { return to_long_checked(v, "coordinate bound"); }

/// Candidate x-ranges for one y from windows around the real embeddings of
/// gamma; nullopt demands a full scan (windows unavailable or too wide).
/// Soundness: any x with |F_a(x, y)| <= m lies in one of the returned ranges.
inline std::optional<std::vector<std::pair<long, long>>> candidate_windows(
    const std::vector<ComplexBox>& gvals, const Integer& y, const Rational& m_over_a0,
    long xy_max) {
    mpfr_prec_t prec = 64;
    for (const auto& g : gvals) prec = std::max(prec, g.prec());
    RealInterval yi = RealInterval::from_integer(y, prec);
    std::vector<int> realish;
    RealInterval floor_prod = RealInterval::from_long(1, prec);
    for (int j = 0; j < static_cast<int>(gvals.size()); ++j) {
        const ComplexBox& g = gvals[static_cast<size_t>(j)];
        if (g.im.contains_zero()) {
            realish.push_back(j);
        } else {
            floor_prod = floor_prod * (g.im.abs() * yi);
        }
    }
    RealInterval bound = RealInterval::from_rational(m_over_a0, prec);
    if (realish.empty()) {
        // every linear factor is bounded below by |Im| y; no x exists when the
        // product already exceeds the bound
        if (bound.certainly_less(floor_prod)) return std::vector<std::pair<long, long>>{};
        return std::nullopt;  // full scan
    }
    if (!floor_prod.is_positive()) return std::nullopt;
    RealInterval q = bound / floor_prod;
    // window half-width: q^{1/#realish}, upper end
    Mpfr wh(prec);
    mpfr_rootn_ui(wh.raw(), q.hi().raw(), static_cast<unsigned long>(realish.size()), MPFR_RNDU);
    std::vector<std::pair<long, long>> ranges;
    long budget = 2 * xy_max + 1;
    long used = 0;
    for (int j : realish) {
        const ComplexBox& g = gvals[static_cast<size_t>(j)];
        RealInterval center = g.re * yi;
        Mpfr lo(prec), hi(prec);
        mpfr_sub(lo.raw(), center.lo().raw(), wh.raw(), MPFR_RNDD);
        mpfr_add(hi.raw(), center.hi().raw(), wh.raw(), MPFR_RNDU);
        Integer xlo, xhi;
        mpfr_get_z(xlo.get_mpz_t(), lo.raw(), MPFR_RNDD);
        mpfr_get_z(xhi.get_mpz_t(), hi.raw(), MPFR_RNDU);
        if (xlo < -xy_max) xlo = -xy_max;
        if (xhi > xy_max) xhi = xy_max;
        if (xlo > xhi) continue;
        long l = to_long_clamped(xlo), h = to_long_clamped(xhi);
        used += h - l + 1;
        if (used >= budget) return std::nullopt;  // windows no better than a full scan
        ranges.emplace_back(l, h);
    }
    std::sort(ranges.begin(), ranges.end());
    std::vector<std::pair<long, long>> merged;
    for (auto& r : ranges) {
        if (!merged.empty() && r.first <= merged.back().second + 1)
            merged.back().second = std::max(merged.back().second, r.second);
        else
            merged.push_back(r);
    }
    return merged;
}

}  // namespace detail

/**
 * Exhaustive enumeration of 0 < |F_a(x, y)| <= m with xy != 0 over the box.
 * For each admissible a the scan runs over y in [1, xy_max] with x restricted
 * to certified windows around the real embeddings of gamma y (full-scan
 * fallback on any precision trouble), and solutions are mirrored to y < 0 via
 * F_a(-x, -y) = (-1)^d F_a(x, y). Exhaustiveness within the box is a hard
 * contract; the windowed scan and the plain double loop agree exactly.
 */
inline SolutionSet enumerate_solutions(const TwistFamily& fam, const SearchBox& box,
                                       bool require_degree) {
    box.validate();
    SolutionSet out;
    int d = fam.field()->degree();
    Rational m_over_a0 = Rational(box.m, fam.a0());
    m_over_a0.canonicalize();
    for (long a = box.a_min; a <= box.a_max; ++a) {
        FieldElement gamma = fam.alpha() * fam.upsilon().pow(a);
        if (require_degree && !generates_field(gamma)) {
            out.skipped_a.push_back(a);
            continue;
        }
        BinaryForm f = form_at(fam, a);
        std::vector<ComplexBox> gvals =
            embed_element(fam.embeddings(), gamma.coords(), gamma.den());
        for (long y = 1; y <= box.xy_max; ++y) {
            Integer yz(y);
            std::optional<std::vector<std::pair<long, long>>> windows;
            try {
                windows = detail::candidate_windows(gvals, yz, m_over_a0, box.xy_max);
            } catch (const certification_error&) {
                windows = std::nullopt;
            } catch (const domain_error&) {
                windows = std::nullopt;
            }
            std::vector<std::pair<long, long>> ranges;
            if (windows) {
                ranges = *windows;
            } else {
                ++out.fullscan_fallbacks;
                ranges.emplace_back(-box.xy_max, box.xy_max);
            }
            for (auto [xl, xh] : ranges) {
                for (long x = xl; x <= xh; ++x) {
                    if (x == 0) continue;
                    Integer xz(x);
                    Integer v = f(xz, yz);
                    if (v == 0 || int_abs(v) > box.m) continue;
                    out.solutions.push_back({xz, yz, a, v});
                    Integer mv = (d % 2 == 0) ? v : Integer(-v);
                    out.solutions.push_back({Integer(-x), Integer(-y), a, mv});
                }
            }
        }
    }
    std::sort(out.solutions.begin(), out.solutions.end());
    return out;
}

/**
 * Verification of a claimed solution: exact re-evaluation, side conditions,
 * and the Psi diagnostics on the sign-normalized representative.
 */
struct VerifyReport {
    bool pass = false;
    Integer value;
    bool xy_nonzero = false;
    bool in_range = false;
    bool generates = false;
    bool degree_required = true;
    std::optional<PsiReport> psi;
    std::string reason;
};

inline VerifyReport verify_solution(const TwistFamily& fam, const Integer& x, const Integer& y,
                                    long a, const Integer& m, bool require_degree = true) {
    if (m < 1) throw domain_error("m must be >= 1");
    VerifyReport rep;
    rep.degree_required = require_degree;
    BinaryForm f = form_at(fam, a);
    rep.value = f(x, y);
    rep.xy_nonzero = (x != 0 && y != 0);
    rep.in_range = (rep.value != 0 && int_abs(rep.value) <= m);
    FieldElement gamma = fam.alpha() * fam.upsilon().pow(a);
    rep.generates = generates_field(gamma);
    if (!rep.xy_nonzero) {
        rep.reason = "xy = 0";
    } else if (!rep.in_range) {
        rep.reason = rep.value == 0 ? "F_a(x, y) = 0" : "|F_a(x, y)| > m";
    } else if (require_degree && !rep.generates) {
        rep.reason = "alpha upsilon^a does not generate the field";
    }
    rep.pass = rep.xy_nonzero && rep.in_range && (!require_degree || rep.generates);
    if (rep.xy_nonzero && rep.in_range) {
        // normalize to y > 0: psi is computed on (x, y) or (-x, -y)
        Integer xn = x, yn = y;
        if (yn < 0) {
            xn = -xn;
            yn = -yn;
        }
        rep.psi = psi_values(fam, xn, yn, a, m);
    }
    return rep;
}

/**
 * Empirical fit of the minimal constant consistent with the refined exponent
 * bound over an enumerated solution set: reports max |a| / rhs(kappa = 1).
 * Never asserts the bound, only reports the fit.
 */
struct KappaFitReport {
    double fitted_kappa = 0.0;
    bool vacuous = true;
    long max_abs_a = 0;
    size_t solution_count = 0;
    double rhs_kappa1 = 0.0;  // thm2 right-hand side at kappa = 1
    double regulator = 0.0;
};

inline KappaFitReport empirical_kappa(const TwistFamily& fam, const SolutionSet& sols,
                                      const Integer& m, double regulator) {
    KappaFitReport rep;
    rep.regulator = regulator;
    rep.solution_count = sols.solutions.size();
    FamilyInvariants inv = invariants_of(fam);
    KappaConfig unit_cfg;
    rep.rhs_kappa1 = a_bound_thm2(regulator, mpz_get_d(m.get_mpz_t()), inv.lambda0.mid(),
                                  inv.lambda.mid(), inv.mu.mid(), unit_cfg);
    for (const auto& s : sols.solutions) rep.max_abs_a = std::max(rep.max_abs_a, std::labs(s.a));
    if (!sols.solutions.empty()) {
        rep.vacuous = false;
        rep.fitted_kappa = static_cast<double>(rep.max_abs_a) / rep.rhs_kappa1;
    }
    return rep;
}

}  // namespace thuetwist

#endif
