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

#ifndef THUETWIST_UNITS_HPP
#define THUETWIST_UNITS_HPP

#include <bit>
#include <cmath>
#include <string>
#include <utility>
#include <vector>

#include "thuetwist/embeddings.hpp"
#include "thuetwist/errors.hpp"
#include "thuetwist/heights.hpp"
#include "thuetwist/number_field.hpp"

namespace thuetwist {

/// One infinite place of the field: a representative embedding index (into
/// the sorted embedding order) and whether it is real.
struct Place {
    int root_index;
    bool real;
};

/// All infinite places: every real embedding plus one representative of each
/// conjugate pair, in ascending-modulus order.
inline std::vector<Place> infinite_places(const EmbeddingSet& emb) {
    std::vector<Place> out;
    for (int k = 0; k < emb.degree(); ++k) {
        if (emb.is_real(k))
            out.push_back({k, true});
        else if (emb.conj_partner(k) > k)
            out.push_back({k, false});
    }
    return out;
}

/// Unit-group rank r1 + r2 - 1 of the field described by the embedding set.
inline int unit_rank(const EmbeddingSet& emb) {
    return static_cast<int>(infinite_places(emb).size()) - 1;
}

/**
 * An independent system of units supplied by the caller (typically a
 * fundamental system for the demo fields). Construction verifies that every
 * element is a unit; independence is certified later by the regulator
 * determinant excluding zero.
 */
struct UnitSystem {
    FieldPtr field;
    std::vector<FieldElement> units;

    UnitSystem(FieldPtr f, std::vector<FieldElement> us) : field(std::move(f)), units(std::move(us)) {
        for (const auto& u : units) {
            if (!u.field()->same_as(*field)) throw domain_error("unit from a different field");
            if (!is_unit(u)) throw domain_error("unit system contains a non-unit");
        }
    }
    int rank() const { return static_cast<int>(units.size()); }
};

/// Division-free interval determinant (expansion with subset dynamic
/// programming); exact containment, no pivoting decisions.
inline RealInterval interval_det(const std::vector<std::vector<RealInterval>>& a) {
    int r = static_cast<int>(a.size());
    mpfr_prec_t prec = 64;
    for (const auto& row : a)
        for (const auto& v : row) prec = std::max(prec, v.prec());
    if (r == 0) return RealInterval::from_long(1, prec);
    size_t full = (static_cast<size_t>(1) << r);
    std::vector<RealInterval> f(full, RealInterval(prec));
    f[0] = RealInterval::from_long(1, prec);
    for (size_t mask = 1; mask < full; ++mask) {
        int k = std::popcount(mask);
        int row = k - 1;
        RealInterval acc(prec);
        int t = 0;
        for (int j = 0; j < r; ++j) {
            size_t bit = static_cast<size_t>(1) << j;
            if (!(mask & bit)) continue;
            RealInterval term = a[static_cast<size_t>(row)][static_cast<size_t>(j)] * f[mask ^ bit];
            acc = (t % 2 == 0) ? acc + term : acc - term;
            ++t;
        }
        f[mask] = acc;
    }
    return f[full - 1];
}

namespace detail {

/// log|phi_j(eps_i)| intervals for the first `take` places; throws
/// certification_error when a modulus interval touches zero (raise bits).
inline std::vector<std::vector<RealInterval>> log_embedding_matrix(const UnitSystem& sys,
                                                                   const EmbeddingSet& emb,
                                                                   const std::vector<Place>& places,
                                                                   int take, bool weighted) {
    std::vector<std::vector<RealInterval>> m;
    m.resize(static_cast<size_t>(sys.rank()));
    for (int i = 0; i < sys.rank(); ++i) {
        std::vector<ComplexBox> vals =
            embed_element(emb, sys.units[static_cast<size_t>(i)].coords(),
                          sys.units[static_cast<size_t>(i)].den());
        for (int j = 0; j < take; ++j) {
            const Place& pl = places[static_cast<size_t>(j)];
            RealInterval av = vals[static_cast<size_t>(pl.root_index)].abs();
            if (!av.is_positive())
                throw certification_error("unit conjugate modulus not separated from zero; "
                                          "raise --bits");
            RealInterval lg = av.log();
            if (weighted && !pl.real) lg = lg + lg;
            m[static_cast<size_t>(i)].push_back(std::move(lg));
        }
    }
    return m;
}

}  // namespace detail

/**
 * Certified interval for |det(n_j log|phi_j(eps_i)|)| over the first r
 * infinite places (n_j = 1 real, 2 complex). Equals the regulator when the
 * system is fundamental. Throws certification_error when the interval cannot
 * exclude zero (dependent units or insufficient precision).
 */
inline RealInterval regulator_from_units(const UnitSystem& sys, const EmbeddingSet& emb) {
    if (!(emb.poly() == sys.field->defining_poly()))
        throw domain_error("embedding set does not belong to the unit system's field");
    std::vector<Place> places = infinite_places(emb);
    int r = static_cast<int>(places.size()) - 1;
    if (sys.rank() != r)
        throw domain_error("unit system rank " + std::to_string(sys.rank()) +
                           " does not match r1+r2-1 = " + std::to_string(r));
    if (r == 0) return RealInterval::from_long(1, 64);
    auto m = detail::log_embedding_matrix(sys, emb, places, r, /*weighted=*/true);
    RealInterval det = interval_det(m);
    RealInterval ad = det.abs();
    if (ad.contains_zero())
        throw certification_error("regulator interval cannot exclude zero "
                                  "(dependent units or insufficient precision)");
    return ad;
}

/**
 * Decomposition beta = beta_tilde * prod eps_i^{b_i} with every conjugate of
 * beta_tilde close to |N(beta)|^{1/d}: solve the r x r real system
 * L b = (log|phi_j(beta)| - (1/d) log|m|) at working precision and round each
 * coordinate half away from zero. The reconstruction is exact by construction.
 */
struct ReduceByUnitsResult {
    std::vector<long> exponents;
    FieldElement beta_tilde;
    std::vector<RealInterval> tilde_conjugate_moduli;  // ascending embedding order
    double defect_upper;  // certified upper bound of max_j |log(|m|^{-1/d} |tilde_j|)|
};

inline ReduceByUnitsResult reduce_by_units(const FieldElement& beta, const UnitSystem& sys,
                                           const EmbeddingSet& emb) {
    if (beta.is_zero()) throw domain_error("reduce_by_units needs nonzero beta");
    Rational nm = norm(beta);
    if (!is_integer(nm) || nm == 0)
        throw domain_error("reduce_by_units needs a nonzero integer norm");
    std::vector<Place> places = infinite_places(emb);
    int r = static_cast<int>(places.size()) - 1;
    if (sys.rank() != r) throw domain_error("unit system rank does not match r1+r2-1");
    int d = beta.degree();

    std::vector<long> b(static_cast<size_t>(r), 0);
    if (r > 0) {
        auto lm = detail::log_embedding_matrix(sys, emb, places, r, /*weighted=*/false);
        std::vector<ComplexBox> bv = embed_element(emb, beta.coords(), beta.den());
        double logm_over_d = std::log(std::fabs(Rational(nm).get_d())) / d;
        // row j: sum_i L[j][i] b_i = t_j
        std::vector<std::vector<double>> a(static_cast<size_t>(r),
                                           std::vector<double>(static_cast<size_t>(r) + 1, 0.0));
        for (int j = 0; j < r; ++j) {
            for (int i = 0; i < r; ++i)
                a[static_cast<size_t>(j)][static_cast<size_t>(i)] =
                    lm[static_cast<size_t>(i)][static_cast<size_t>(j)].mid();
            RealInterval av = bv[static_cast<size_t>(places[static_cast<size_t>(j)].root_index)].abs();
            if (!av.is_positive())
                throw certification_error("conjugate modulus of beta touches zero; raise --bits");
            a[static_cast<size_t>(j)][static_cast<size_t>(r)] = av.log().mid() - logm_over_d;
        }
        // Gaussian elimination with partial pivoting
        for (int col = 0; col < r; ++col) {
            int piv = col;
            for (int i = col + 1; i < r; ++i)
                if (std::fabs(a[static_cast<size_t>(i)][static_cast<size_t>(col)]) >
                    std::fabs(a[static_cast<size_t>(piv)][static_cast<size_t>(col)]))
                    piv = i;
            if (a[static_cast<size_t>(piv)][static_cast<size_t>(col)] == 0.0)
                throw certification_error("singular log-embedding matrix");
            std::swap(a[static_cast<size_t>(piv)], a[static_cast<size_t>(col)]);
            for (int i = col + 1; i < r; ++i) {
                double f = a[static_cast<size_t>(i)][static_cast<size_t>(col)] /
                           a[static_cast<size_t>(col)][static_cast<size_t>(col)];
                if (f == 0.0) continue;
                for (int jj = col; jj <= r; ++jj)
                    a[static_cast<size_t>(i)][static_cast<size_t>(jj)] -=
                        f * a[static_cast<size_t>(col)][static_cast<size_t>(jj)];
            }
        }
        for (int i = r - 1; i >= 0; --i) {
            double s = a[static_cast<size_t>(i)][static_cast<size_t>(r)];
            for (int jj = i + 1; jj < r; ++jj)
                s -= a[static_cast<size_t>(i)][static_cast<size_t>(jj)] *
                     static_cast<double>(b[static_cast<size_t>(jj)]);
            double x = s / a[static_cast<size_t>(i)][static_cast<size_t>(i)];
            if (!std::isfinite(x)) throw certification_error("log-embedding solve failed");
            b[static_cast<size_t>(i)] = std::llround(x);
        }
    }

    FieldElement tilde = beta;
    for (int i = 0; i < r; ++i)
        tilde = tilde * sys.units[static_cast<size_t>(i)].pow(-b[static_cast<size_t>(i)]);

    std::vector<ComplexBox> tv = embed_element(emb, tilde.coords(), tilde.den());
    std::vector<RealInterval> mods;
    mods.reserve(tv.size());
    mpfr_prec_t prec = static_cast<mpfr_prec_t>(std::max<long>(64, emb.bits()));
    Rational am = nm < 0 ? Rational(-nm) : nm;
    RealInterval mroot =
        RealInterval::from_rational(am, prec).rootn(static_cast<unsigned long>(d));
    double defect = 0.0;
    for (const auto& v : tv) {
        RealInterval mv = v.abs();
        if (!mv.is_positive())
            throw certification_error("conjugate modulus of beta_tilde touches zero; raise --bits");
        RealInterval dv = (mv / mroot).log().abs();
        defect = std::max(defect, mpfr_get_d(dv.hi().raw(), MPFR_RNDU));
        mods.push_back(std::move(mv));
    }
    return {std::move(b), std::move(tilde), std::move(mods), defect};
}

/**
 * Certified check of the three unit-basis quality properties against caller
 * constants: (i) prod h(eps_i) <= k7 R, (ii) max h(eps_i) <= k8 R,
 * (iii) all entries of the inverse of (log|phi_j(eps_i)|) bounded by k9.
 * Each verdict is decided with certified intervals; an undecidable comparison
 * throws certification_error. A rank-0 system passes vacuously.
 */
struct SiegelReport {
    bool product_ok = true;
    bool max_ok = true;
    bool inverse_ok = true;
    RealInterval regulator;
    double height_product_upper = 0.0;
    double height_max_upper = 0.0;
    double inverse_entry_max_upper = 0.0;
    bool vacuous = false;
    bool pass() const { return product_ok && max_ok && inverse_ok; }
};

inline SiegelReport check_siegel_properties(const UnitSystem& sys, const EmbeddingSet& emb,
                                            double kappa7, double kappa8, double kappa9) {
    SiegelReport rep{true, true, true, RealInterval::from_long(1, 64), 0, 0, 0, false};
    int r = sys.rank();
    if (r == 0) {
        rep.vacuous = true;
        return rep;
    }
    rep.regulator = regulator_from_units(sys, emb);
    mpfr_prec_t prec = rep.regulator.prec();

    auto decide_le = [](const RealInterval& lhs, const RealInterval& rhs, const char* what) {
        if (lhs.certainly_le(rhs)) return true;
        if (!lhs.le_possible(rhs)) return false;
        throw certification_error(std::string("undecided comparison in Siegel check: ") + what);
    };

    RealInterval prod = RealInterval::from_long(1, prec);
    RealInterval hmax(prec);
    for (int i = 0; i < r; ++i) {
        RealInterval h = log_height(sys.units[static_cast<size_t>(i)], emb);
        prod = prod * h;
        hmax = (i == 0) ? h : interval_max(hmax, h);
    }
    RealInterval k7r = RealInterval::from_double(kappa7, prec) * rep.regulator;
    RealInterval k8r = RealInterval::from_double(kappa8, prec) * rep.regulator;
    rep.product_ok = decide_le(prod, k7r, "product of heights vs kappa7 R");
    rep.max_ok = decide_le(hmax, k8r, "max height vs kappa8 R");
    rep.height_product_upper = mpfr_get_d(prod.hi().raw(), MPFR_RNDU);
    rep.height_max_upper = mpfr_get_d(hmax.hi().raw(), MPFR_RNDU);

    std::vector<Place> places = infinite_places(emb);
    auto a = detail::log_embedding_matrix(sys, emb, places, r, /*weighted=*/false);
    RealInterval det = interval_det(a);
    if (det.contains_zero())
        throw certification_error("log-embedding matrix determinant cannot exclude zero");
    RealInterval k9iv = RealInterval::from_double(kappa9, prec);
    bool ok = true;
    double worst = 0.0;
    for (int i = 0; i < r && ok; ++i)
        for (int j = 0; j < r; ++j) {
            // inverse(i, j) = cofactor(j, i) / det
            std::vector<std::vector<RealInterval>> minor;
            for (int p = 0; p < r; ++p) {
                if (p == j) continue;
                std::vector<RealInterval> row;
                for (int q = 0; q < r; ++q) {
                    if (q == i) continue;
                    row.push_back(a[static_cast<size_t>(p)][static_cast<size_t>(q)]);
                }
                minor.push_back(std::move(row));
            }
            RealInterval cof = interval_det(minor);
            if ((i + j) % 2 == 1) cof = -cof;
            RealInterval entry = (cof / det).abs();
            worst = std::max(worst, mpfr_get_d(entry.hi().raw(), MPFR_RNDU));
            bool this_ok = decide_le(entry, k9iv, "inverse matrix entry vs kappa9");
            if (!this_ok) {
                ok = false;
                break;
            }
        }
    rep.inverse_ok = ok;
    rep.inverse_entry_max_upper = worst;
    return rep;
}

}  // namespace thuetwist

#endif
