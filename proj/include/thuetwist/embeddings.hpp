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

#ifndef THUETWIST_EMBEDDINGS_HPP
#define THUETWIST_EMBEDDINGS_HPP

#include <algorithm>
#include <climits>
#include <cmath>
#include <numeric>
#include <utility>
#include <vector>

#include <Eigen/Eigenvalues>

#include "thuetwist/complex_box.hpp"
#include "thuetwist/errors.hpp"
#include "thuetwist/integer.hpp"
#include "thuetwist/interval.hpp"
#include "thuetwist/polynomial.hpp"

namespace thuetwist {

struct PrecisionConfig {
    long bits = 128;      // requested ball accuracy
    long max_bits = 4096; // hard cap for certification escalation
};

namespace detail {

/// log2 of the guaranteed gap between distinct root moduli of an integer
/// polynomial of degree d with Mahler measure M:
/// gap >= (sqrt(3)/2) (d(d+1)/2)^{-d(d+1)/4-1} * M^{-d(d^2+2d-1)/2}.
inline double gs_gap_log2(int d, double log2_mahler_upper) {
    double n = 0.5 * d * (d + 1);
    double log2_kappa = 0.5 * std::log2(3.0) - 1.0 - (n / 2.0 + 1.0) * std::log2(n);
    double expo = 0.5 * d * (static_cast<double>(d) * d + 2.0 * d - 1.0);
    return log2_kappa - expo * log2_mahler_upper;
}

struct UnionFind {
    std::vector<int> p;
    explicit UnionFind(int n) : p(n) { std::iota(p.begin(), p.end(), 0); }
    int find(int x) {
        while (p[x] != x) x = p[x] = p[p[x]];
        return x;
    }
    void unite(int a, int b) { p[find(a)] = find(b); }
};

/// Certified upper bound for log2 M(g) from root enclosures.
inline double mahler_log2_upper_of(const IntPoly& g, const std::vector<ComplexBox>& boxes) {
    Mpfr acc(64), t(64);
    Integer lead = g.lead() < 0 ? Integer(-g.lead()) : g.lead();
    mpfr_set_z(acc.raw(), lead.get_mpz_t(), MPFR_RNDU);
    mpfr_log2(acc.raw(), acc.raw(), MPFR_RNDU);
    for (const auto& b : boxes) {
        RealInterval m = b.abs();
        if (mpfr_cmp_ui(m.hi().raw(), 1) <= 0) continue;
        mpfr_log2(t.raw(), m.hi().raw(), MPFR_RNDU);
        mpfr_add(acc.raw(), acc.raw(), t.raw(), MPFR_RNDU);
    }
    return mpfr_get_d(acc.raw(), MPFR_RNDU);
}

}  // namespace detail

/**
 * Certified complex embeddings of a squarefree integer polynomial: d pairwise
 * disjoint boxes, each containing exactly one root, stored in ascending order
 * of modulus. Tie groups are runs of roots with proven-equal modulus; the
 * proofs come from conjugate symmetry and, for polynomials in Z[X^2], from
 * (r, -r) pairing. Distinct tie groups have certified disjoint modulus
 * intervals.
 */
class EmbeddingSet {
  public:
    int degree() const { return static_cast<int>(boxes_.size()); }
    const IntPoly& poly() const { return poly_; }
    long bits() const { return bits_; }

    /// k-th root box, ascending modulus. Within a tie group the order is by
    /// discovery index (conjugates with positive imaginary part first is not
    /// guaranteed; the order is deterministic for fixed input).
    const ComplexBox& box(int k) const { return boxes_[static_cast<size_t>(k)]; }
    bool is_real(int k) const { return real_[static_cast<size_t>(k)]; }
    int conj_partner(int k) const { return conj_[static_cast<size_t>(k)]; }
    int tie_group_of(int k) const { return group_of_[static_cast<size_t>(k)]; }
    const std::vector<std::pair<int, int>>& tie_groups() const { return groups_; }
    /// Certified modulus of every root in tie group gi.
    const RealInterval& group_modulus(int gi) const { return group_mod_[static_cast<size_t>(gi)]; }
    /// Certified modulus of the k-th root (the group interval).
    const RealInterval& modulus(int k) const {
        return group_mod_[static_cast<size_t>(group_of_[static_cast<size_t>(k)])];
    }

    struct BallView {
        double re, im, rad;
    };
    BallView ball_view(int k) const {
        const ComplexBox& b = boxes_[static_cast<size_t>(k)];
        double cre = b.re.mid();
        double cim = b.im.mid();
        mpfr_prec_t p = b.prec();
        Mpfr dre(p), dim(p), t(p), m(p);
        auto comp_dev = [&](const RealInterval& iv, double c, Mpfr& out) {
            mpfr_set_d(m.raw(), c, MPFR_RNDN);
            mpfr_sub(out.raw(), iv.hi().raw(), m.raw(), MPFR_RNDU);
            mpfr_sub(t.raw(), m.raw(), iv.lo().raw(), MPFR_RNDU);
            mpfr_max(out.raw(), out.raw(), t.raw(), MPFR_RNDU);
            if (mpfr_sgn(out.raw()) < 0) mpfr_set_zero(out.raw(), 1);
        };
        comp_dev(b.re, cre, dre);
        comp_dev(b.im, cim, dim);
        Mpfr r(p);
        mpfr_hypot(r.raw(), dre.raw(), dim.raw(), MPFR_RNDU);
        return {cre, cim, mpfr_get_d(r.raw(), MPFR_RNDU)};
    }

    /// Certified upper bound for log2 of the Mahler measure of poly().
    double mahler_log2_upper() const { return detail::mahler_log2_upper_of(poly_, boxes_); }

  private:
    friend EmbeddingSet isolate_roots(const IntPoly&, const PrecisionConfig&);
    IntPoly poly_;
    std::vector<ComplexBox> boxes_;
    std::vector<bool> real_;
    std::vector<int> conj_;
    std::vector<int> group_of_;
    std::vector<std::pair<int, int>> groups_;
    std::vector<RealInterval> group_mod_;
    long bits_ = 0;
};

namespace detail {

inline std::vector<std::pair<double, double>> companion_estimates(const IntPoly& g) {
    int d = g.degree();
    std::vector<double> a(static_cast<size_t>(d));
    for (int i = 0; i < d; ++i) {
        Rational q(g.coeff(i), g.lead());
        q.canonicalize();
        a[static_cast<size_t>(i)] = q.get_d();
        if (!std::isfinite(a[static_cast<size_t>(i)])) return {};
    }
    Eigen::MatrixXd c = Eigen::MatrixXd::Zero(d, d);
    for (int i = 1; i < d; ++i) c(i, i - 1) = 1.0;
    for (int i = 0; i < d; ++i) c(i, d - 1) = -a[static_cast<size_t>(i)];
    Eigen::EigenSolver<Eigen::MatrixXd> es(c, false);
    if (es.info() != Eigen::Success) return {};
    std::vector<std::pair<double, double>> z;
    z.reserve(static_cast<size_t>(d));
    for (int i = 0; i < d; ++i) {
        auto ev = es.eigenvalues()(i);
        if (!std::isfinite(ev.real()) || !std::isfinite(ev.imag())) return {};
        z.emplace_back(ev.real(), ev.imag());
    }
    return z;
}

/// Fallback start: points on a circle at the Cauchy root bound, with an
/// asymmetric angular offset.
inline std::vector<std::pair<double, double>> circle_estimates(const IntPoly& g) {
    int d = g.degree();
    double r = 1.0;
    for (int i = 0; i < d; ++i) {
        Rational q(g.coeff(i), g.lead());
        q.canonicalize();
        double v = std::fabs(q.get_d());
        if (std::isfinite(v)) r = std::max(r, 1.0 + v);
        else r = std::max(r, 1e200);
    }
    std::vector<std::pair<double, double>> z;
    for (int k = 0; k < d; ++k) {
        double th = 2.0 * M_PI * k / d + 0.3964;
        z.emplace_back(r * std::cos(th), r * std::sin(th));
    }
    return z;
}

/// Aberth-Ehrlich simultaneous refinement at fixed precision. Returns when
/// every correction is below 2^{-(prec-10)} relative to the root scale.
inline void aberth_refine(const IntPoly& g, std::vector<PointComplex>& z, mpfr_prec_t prec) {
    int d = static_cast<int>(z.size());
    const int maxit = 220;
    for (int it = 0; it < maxit; ++it) {
        long worst = LONG_MIN;
        for (int i = 0; i < d; ++i) {
            auto [v, dv] = eval_point_with_derivative(g, z[static_cast<size_t>(i)]);
            Mpfr va = v.abs_approx();
            if (mpfr_sgn(va.raw()) == 0) continue;
            Mpfr da = dv.abs_approx();
            PointComplex corr(prec);
            if (mpfr_sgn(da.raw()) == 0) {
                // sitting on a critical point: nudge
                mpfr_set_d(corr.re.raw(), 1e-3, MPFR_RNDN);
                mpfr_set_d(corr.im.raw(), 7e-4, MPFR_RNDN);
            } else {
                PointComplex n = v / dv;
                PointComplex s(prec);
                bool coincident = false;
                for (int j = 0; j < d; ++j) {
                    if (j == i) continue;
                    PointComplex diff = z[static_cast<size_t>(i)] - z[static_cast<size_t>(j)];
                    Mpfr dabs = diff.abs_approx();
                    if (mpfr_sgn(dabs.raw()) == 0) {
                        coincident = true;
                        break;
                    }
                    PointComplex one(prec);
                    mpfr_set_ui(one.re.raw(), 1, MPFR_RNDN);
                    s = s + one / diff;
                }
                if (coincident) {
                    mpfr_set_d(corr.re.raw(), 1e-3, MPFR_RNDN);
                    mpfr_set_d(corr.im.raw(), -5e-4, MPFR_RNDN);
                    corr = corr + z[static_cast<size_t>(i)] * corr;
                } else {
                    PointComplex one(prec);
                    mpfr_set_ui(one.re.raw(), 1, MPFR_RNDN);
                    PointComplex den = one - n * s;
                    Mpfr dena = den.abs_approx();
                    corr = (mpfr_sgn(dena.raw()) == 0) ? n : n / den;
                }
            }
            z[static_cast<size_t>(i)] = z[static_cast<size_t>(i)] - corr;
            Mpfr ca = corr.abs_approx();
            Mpfr za = z[static_cast<size_t>(i)].abs_approx();
            long scale_exp = (mpfr_sgn(za.raw()) == 0) ? 0 : std::max<long>(0, mpfr_get_exp(za.raw()));
            if (mpfr_sgn(ca.raw()) != 0) worst = std::max(worst, mpfr_get_exp(ca.raw()) - scale_exp);
        }
        if (worst <= -(static_cast<long>(prec) - 10)) return;
    }
}

struct CertifiedBoxes {
    std::vector<ComplexBox> boxes;
    bool ok = false;
};

/// Certified inclusion boxes around point approximations: the disk of radius
/// d|g(z)/g'(z)| around any z contains at least one root; d pairwise disjoint
/// such boxes isolate all roots.
inline CertifiedBoxes certify_boxes(const IntPoly& g, const std::vector<PointComplex>& z,
                                    long target_bits) {
    CertifiedBoxes out;
    int d = static_cast<int>(z.size());
    IntPoly gd = g.derivative();
    for (int i = 0; i < d; ++i) {
        ComplexBox zb = z[static_cast<size_t>(i)].to_box();
        RealInterval gv = eval_box(g, zb).abs();
        RealInterval dv = eval_box(gd, zb).abs();
        if (mpfr_sgn(dv.lo().raw()) <= 0) return out;
        mpfr_prec_t p = zb.prec();
        Mpfr r(p);
        mpfr_div(r.raw(), gv.hi().raw(), dv.lo().raw(), MPFR_RNDU);
        mpfr_mul_ui(r.raw(), r.raw(), static_cast<unsigned long>(d), MPFR_RNDU);
        // accuracy target: radius <= 2^{-target_bits} * max(1, |z|)
        if (mpfr_sgn(r.raw()) != 0) {
            Mpfr za = z[static_cast<size_t>(i)].abs_approx();
            long scale_exp = (mpfr_sgn(za.raw()) == 0) ? 0 : std::max<long>(0, mpfr_get_exp(za.raw()));
            if (mpfr_get_exp(r.raw()) > scale_exp - target_bits) return out;
        }
        Mpfr lo(p), hi(p);
        ComplexBox b(p);
        mpfr_sub(lo.raw(), z[static_cast<size_t>(i)].re.raw(), r.raw(), MPFR_RNDD);
        mpfr_add(hi.raw(), z[static_cast<size_t>(i)].re.raw(), r.raw(), MPFR_RNDU);
        b.re = RealInterval::from_endpoints(lo, hi);
        mpfr_sub(lo.raw(), z[static_cast<size_t>(i)].im.raw(), r.raw(), MPFR_RNDD);
        mpfr_add(hi.raw(), z[static_cast<size_t>(i)].im.raw(), r.raw(), MPFR_RNDU);
        b.im = RealInterval::from_endpoints(lo, hi);
        out.boxes.push_back(std::move(b));
    }
    for (int i = 0; i < d; ++i)
        for (int j = i + 1; j < d; ++j)
            if (out.boxes[static_cast<size_t>(i)].overlaps(out.boxes[static_cast<size_t>(j)]))
                return out;
    out.ok = true;
    return out;
}

/// Unique partner under an involutive geometric map, or -1 if ambiguous.
template <typename MapBox>
inline int unique_partner(const std::vector<ComplexBox>& boxes, int i, MapBox&& map_box) {
    ComplexBox m = map_box(boxes[static_cast<size_t>(i)]);
    int found = -1;
    for (int j = 0; j < static_cast<int>(boxes.size()); ++j) {
        if (m.overlaps(boxes[static_cast<size_t>(j)])) {
            if (found >= 0) return -1;
            found = j;
        }
    }
    return found;
}

}  // namespace detail

/**
 * Isolate all complex roots of a squarefree integer polynomial into certified
 * disjoint boxes, prove realness/conjugacy structurally, and certify the
 * ascending-modulus order with its tie groups. Escalates the working
 * precision up to cfg.max_bits; failure to certify raises certification_error.
 */
inline EmbeddingSet isolate_roots(const IntPoly& g, const PrecisionConfig& cfg = {}) {
    if (g.is_zero() || g.degree() < 1) throw domain_error("isolate_roots needs degree >= 1");
    if (!squarefree_check(g)) throw domain_error("isolate_roots requires a squarefree polynomial");
    const int d = g.degree();
    const bool even_structured = g.is_even_structured();

    EmbeddingSet out;
    out.poly_ = g;

    long bits = std::max<long>(cfg.bits, 64);
    long prec = bits + 64;

    // Double-precision start per the companion-matrix route, lifted strictly
    // off the real axis: iterations over the reals can never reach a complex
    // conjugate pair, and the a-posteriori certification tolerates any nudge.
    auto lift = [&](const std::vector<std::pair<double, double>>& e0) {
        std::vector<PointComplex> zz;
        zz.reserve(e0.size());
        for (size_t i = 0; i < e0.size(); ++i) {
            double sc = std::max({1.0, std::fabs(e0[i].first), std::fabs(e0[i].second)});
            double im = e0[i].second + ((i % 2) ? 1.0 : -1.0) * 9.6e-4 * sc;
            zz.emplace_back(e0[i].first, im, static_cast<mpfr_prec_t>(prec));
        }
        return zz;
    };
    auto est = detail::companion_estimates(g);
    if (static_cast<int>(est.size()) != d) est = detail::circle_estimates(g);
    std::vector<PointComplex> z = lift(est);

    std::vector<ComplexBox> boxes;
    std::vector<int> conj_partner(static_cast<size_t>(d), -1);
    std::vector<int> neg_partner(static_cast<size_t>(d), -1);

    bool restarted = false;
    int failures = 0;
    while (true) {
        if (prec > cfg.max_bits + 64)
            throw certification_error("root isolation failed below the precision cap");
        for (auto& p : z) p = p.at_prec(static_cast<mpfr_prec_t>(prec));
        detail::aberth_refine(g, z, static_cast<mpfr_prec_t>(prec));
        auto cert = detail::certify_boxes(g, z, bits);
        if (!cert.ok) {
            // bad double-precision estimates can strand the iteration; one
            // restart from the circle configuration before escalating further
            if (++failures >= 2 && !restarted) {
                restarted = true;
                z = lift(detail::circle_estimates(g));
                continue;
            }
            prec *= 2;
            continue;
        }
        boxes = std::move(cert.boxes);

        // structural classification: conjugation, and negation when g in Z[X^2]
        bool ambiguous = false;
        for (int i = 0; i < d && !ambiguous; ++i) {
            conj_partner[static_cast<size_t>(i)] =
                detail::unique_partner(boxes, i, [](const ComplexBox& b) { return b.conj(); });
            if (conj_partner[static_cast<size_t>(i)] < 0) ambiguous = true;
        }
        if (!ambiguous && even_structured) {
            for (int i = 0; i < d && !ambiguous; ++i) {
                neg_partner[static_cast<size_t>(i)] =
                    detail::unique_partner(boxes, i, [](const ComplexBox& b) { return -b; });
                if (neg_partner[static_cast<size_t>(i)] < 0) ambiguous = true;
            }
        }
        if (ambiguous) {
            prec *= 2;
            continue;
        }
        break;
    }

    // involution sanity (certified pairings are involutions by uniqueness)
    for (int i = 0; i < d; ++i) {
        if (conj_partner[static_cast<size_t>(conj_partner[static_cast<size_t>(i)])] != i)
            throw certification_error("conjugation pairing is not an involution");
        if (even_structured &&
            neg_partner[static_cast<size_t>(neg_partner[static_cast<size_t>(i)])] != i)
            throw certification_error("negation pairing is not an involution");
    }

    // realness and symmetric canonical form
    std::vector<bool> real_flag(static_cast<size_t>(d), false);
    for (int i = 0; i < d; ++i) {
        if (conj_partner[static_cast<size_t>(i)] == i) {
            real_flag[static_cast<size_t>(i)] = true;
            ComplexBox& b = boxes[static_cast<size_t>(i)];
            b.im = RealInterval(b.im.prec());  // proven real: im = [0, 0]
        }
    }
    for (int i = 0; i < d; ++i) {
        int j = conj_partner[static_cast<size_t>(i)];
        if (j > i) {
            boxes[static_cast<size_t>(i)] =
                intersect(boxes[static_cast<size_t>(i)], boxes[static_cast<size_t>(j)].conj());
            boxes[static_cast<size_t>(j)] = boxes[static_cast<size_t>(i)].conj();
        }
    }

    // tie classes = closure of the proven equal-modulus pairings
    detail::UnionFind uf(d);
    for (int i = 0; i < d; ++i) {
        uf.unite(i, conj_partner[static_cast<size_t>(i)]);
        if (even_structured) uf.unite(i, neg_partner[static_cast<size_t>(i)]);
    }

    // certified class moduli; escalate until distinct classes separate
    std::vector<int> cls_of(static_cast<size_t>(d));
    std::vector<std::vector<int>> members;
    std::vector<RealInterval> cls_mod;
    while (true) {
        std::vector<int> root_ids;
        members.clear();
        cls_mod.clear();
        for (int i = 0; i < d; ++i) {
            int r = uf.find(i);
            auto it = std::find(root_ids.begin(), root_ids.end(), r);
            int idx;
            if (it == root_ids.end()) {
                idx = static_cast<int>(root_ids.size());
                root_ids.push_back(r);
                members.emplace_back();
            } else {
                idx = static_cast<int>(it - root_ids.begin());
            }
            cls_of[static_cast<size_t>(i)] = idx;
            members[static_cast<size_t>(idx)].push_back(i);
        }
        for (const auto& mem : members) {
            RealInterval m = boxes[static_cast<size_t>(mem.front())].abs();
            for (size_t t = 1; t < mem.size(); ++t)
                m = intersect(m, boxes[static_cast<size_t>(mem[t])].abs());
            cls_mod.push_back(std::move(m));
        }
        bool overlap = false;
        for (size_t a = 0; a < cls_mod.size() && !overlap; ++a)
            for (size_t b = a + 1; b < cls_mod.size() && !overlap; ++b)
                if (cls_mod[a].overlaps(cls_mod[b])) overlap = true;
        if (!overlap) break;

        // Distinct root moduli are separated by the explicit gap Delta; two
        // class intervals of width < Delta/4 that still overlap therefore
        // enclose *equal* moduli, which proves the tie (contrapositive of the
        // separation bound). Wider overlaps need more precision first.
        double gap_log2 = detail::gs_gap_log2(d, detail::mahler_log2_upper_of(g, boxes));
        long target = static_cast<long>(-gap_log2) + 2;
        bool merged = false;
        for (size_t a = 0; a < cls_mod.size(); ++a)
            for (size_t b = a + 1; b < cls_mod.size(); ++b) {
                if (!cls_mod[a].overlaps(cls_mod[b])) continue;
                if (cls_mod[a].width_below_2exp(-target) && cls_mod[b].width_below_2exp(-target)) {
                    uf.unite(members[a].front(), members[b].front());
                    merged = true;
                }
            }
        if (merged) continue;
        if (prec * 2 > cfg.max_bits + 64)
            throw certification_error("tie neither separable nor provable at the precision cap");
        bits = std::min(cfg.max_bits, std::max(bits * 2, target + 8));
        prec = std::max(prec * 2, bits + 64);
        for (auto& p : z) p = p.at_prec(static_cast<mpfr_prec_t>(prec));
        detail::aberth_refine(g, z, static_cast<mpfr_prec_t>(prec));
        auto cert = detail::certify_boxes(g, z, bits);
        if (!cert.ok) continue;
        // classification is stable; reuse pairings, only geometry shrank
        boxes = std::move(cert.boxes);
        for (int i = 0; i < d; ++i)
            if (real_flag[static_cast<size_t>(i)]) {
                ComplexBox& b = boxes[static_cast<size_t>(i)];
                b.im = RealInterval(b.im.prec());
            }
        for (int i = 0; i < d; ++i) {
            int j = conj_partner[static_cast<size_t>(i)];
            if (j > i) {
                boxes[static_cast<size_t>(i)] =
                    intersect(boxes[static_cast<size_t>(i)], boxes[static_cast<size_t>(j)].conj());
                boxes[static_cast<size_t>(j)] = boxes[static_cast<size_t>(i)].conj();
            }
        }
    }

    // order classes by modulus, members by discovery index
    std::vector<int> cls_order(cls_mod.size());
    std::iota(cls_order.begin(), cls_order.end(), 0);
    std::sort(cls_order.begin(), cls_order.end(), [&](int a, int b) {
        return cls_mod[static_cast<size_t>(a)].certainly_less(cls_mod[static_cast<size_t>(b)]);
    });
    std::vector<int> perm;  // sorted position -> discovery index
    out.groups_.clear();
    out.group_mod_.clear();
    for (int c : cls_order) {
        int begin = static_cast<int>(perm.size());
        for (int i : members[static_cast<size_t>(c)]) perm.push_back(i);
        out.groups_.emplace_back(begin, static_cast<int>(perm.size()));
        out.group_mod_.push_back(cls_mod[static_cast<size_t>(c)]);
    }
    std::vector<int> pos_of(static_cast<size_t>(d));
    for (int k = 0; k < d; ++k) pos_of[static_cast<size_t>(perm[static_cast<size_t>(k)])] = k;

    out.boxes_.clear();
    out.real_.assign(static_cast<size_t>(d), false);
    out.conj_.assign(static_cast<size_t>(d), -1);
    out.group_of_.assign(static_cast<size_t>(d), -1);
    for (int k = 0; k < d; ++k) {
        int i = perm[static_cast<size_t>(k)];
        out.boxes_.push_back(boxes[static_cast<size_t>(i)]);
        out.real_[static_cast<size_t>(k)] = real_flag[static_cast<size_t>(i)];
        out.conj_[static_cast<size_t>(k)] = pos_of[static_cast<size_t>(conj_partner[static_cast<size_t>(i)])];
    }
    for (int gi = 0; gi < static_cast<int>(out.groups_.size()); ++gi)
        for (int k = out.groups_[static_cast<size_t>(gi)].first;
             k < out.groups_[static_cast<size_t>(gi)].second; ++k)
            out.group_of_[static_cast<size_t>(k)] = gi;
    out.bits_ = bits;
    return out;
}

/// Evaluate the element with the given power-basis coordinates and denominator
/// at every embedding; results align with the set's ascending-modulus order.
inline std::vector<ComplexBox> embed_element(const EmbeddingSet& emb,
                                             const std::vector<Integer>& coords,
                                             const Integer& den) {
    std::vector<ComplexBox> out;
    out.reserve(static_cast<size_t>(emb.degree()));
    IntPoly p{std::vector<Integer>(coords)};
    for (int k = 0; k < emb.degree(); ++k) {
        ComplexBox v = eval_box(p, emb.box(k));
        RealInterval dd = RealInterval::from_integer(den, v.prec());
        out.push_back(ComplexBox(v.re / dd, v.im / dd));
    }
    return out;
}

}  // namespace thuetwist

#endif
