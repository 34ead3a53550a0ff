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

#include <cmath>

#include <catch2/catch_amalgamated.hpp>

#include "support.hpp"
#include "thuetwist/units.hpp"

using namespace thuetwist;
using twtest::d_hi;
using twtest::d_lo;

namespace {

struct Sqrt2 {
    FieldPtr k = NumberField::create(IntPoly({-2, 0, 1}));
    EmbeddingSet emb = isolate_roots(IntPoly({-2, 0, 1}));
    FieldElement eps = FieldElement::one(k) + FieldElement::theta(k);
    UnitSystem sys{k, {eps}};
};

}  // namespace

TEST_CASE("infinite places") {
    EmbeddingSet real2 = isolate_roots(IntPoly({-2, 0, 1}));
    CHECK(infinite_places(real2).size() == 2);
    CHECK(unit_rank(real2) == 1);
    EmbeddingSet imag = isolate_roots(IntPoly({1, 0, 1}));  // X^2 + 1
    CHECK(infinite_places(imag).size() == 1);
    CHECK(unit_rank(imag) == 0);
    EmbeddingSet plastic = isolate_roots(IntPoly({-1, -1, 0, 1}));
    CHECK(infinite_places(plastic).size() == 2);
    CHECK(unit_rank(plastic) == 1);
}

TEST_CASE("regulator of Q(sqrt 2)") {
    Sqrt2 f;
    RealInterval r = regulator_from_units(f.sys, f.emb);
    CHECK(twtest::approx_in(r, 0.8813735870195430));  // log(1 + sqrt 2)
    CHECK(d_hi(r) - d_lo(r) < 1e-6);
    CHECK(friedman_regulator_floor < d_lo(r));
}

TEST_CASE("regulator of the plastic cubic") {
    FieldPtr k = NumberField::create(IntPoly({-1, -1, 0, 1}));
    EmbeddingSet emb = isolate_roots(k->defining_poly());
    UnitSystem sys(k, {FieldElement::theta(k)});
    RealInterval r = regulator_from_units(sys, emb);
    CHECK(twtest::approx_in(r, 0.2811995743229618));  // log of the real root
    CHECK(d_hi(r) - d_lo(r) < 1e-6);
}

TEST_CASE("rank-2 regulator of the simplest cubic field") {
    // X^3 - 3X - 1 is totally real; {theta, theta + 1} is a fundamental pair
    FieldPtr k = NumberField::create(IntPoly({-1, -3, 0, 1}));
    EmbeddingSet emb = isolate_roots(k->defining_poly());
    REQUIRE(unit_rank(emb) == 2);
    FieldElement t = FieldElement::theta(k);
    UnitSystem sys(k, {t, t + FieldElement::one(k)});
    RealInterval r = regulator_from_units(sys, emb);
    CHECK(twtest::approx_in(r, 0.8492874506461925, 1e-12));
    CHECK(friedman_check(r));
    SiegelReport rep = check_siegel_properties(sys, emb, 10, 10, 10);
    CHECK(rep.pass());
    // reduction in the rank-2 lattice round-trips exactly
    FieldElement beta = t.pow(3) * (t + FieldElement::one(k)).pow(-2);
    auto red = reduce_by_units(beta, sys, emb);
    FieldElement rec = red.beta_tilde;
    for (size_t i = 0; i < red.exponents.size(); ++i)
        rec = rec * sys.units[i].pow(red.exponents[i]);
    CHECK(rec == beta);
    CHECK(red.exponents == std::vector<long>{3, -2});
    CHECK(red.beta_tilde.is_one());
}

TEST_CASE("dependent units make the determinant interval hit zero") {
    // totally real cubic, unit rank 2: {theta, theta^2} is dependent
    FieldPtr k = NumberField::create(IntPoly({-1, -3, 0, 1}));  // X^3 - 3X - 1
    EmbeddingSet emb = isolate_roots(k->defining_poly());
    REQUIRE(unit_rank(emb) == 2);
    FieldElement t = FieldElement::theta(k);
    REQUIRE(is_unit(t));
    UnitSystem dep(k, {t, t * t});
    CHECK_THROWS_AS(regulator_from_units(dep, emb), certification_error);
    CHECK_THROWS_AS(UnitSystem(k, {FieldElement::from_rational(k, Rational(2))}), domain_error);
}

TEST_CASE("wrong rank is rejected") {
    Sqrt2 f;
    UnitSystem two(f.k, {f.eps, f.eps * f.eps});
    CHECK_THROWS_AS(regulator_from_units(two, f.emb), domain_error);
}

TEST_CASE("reduce_by_units recovers constructed exponents") {
    Sqrt2 f;
    FieldElement beta = f.eps.pow(2);  // 3 + 2 sqrt 2
    auto r = reduce_by_units(beta, f.sys, f.emb);
    REQUIRE(r.exponents.size() == 1);
    CHECK(r.exponents[0] == 2);
    CHECK(r.beta_tilde.is_one());
    CHECK(r.defect_upper < 1e-12);

    auto r1 = reduce_by_units(FieldElement::one(f.k), f.sys, f.emb);
    CHECK(r1.exponents[0] == 0);
    CHECK(r1.beta_tilde.is_one());

    FieldElement five = FieldElement::from_rational(f.k, Rational(5));
    auto r5 = reduce_by_units(five * f.eps.pow(-3), f.sys, f.emb);
    CHECK(r5.exponents[0] == -3);
    CHECK(r5.beta_tilde == five);
}

TEST_CASE("reduce_by_units round-trips bit for bit") {
    Sqrt2 f;
    FieldPtr kp = NumberField::create(IntPoly({-1, -1, 0, 1}));
    EmbeddingSet ep = isolate_roots(kp->defining_poly());
    UnitSystem sp(kp, {FieldElement::theta(kp)});
    for (int trial = 0; trial < 30; ++trial) {
        bool quad = trial % 2 == 0;
        const FieldPtr& k = quad ? f.k : kp;
        const UnitSystem& sys = quad ? f.sys : sp;
        const EmbeddingSet& emb = quad ? f.emb : ep;
        long c = twtest::rand_in(-6, 6);
        std::vector<long> base_choices_q[3] = {{1, 0}, {2, 0}, {2, 1}};
        std::vector<long> base_choices_c[3] = {{1, 0, 0}, {2, 0, 0}, {1, 1, 0}};
        FieldElement tilde0 = twtest::element_from_longs(
            k, quad ? base_choices_q[trial % 3] : base_choices_c[trial % 3]);
        FieldElement beta = tilde0 * sys.units[0].pow(c);
        auto r = reduce_by_units(beta, sys, emb);
        // exact reconstruction
        FieldElement rec = r.beta_tilde;
        for (size_t i = 0; i < r.exponents.size(); ++i)
            rec = rec * sys.units[i].pow(r.exponents[i]);
        CHECK(rec == beta);
        if (tilde0.is_one()) CHECK(r.exponents[0] == c);
        // the reducer never does worse than the constructed decomposition
        auto r0 = reduce_by_units(tilde0, sys, emb);
        bool improved_or_equal = r.defect_upper <= r0.defect_upper + 1e-9;
        CHECK(improved_or_equal);
    }
}

TEST_CASE("a finer unit system never yields a larger defect") {
    Sqrt2 f;
    UnitSystem coarse(f.k, {f.eps.pow(3)});
    for (long c = -5; c <= 5; ++c) {
        FieldElement beta = f.eps.pow(c);
        auto fine = reduce_by_units(beta, f.sys, f.emb);
        auto rough = reduce_by_units(beta, coarse, f.emb);
        CHECK(fine.defect_upper <= rough.defect_upper + 1e-9);
    }
}

TEST_CASE("reduce_by_units preconditions") {
    Sqrt2 f;
    CHECK_THROWS_AS(reduce_by_units(FieldElement::zero(f.k), f.sys, f.emb), domain_error);
    CHECK_THROWS_AS(
        reduce_by_units(FieldElement::from_rational(f.k, Rational(1, 2)), f.sys, f.emb),
        domain_error);  // norm 1/4 not an integer
}

TEST_CASE("unit basis quality properties") {
    Sqrt2 f;
    SiegelReport ok = check_siegel_properties(f.sys, f.emb, 10, 10, 10);
    CHECK(ok.pass());
    CHECK(ok.height_max_upper < 0.45);       // h(1+sqrt2) = log(1+sqrt2)/2
    CHECK(ok.inverse_entry_max_upper > 1.1); // 1/R = 1.1346
    CHECK(ok.inverse_entry_max_upper < 1.14);
    SiegelReport bad = check_siegel_properties(f.sys, f.emb, 10, 10, 1);
    CHECK_FALSE(bad.inverse_ok);
    CHECK_FALSE(bad.pass());
}

TEST_CASE("rank-zero field passes vacuously") {
    FieldPtr k = NumberField::create(IntPoly({1, 0, 1}));
    EmbeddingSet emb = isolate_roots(k->defining_poly());
    UnitSystem empty(k, {});
    SiegelReport rep = check_siegel_properties(empty, emb, 1e-9, 1e-9, 1e-9);
    CHECK(rep.vacuous);
    CHECK(rep.pass());
    CHECK(regulator_from_units(empty, emb).contains(Rational(1)));
}
