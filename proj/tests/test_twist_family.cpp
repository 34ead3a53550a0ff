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
#include "thuetwist/twist_family.hpp"

using namespace thuetwist;
using twtest::d_hi;
using twtest::d_lo;
using twtest::rand_in;

namespace {

TwistFamily cubic2_family() {
    FieldPtr k = NumberField::create(IntPoly({-2, 0, 0, 1}));
    return TwistFamily::create(k, FieldElement::one(k),
                               FieldElement::theta(k) - FieldElement::one(k), 1);
}

TwistFamily plastic_family() {
    FieldPtr k = NumberField::create(IntPoly({-1, -1, 0, 1}));
    return TwistFamily::create(k, FieldElement::one(k), FieldElement::theta(k), 1);
}

BinaryForm form_of(int degree, std::vector<long> coeffs) {
    BinaryForm f;
    f.degree = degree;
    for (long c : coeffs) f.coeffs.emplace_back(c);
    return f;
}

}  // namespace

TEST_CASE("family construction enforces the hypotheses") {
    FieldPtr k = NumberField::create(IntPoly({-2, 0, 0, 1}));
    FieldElement t = FieldElement::theta(k);
    FieldElement one = FieldElement::one(k);
    CHECK_THROWS_AS(TwistFamily::create(k, one, t, 1), domain_error);  // norm 2, not a unit
    CHECK_THROWS_AS(TwistFamily::create(k, FieldElement::zero(k), t - one, 1), domain_error);
    CHECK_THROWS_AS(TwistFamily::create(k, one, t - one, 0), domain_error);  // a0 < 1
    CHECK_THROWS_AS(TwistFamily::create(k, one, -one, 1), domain_error);     // root of unity
    // alpha with denominator 2 needs a0 divisible by 8
    FieldElement half = FieldElement::from_rational(k, Rational(1, 2));
    CHECK_THROWS_AS(TwistFamily::create(k, half, t - one, 2), domain_error);
    TwistFamily ok = TwistFamily::create(k, half, t - one, 8);
    CHECK(form_at(ok, 0).coeffs[0] == 8);
    // cyclotomic twist passes only through the unchecked factory
    FieldPtr k12 = NumberField::create(cyclotomic(12));
    CHECK_THROWS_AS(
        TwistFamily::create(k12, FieldElement::one(k12), FieldElement::theta(k12), 1),
        domain_error);
    TwistFamily demo = TwistFamily::create_unchecked_root_of_unity(
        k12, FieldElement::one(k12), FieldElement::theta(k12), 1);
    CHECK(demo.outside_theorem_hypotheses());
}

TEST_CASE("twisted forms of the cubic2 family") {
    TwistFamily fam = cubic2_family();
    CHECK(form_at(fam, 1) == form_of(3, {1, 3, 3, -1}));
    CHECK(form_at(fam, 1).to_string() == "X^3+3X^2Y+3XY^2-Y^3");
    CHECK(form_at(fam, 0) == form_of(3, {1, -3, 3, -1}));  // (X - Y)^3
    // frozen from the numeric product oracle (and the hand charpoly of
    // (theta-1)^{-1} = theta^2 + theta + 1)
    CHECK(form_at(fam, -1) == form_of(3, {1, -3, -3, -1}));
    auto oracle = twtest::numeric_form_oracle(fam, -1);
    REQUIRE(oracle.exact);
    CHECK(oracle.coeffs == form_at(fam, -1).coeffs);
}

TEST_CASE("form evaluation is exact") {
    BinaryForm phi12 = form_of(4, {1, 0, -1, 0, 1});
    CHECK(evaluate_form(phi12, 1, 1) == 1);
    TwistFamily fam = plastic_family();
    BinaryForm f1 = form_at(fam, 1);
    CHECK(f1 == form_of(3, {1, 0, -1, -1}));  // X^3 - XY^2 - Y^3
    CHECK(evaluate_form(f1, 4, 3) == 1);      // 64 - 36 - 27
    for (int trial = 0; trial < 10; ++trial) {
        Integer x(rand_in(-9, 9));
        CHECK(evaluate_form(f1, x, 0) == x * x * x);  // a0 x^d at y = 0
    }
}

TEST_CASE("family invariants: mu three-case analysis") {
    {
        TwistFamily fam = plastic_family();
        FamilyInvariants inv = invariants_of(fam);
        CHECK(inv.mu_case == MuCase::case1_tie);
        CHECK(twtest::approx_in(inv.lambda, 1.3247179572447460));
        CHECK(inv.mu.overlaps(inv.lambda));
        CHECK(inv.lambda0.contains(Rational(1)));
    }
    {
        TwistFamily fam = cubic2_family();
        FamilyInvariants inv = invariants_of(fam);
        CHECK(inv.mu_case == MuCase::case1_tie);  // complex pair holds the top two moduli
        CHECK(d_lo(inv.lambda) > 3.84731);
        CHECK(d_hi(inv.lambda) < 3.84733);
        CHECK(inv.mu.overlaps(inv.lambda));
    }
    {
        FieldPtr k = NumberField::create(IntPoly({1, 0, -4, 0, 1}));
        TwistFamily fam = TwistFamily::create(k, FieldElement::one(k), FieldElement::theta(k), 1);
        FamilyInvariants inv = invariants_of(fam);
        CHECK(inv.mu_case == MuCase::case3_generic);
        CHECK(twtest::approx_in(inv.mu, 2.0 + std::sqrt(3.0)));
        CHECK(inv.mu.width_upper() < 1e-20);
    }
    {
        // totally real cubic with three distinct moduli: the middle-tie case
        FieldPtr k = NumberField::create(IntPoly({-1, -3, 0, 1}));
        TwistFamily fam = TwistFamily::create(k, FieldElement::one(k), FieldElement::theta(k), 1);
        FamilyInvariants inv = invariants_of(fam);
        CHECK(inv.mu_case == MuCase::case2_middle_tie);
        // mu = min(|v2/v1|, |v3/v2|) = |v3/v2| here
        CHECK(twtest::approx_in(inv.mu, 1.8793852415718168 / 1.5320888862379560, 1e-9));
    }
}

TEST_CASE("subfield twist: upsilon generating a quadratic inside the quartic") {
    // theta^2 = 2 + sqrt(3) inside Q[theta]/(theta^4 - 4 theta^2 + 1):
    // every conjugate modulus doubles up, and mu = (2 + sqrt(3))^2
    FieldPtr k = NumberField::create(IntPoly({1, 0, -4, 0, 1}));
    FieldElement u = FieldElement::theta(k) * FieldElement::theta(k);
    REQUIRE(is_unit(u));
    REQUIRE_FALSE(generates_field(u));
    TwistFamily fam = TwistFamily::create(k, FieldElement::one(k), u, 1);
    UnitConjugateOrder ord = unit_conjugate_order(fam);
    CHECK(ord.multiplicity == 2);
    REQUIRE(ord.group_modulus.size() == 2);
    FamilyInvariants inv = invariants_of(fam);
    CHECK(inv.mu_case == MuCase::case3_generic);
    double target = (2.0 + std::sqrt(3.0)) * (2.0 + std::sqrt(3.0));
    CHECK(twtest::approx_in(inv.mu, target, 1e-9));
    // lambda = (2+sqrt3)^2 as well: two conjugates above the circle
    CHECK(twtest::approx_in(inv.lambda, target, 1e-9));
    CHECK(check_unit_modulus_bounds(ord, inv.lambda).pass());
    // F_1 = charpoly(theta^2) homogenized = (X^2 - 4XY + Y^2)^2
    BinaryForm f1 = form_at(fam, 1);
    CHECK(f1.coeffs == std::vector<Integer>{1, -8, 18, -8, 1});
    // the degree filter excludes every exponent: theta^{2a} never generates
    SolutionSet s = enumerate_solutions(fam, SearchBox{-2, 2, 6, 1}, true);
    CHECK(s.solutions.empty());
    CHECK(s.skipped_a == std::vector<long>{-2, -1, 0, 1, 2});
}

TEST_CASE("mu stays within (1, lambda^2]") {
    for (const auto& [g, ucoords] : twtest::sample_family_fields()) {
        FieldPtr k = NumberField::create(g);
        TwistFamily fam =
            TwistFamily::create(k, FieldElement::one(k), twtest::element_from_longs(k, ucoords), 1);
        FamilyInvariants inv = invariants_of(fam);
        CHECK(inv.mu.le_possible(inv.lambda.sqr()));
        if (inv.mu_case == MuCase::case3_generic) CHECK(d_lo(inv.mu) > 1.0);
        CHECK(d_lo(inv.lambda) > 1.0);
    }
}

TEST_CASE("group action: twisting alpha by upsilon^a shifts the index") {
    TwistFamily fam = cubic2_family();
    FieldPtr k = fam.field();
    for (long a : {-2L, 1L, 3L}) {
        FieldElement alpha2 = fam.alpha() * fam.upsilon().pow(a);
        TwistFamily shifted = TwistFamily::create(k, alpha2, fam.upsilon(), 1);
        for (long b : {-1L, 0L, 2L}) CHECK(form_at(fam, a + b) == form_at(shifted, b));
    }
}

TEST_CASE("evaluate_form equals a0 times the norm of x - alpha upsilon^a y") {
    for (const auto& [g, ucoords] : twtest::sample_family_fields()) {
        FieldPtr k = NumberField::create(g);
        FieldElement alpha(k, {1, 1});  // 1 + theta
        TwistFamily fam =
            TwistFamily::create(k, alpha, twtest::element_from_longs(k, ucoords), 1);
        for (int trial = 0; trial < 8; ++trial) {
            long a = rand_in(-2, 2);
            Integer x(rand_in(-6, 6)), y(rand_in(-6, 6));
            BinaryForm f = form_at(fam, a);
            FieldElement gamma = fam.alpha() * fam.upsilon().pow(a);
            FieldElement lin = FieldElement::from_rational(k, Rational(x)) -
                               Rational(y) * gamma;
            if (lin.is_zero()) continue;
            Rational expect = Rational(fam.a0()) * norm(lin);
            CHECK(Rational(evaluate_form(f, x, y)) == expect);
        }
    }
}

TEST_CASE("chi evaluation") {
    mpfr_prec_t p = 128;
    RealInterval one = RealInterval::from_long(1, p);
    RealInterval e = RealInterval::from_double(std::exp(1.0), p);
    CHECK(chi(one, e, 2).contains(Rational(1)));
    RealInterval c2 = chi(e, e, 8);
    CHECK(twtest::approx_in(c2, std::log(8.0)));
    RealInterval e4 = RealInterval::from_double(std::exp(4.0), p);
    RealInterval c3 = chi(e4, e, 100);
    CHECK(twtest::approx_in(c3, 4.0 * std::log(25.0), 1e-9));
    CHECK_THROWS_AS(chi(one, e, 0), domain_error);
}

TEST_CASE("unit modulus bounds hold on the corpus, boundary equality included") {
    for (const auto& cu : twtest::unit_corpus()) {
        FieldPtr k = NumberField::create(cu.g);
        FieldElement u = twtest::element_from_longs(k, cu.upsilon_coords);
        TwistFamily fam = TwistFamily::create(k, FieldElement::one(k), u, 1);
        UnitConjugateOrder ord = unit_conjugate_order(fam);
        RealInterval lam = family_lambda(fam);
        auto rep = check_unit_modulus_bounds(ord, lam);
        INFO(cu.name);
        CHECK(rep.pass());
    }
}

TEST_CASE("psi values at the plastic solution (4, 3, 1)") {
    TwistFamily fam = plastic_family();
    PsiReport rep = psi_values(fam, 4, 3, 1, 1);
    CHECK(rep.value == 1);
    CHECK(rep.i0 == 3);  // the real embedding carries the smallest |beta|
    CHECK(rep.product_contains_m);
    CHECK(rep.norm_identity_ok);
    REQUIRE(rep.psi_abs.size() == 3);
    CHECK_THROWS_AS(psi_values(fam, 4, -3, 1, 1), domain_error);  // y > 0 required
    // cubic2: F_1(1, 1) = 1 + 3 + 3 - 1 = 6 > m = 1, not a solution
    CHECK_THROWS_AS(psi_values(cubic2_family(), 1, 1, 1, 1), domain_error);
}

TEST_CASE("psi values: degenerate equal conjugates as an arithmetic identity") {
    // F_0 = (X - Y)^3 for alpha = 1: all beta_j = x - y exactly
    TwistFamily fam = cubic2_family();
    PsiReport rep = psi_values(fam, 2, 1, 0, 1);
    CHECK(rep.value == 1);
    CHECK(rep.product_contains_m);
    CHECK(rep.norm_identity_ok);
}

TEST_CASE("psi values on the cyclotomic counterexample solution") {
    FieldPtr k = NumberField::create(cyclotomic(12));
    TwistFamily fam = TwistFamily::create_unchecked_root_of_unity(
        k, FieldElement::theta(k), FieldElement::theta(k), 1);
    PsiReport rep = psi_values(fam, 1, 1, 0, 1);
    CHECK(rep.value == 1);
    CHECK(rep.product_contains_m);
    CHECK(rep.norm_identity_ok);
}

TEST_CASE("psi values on a quartic solution with four distinct beta moduli") {
    FieldPtr k = NumberField::create(IntPoly({1, 0, -4, 0, 1}));
    TwistFamily fam = TwistFamily::create(k, FieldElement::one(k), FieldElement::theta(k), 1);
    // F_1(1, 2) = 1 - 16 + 16 = 1
    PsiReport rep = psi_values(fam, 1, 2, 1, 1);
    CHECK(rep.value == 1);
    CHECK((rep.i0 == 1 || rep.i0 == 2));  // |1 -+ 2 sqrt(2 - sqrt 3)| is smallest
    CHECK(rep.product_contains_m);
    CHECK(rep.norm_identity_ok);
}

TEST_CASE("power-twist family forms") {
    IntPoly golden({-1, -1, 1});
    CHECK(power_family(golden, 2, 1) == form_of(4, {1, 0, -1, 0, -1}));
    CHECK(power_family(golden, 2, 0) == form_of(4, {1, 0, -2, 0, 1}));  // (X^2 - Y^2)^2
    // trace(phi^3) = 4 and norm(phi)^3 = -1 force the -Y^4 sign
    CHECK(power_family(golden, 2, 3) == form_of(4, {1, 0, -4, 0, -1}));
    // the sharp quartic arises from eps = 2 + sqrt(3) at a = 1
    CHECK(power_family(IntPoly({1, -4, 1}), 2, 1) == form_of(4, {1, 0, -4, 0, 1}));
    CHECK_THROWS_AS(power_family(IntPoly({-2, 0, 1}), 2, 1), domain_error);  // sqrt 2: norm -2
    CHECK_THROWS_AS(power_family(IntPoly({1, 1, 1}), 2, 1), domain_error);   // root of unity
    CHECK_THROWS_AS(power_family(golden, 1, 1), domain_error);               // h >= 2
}

TEST_CASE("power-twist family against the numeric oracle") {
    // quartic field of sqrt(phi): the form of upsilon^a equals the h = 2
    // composition for every a
    FieldPtr k = NumberField::create(IntPoly({-1, 0, -1, 0, 1}));  // X^4 - X^2 - 1
    TwistFamily fam = TwistFamily::create(k, FieldElement::one(k), FieldElement::theta(k), 1);
    // the product over the h-th roots of unity collapses to X^h - w^h Y^h
    // exactly when gcd(a, h) = 1
    for (long a : {1L, 3L, -1L, 5L}) {
        CHECK(form_at(fam, a) == power_family(IntPoly({-1, -1, 1}), 2, a));
    }
    for (long a : {1L, 2L, 3L, -2L}) {
        auto oracle = twtest::numeric_form_oracle(fam, a);
        REQUIRE(oracle.exact);
        CHECK(oracle.coeffs == form_at(fam, a).coeffs);
    }
}

TEST_CASE("power-twist mu law: log mu >= (2/(d-1)) log lambda") {
    for (const IntPoly& g : {IntPoly({-1, 0, -1, 0, 1}), IntPoly({1, 0, -4, 0, 1})}) {
        FieldPtr k = NumberField::create(g);
        TwistFamily fam = TwistFamily::create(k, FieldElement::one(k), FieldElement::theta(k), 1);
        FamilyInvariants inv = invariants_of(fam);
        RealInterval lhs = inv.mu.log();
        RealInterval rhs =
            RealInterval::from_rational(Rational(2, g.degree() - 1), lhs.prec()) * inv.lambda.log();
        CHECK_FALSE(lhs.certainly_less(rhs));
        // mu = |eps_l / eps_1|^{1/h} for these families
        UnitConjugateOrder ord = unit_conjugate_order(fam);
        RealInterval ratio = ord.modulus_at(g.degree() - 1) / ord.modulus_at(0);
        CHECK(inv.mu.overlaps(ratio));  // |upsilon_d / upsilon_1| = |eps_l / eps_1|^{1/h}
    }
}

TEST_CASE("cyclotomic demo") {
    CyclotomicReport rep = cyclotomic_demo(12);
    CHECK(rep.phi == IntPoly({1, 0, -1, 0, 1}));
    CHECK(rep.coprime_a == std::vector<long>{1, 5, 7, 11});
    CHECK(rep.all_forms_equal);
    REQUIRE(rep.solutions.size() == 4);
    CHECK(rep.solutions == std::vector<std::array<long, 2>>{{-1, -1}, {-1, 1}, {1, -1}, {1, 1}});

    CyclotomicReport r3 = cyclotomic_demo(3);
    CHECK(r3.phi == IntPoly({1, 1, 1}));
    CHECK(r3.coprime_a == std::vector<long>{1, 2});
    CHECK(r3.all_forms_equal);
    CHECK_THROWS_AS(cyclotomic_demo(2), domain_error);
}

TEST_CASE("form coefficients integrality is checked, not assumed") {
    // alpha = theta/2 with a0 = 2: charpoly(theta/2) = X^3 - 1/4, and
    // 2 * charpoly is not integral
    FieldPtr k = NumberField::create(IntPoly({-2, 0, 0, 1}));
    FieldElement half_theta = Rational(1, 2) * FieldElement::theta(k);
    CHECK_THROWS_AS(
        TwistFamily::create(k, half_theta, FieldElement::theta(k) - FieldElement::one(k), 2),
        domain_error);
    // a0 = 4 makes it integral: 4 X^3 - 1
    TwistFamily fam = TwistFamily::create(
        k, half_theta, FieldElement::theta(k) - FieldElement::one(k), 4);
    CHECK(form_at(fam, 0) == form_of(3, {4, 0, 0, -1}));
}

TEST_CASE("lambda0 is reported for both normalizations") {
    FieldPtr k = NumberField::create(IntPoly({-2, 0, 0, 1}));
    FieldElement half_theta = Rational(1, 2) * FieldElement::theta(k);
    TwistFamily fam = TwistFamily::create(
        k, half_theta, FieldElement::theta(k) - FieldElement::one(k), 4);
    FamilyInvariants inv = invariants_of(fam);
    // lambda0 = 4 prod max(1, |theta_i|/2) = 4 (all |theta_i/2| < 1)
    CHECK(inv.lambda0.contains(Rational(4)));
    // rescaled alpha' = 2 theta has all conjugates of modulus 2 * 2^{1/3}
    CHECK(twtest::approx_in(inv.lambda0_rescaled, 16.0, 1e-20));
}
