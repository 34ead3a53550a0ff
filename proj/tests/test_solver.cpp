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

#include <catch2/catch_amalgamated.hpp>

#include <numeric>
#include <set>

#include "support.hpp"
#include "thuetwist/descriptors.hpp"
#include "thuetwist/solver.hpp"

using namespace thuetwist;
using twtest::rand_in;

namespace {

TwistFamily plastic_family() {
    FieldPtr k = NumberField::create(IntPoly({-1, -1, 0, 1}));
    return TwistFamily::create(k, FieldElement::one(k), FieldElement::theta(k), 1);
}

}  // namespace

TEST_CASE("search box validation") {
    SearchBox bad{1, 0, 10, 1};
    CHECK_THROWS_AS(bad.validate(), domain_error);
    SearchBox m0{0, 1, 10, 0};
    CHECK_THROWS_AS(m0.validate(), domain_error);
    TwistFamily fam = plastic_family();
    CHECK_THROWS_AS(enumerate_solutions(fam, m0, false), domain_error);
}

TEST_CASE("plastic family box: finds (4, 3, 1) and skips a = 0 under the degree filter") {
    TwistFamily fam = plastic_family();
    SearchBox box{0, 3, 30, 1};
    SolutionSet s = enumerate_solutions(fam, box, true);
    CHECK(s.skipped_a == std::vector<long>{0});  // alpha upsilon^0 = 1 does not generate
    bool found = false;
    for (const auto& sol : s.solutions)
        if (sol.a == 1 && sol.x == 4 && sol.y == 3) {
            found = true;
            CHECK(sol.value == 1);
        }
    CHECK(found);
    // sign symmetry: solutions come in (x, y) <-> (-x, -y) pairs
    for (const auto& sol : s.solutions) {
        SolutionTriple mirror{Integer(-sol.x), Integer(-sol.y), sol.a,
                              fam.field()->degree() % 2 == 0 ? sol.value : Integer(-sol.value)};
        CHECK(std::binary_search(s.solutions.begin(), s.solutions.end(), mirror));
    }
    // solutions are sorted and unique
    CHECK(std::is_sorted(s.solutions.begin(), s.solutions.end()));
    CHECK(std::adjacent_find(s.solutions.begin(), s.solutions.end()) == s.solutions.end());
}

TEST_CASE("windowed enumeration equals the full-scan oracle") {
    std::vector<TwistFamily> fams;
    for (const auto& [g, ucoords] : twtest::sample_family_fields()) {
        FieldPtr k = NumberField::create(g);
        fams.push_back(
            TwistFamily::create(k, FieldElement::one(k), twtest::element_from_longs(k, ucoords), 1));
        FieldElement alpha(k, {1, 1});
        fams.push_back(TwistFamily::create(k, alpha, twtest::element_from_longs(k, ucoords), 1));
    }
    int idx = 0;
    for (const TwistFamily& fam : fams) {
        SearchBox box{-3, 3, 15, Integer(1 + (idx % 5))};
        bool require_degree = idx % 2 == 0;
        SolutionSet windowed = enumerate_solutions(fam, box, require_degree);
        SolutionSet oracle = twtest::fullscan_oracle(fam, box, require_degree);
        INFO("family #" << idx << " m=" << box.m.get_str());
        REQUIRE(windowed.solutions.size() == oracle.solutions.size());
        CHECK(windowed.solutions == oracle.solutions);
        CHECK(windowed.skipped_a == oracle.skipped_a);
        ++idx;
    }
}

TEST_CASE("windowed enumeration equals the full-scan oracle with a0 > 1") {
    // alpha = theta/2 over theta^3 = 2 needs a0 = 4: F_0 = 4X^3 - Y^3
    FieldPtr k = NumberField::create(IntPoly({-2, 0, 0, 1}));
    FieldElement alpha = Rational(1, 2) * FieldElement::theta(k);
    TwistFamily fam = TwistFamily::create(
        k, alpha, FieldElement::theta(k) - FieldElement::one(k), 4);
    CHECK(form_at(fam, 0).coeffs == std::vector<Integer>{4, 0, 0, -1});
    SearchBox box{-2, 2, 12, 3};
    SolutionSet w = enumerate_solutions(fam, box, false);
    SolutionSet o = twtest::fullscan_oracle(fam, box, false);
    CHECK(w.solutions == o.solutions);
    REQUIRE_FALSE(w.solutions.empty());
}

TEST_CASE("family descriptor JSON round-trip") {
    FieldPtr k = NumberField::create(IntPoly({-1, -1, 0, 1}));
    FamilyDescriptor fd{k, FieldElement::one(k), FieldElement::theta(k), Integer(1),
                        {FieldElement::theta(k)}, "plastic"};
    Json j = family_descriptor_to_json(fd);
    FamilyDescriptor back = family_descriptor_from_json(j);
    CHECK(back.name == "plastic");
    CHECK(back.field->defining_poly() == k->defining_poly());
    CHECK(back.alpha == fd.alpha);
    CHECK(back.upsilon == fd.upsilon);
    CHECK(back.a0 == 1);
    REQUIRE(back.units.size() == 1);
    CHECK(back.units[0] == fd.units[0]);
    CHECK(family_descriptor_to_json(back).dump() == j.dump());
}

TEST_CASE("enumeration is deterministic: byte-identical reports") {
    TwistFamily fam = plastic_family();
    SearchBox box{-2, 2, 12, 2};
    SolutionSet a = enumerate_solutions(fam, box, true);
    SolutionSet b = enumerate_solutions(fam, box, true);
    Json ja = solution_set_to_json(a, false, &fam, box.m);
    Json jb = solution_set_to_json(b, false, &fam, box.m);
    CHECK(ja.dump() == jb.dump());
    CHECK(solution_set_to_csv(a) == solution_set_to_csv(b));
}

TEST_CASE("verify_solution") {
    TwistFamily fam = plastic_family();
    VerifyReport ok = verify_solution(fam, 4, 3, 1, 1);
    CHECK(ok.pass);
    CHECK(ok.value == 1);
    REQUIRE(ok.psi.has_value());
    CHECK(ok.psi->i0 == 3);

    // F_1(1,1) = 1 - 1 - 1 = -1 for the plastic family: a genuine solution
    VerifyReport small = verify_solution(fam, 1, 1, 1, 1);
    CHECK(small.pass);
    CHECK(small.value == -1);

    VerifyReport zero = verify_solution(fam, 0, 1, 1, 1);
    CHECK_FALSE(zero.pass);
    CHECK(zero.reason == "xy = 0");

    // cubic2: F_1(1,1) = 6 exceeds m = 1
    FieldPtr k = NumberField::create(IntPoly({-2, 0, 0, 1}));
    TwistFamily c2 = TwistFamily::create(k, FieldElement::one(k),
                                         FieldElement::theta(k) - FieldElement::one(k), 1);
    VerifyReport fail = verify_solution(c2, 1, 1, 1, 1);
    CHECK_FALSE(fail.pass);
    CHECK(fail.value == 6);
    CHECK(fail.reason == "|F_a(x, y)| > m");

    // negative y is normalized before the psi diagnostics
    VerifyReport neg = verify_solution(fam, -4, -3, 1, 1);
    CHECK(neg.pass);
    REQUIRE(neg.psi.has_value());
    CHECK(neg.psi->i0 == 3);
}

TEST_CASE("empirical constant fit") {
    TwistFamily fam = plastic_family();
    SearchBox box{0, 3, 30, 1};
    SolutionSet s = enumerate_solutions(fam, box, true);
    REQUIRE_FALSE(s.solutions.empty());
    KappaFitReport fit = empirical_kappa(fam, s, box.m, 0.2811995743229618);
    CHECK_FALSE(fit.vacuous);
    CHECK(fit.fitted_kappa > 0.0);
    CHECK(fit.rhs_kappa1 > 0.0);
    CHECK(fit.max_abs_a >= 1);

    // enlarging the box without new solutions leaves the fit unchanged
    SolutionSet larger = s;
    KappaFitReport fit2 = empirical_kappa(fam, larger, box.m, 0.2811995743229618);
    CHECK(fit.fitted_kappa == fit2.fitted_kappa);

    SolutionSet empty;
    KappaFitReport v = empirical_kappa(fam, empty, box.m, 0.28119957);
    CHECK(v.vacuous);
    CHECK(v.fitted_kappa == 0.0);
}

TEST_CASE("cyclotomic family enumeration: four solutions at every coprime index") {
    FieldPtr k = NumberField::create(cyclotomic(12));
    TwistFamily fam = TwistFamily::create_unchecked_root_of_unity(
        k, FieldElement::one(k), FieldElement::theta(k), 1);
    SearchBox box{1, 12, 10, 1};
    SolutionSet s = enumerate_solutions(fam, box, false);
    for (long a = 1; a <= 12; ++a) {
        if (std::gcd(a, 12L) != 1) continue;
        std::set<std::pair<long, long>> got;
        for (const auto& sol : s.solutions)
            if (sol.a == a)
                got.insert({to_long_checked(sol.x, "x"), to_long_checked(sol.y, "y")});
        std::set<std::pair<long, long>> want{{1, 1}, {-1, 1}, {1, -1}, {-1, -1}};
        INFO("a = " << a);
        CHECK(got == want);
    }
}
