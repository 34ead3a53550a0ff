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

#ifndef THUETWIST_DESCRIPTORS_HPP
#define THUETWIST_DESCRIPTORS_HPP

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "thuetwist/bounds.hpp"
#include "thuetwist/errors.hpp"
#include "thuetwist/number_field.hpp"
#include "thuetwist/solver.hpp"
#include "thuetwist/twist_family.hpp"
#include "thuetwist/units.hpp"

namespace thuetwist {

using Json = nlohmann::ordered_json;

// All integers cross the wire as decimal strings; polynomials as arrays with
// the constant term first; binary forms as arrays with the X^d coefficient
// first; intervals as {"lo", "hi"} doubles (outward-rounded).

inline Json poly_to_json(const IntPoly& p) {
    Json a = Json::array();
    for (const auto& c : p.coeffs()) a.push_back(to_decimal(c));
    return a;
}

inline IntPoly poly_from_json(const Json& j) {
    if (!j.is_array()) throw domain_error("polynomial must be a JSON array of decimal strings");
    std::vector<Integer> c;
    for (const auto& v : j) {
        if (v.is_string())
            c.push_back(integer_from_decimal(v.get<std::string>()));
        else if (v.is_number_integer())
            c.push_back(Integer(v.get<long>()));
        else
            throw domain_error("polynomial coefficients must be decimal strings");
    }
    return IntPoly(std::move(c));
}

inline Json element_to_json(const FieldElement& x) {
    Json j;
    Json coords = Json::array();
    for (const auto& c : x.coords()) coords.push_back(to_decimal(c));
    j["coords"] = coords;
    j["den"] = to_decimal(x.den());
    return j;
}

inline FieldElement element_from_json(const FieldPtr& k, const Json& j) {
    if (!j.contains("coords")) throw domain_error("element descriptor needs \"coords\"");
    std::vector<Integer> coords;
    for (const auto& v : j["coords"]) {
        if (v.is_string())
            coords.push_back(integer_from_decimal(v.get<std::string>()));
        else if (v.is_number_integer())
            coords.push_back(Integer(v.get<long>()));
        else
            throw domain_error("element coordinates must be decimal strings");
    }
    Integer den(1);
    if (j.contains("den")) {
        if (j["den"].is_string())
            den = integer_from_decimal(j["den"].get<std::string>());
        else if (j["den"].is_number_integer())
            den = Integer(j["den"].get<long>());
    }
    return FieldElement(k, std::move(coords), std::move(den));
}

inline Json field_to_json(const NumberField& k) {
    Json j;
    j["g"] = poly_to_json(k.defining_poly());
    return j;
}

inline FieldPtr field_from_json(const Json& j) {
    if (!j.contains("g")) throw domain_error("field descriptor needs \"g\"");
    return NumberField::create(poly_from_json(j["g"]));
}

/// Family descriptor: {"g": [...], "alpha": {...}, "upsilon": {...},
/// "a0": "1", optional "units": [elements], optional "name"}.
struct FamilyDescriptor {
    FieldPtr field;
    FieldElement alpha;
    FieldElement upsilon;
    Integer a0;
    std::vector<FieldElement> units;
    std::string name;
};

inline FamilyDescriptor family_descriptor_from_json(const Json& j) {
    FieldPtr k = field_from_json(j);
    if (!j.contains("alpha") || !j.contains("upsilon"))
        throw domain_error("family descriptor needs \"alpha\" and \"upsilon\"");
    FieldElement alpha = element_from_json(k, j["alpha"]);
    FieldElement upsilon = element_from_json(k, j["upsilon"]);
    Integer a0(1);
    if (j.contains("a0")) {
        if (j["a0"].is_string())
            a0 = integer_from_decimal(j["a0"].get<std::string>());
        else if (j["a0"].is_number_integer())
            a0 = Integer(j["a0"].get<long>());
    }
    std::vector<FieldElement> units;
    if (j.contains("units"))
        for (const auto& u : j["units"]) units.push_back(element_from_json(k, u));
    std::string name = j.value("name", std::string{});
    return {std::move(k), std::move(alpha), std::move(upsilon), std::move(a0), std::move(units),
            std::move(name)};
}

inline Json family_descriptor_to_json(const FamilyDescriptor& fd) {
    Json j;
    if (!fd.name.empty()) j["name"] = fd.name;
    j["g"] = poly_to_json(fd.field->defining_poly());
    j["alpha"] = element_to_json(fd.alpha);
    j["upsilon"] = element_to_json(fd.upsilon);
    j["a0"] = to_decimal(fd.a0);
    if (!fd.units.empty()) {
        Json us = Json::array();
        for (const auto& u : fd.units) us.push_back(element_to_json(u));
        j["units"] = us;
    }
    return j;
}

inline Json form_to_json(const BinaryForm& f) {
    Json j;
    j["degree"] = f.degree;
    Json c = Json::array();
    for (const auto& v : f.coeffs) c.push_back(to_decimal(v));
    j["coeffs"] = c;  // X^d coefficient first
    j["pretty"] = f.to_string();
    return j;
}

inline Json interval_to_json(const RealInterval& v) {
    Json j;
    j["lo"] = mpfr_get_d(v.lo().raw(), MPFR_RNDD);
    j["hi"] = mpfr_get_d(v.hi().raw(), MPFR_RNDU);
    return j;
}

inline Json ball_to_json(const EmbeddingSet::BallView& b) {
    Json j;
    j["re"] = b.re;
    j["im"] = b.im;
    j["rad"] = b.rad;
    return j;
}

inline Json embeddings_to_json(const EmbeddingSet& emb) {
    Json j;
    j["poly"] = poly_to_json(emb.poly());
    Json balls = Json::array();
    for (int k = 0; k < emb.degree(); ++k) {
        Json b = ball_to_json(emb.ball_view(k));
        b["real"] = emb.is_real(k);
        b["tie_group"] = emb.tie_group_of(k);
        balls.push_back(b);
    }
    j["balls"] = balls;
    Json groups = Json::array();
    for (size_t gi = 0; gi < emb.tie_groups().size(); ++gi) {
        Json g;
        g["begin"] = emb.tie_groups()[gi].first;
        g["end"] = emb.tie_groups()[gi].second;
        g["modulus"] = interval_to_json(emb.group_modulus(static_cast<int>(gi)));
        groups.push_back(g);
    }
    j["tie_groups"] = groups;
    return j;
}

inline Json invariants_to_json(const FamilyInvariants& inv) {
    Json j;
    j["lambda0"] = interval_to_json(inv.lambda0);
    j["lambda0_rescaled"] = interval_to_json(inv.lambda0_rescaled);
    j["lambda"] = interval_to_json(inv.lambda);
    j["mu"] = interval_to_json(inv.mu);
    j["mu_case"] = to_string(inv.mu_case);
    return j;
}

inline Json bound_report_to_json(const BoundReport& r) {
    Json j;
    j["log_a_bound_thm1"] = r.log_a_bound_thm1;
    j["log_a_bound_thm2"] = r.log_a_bound_thm2;
    j["log_xy_bound"] = r.log_xy_bound;
    j["inputs"] = Json{{"R", r.regulator}, {"m", r.m},          {"a", r.a},
                       {"lambda0", r.lambda0}, {"lambda", r.lambda}, {"mu", r.mu},
                       {"d", r.d},         {"unit_rank", r.unit_rank}};
    j["kappa_thm1"] = r.kappa_thm1;
    j["kappa_thm2"] = r.kappa_thm2;
    j["mu_floor_log"] = r.mu_floor_log_value;
    j["mu_above_floor"] = r.mu_above_floor;
    j["note"] = "headline constants are effective but unspecified; defaults kappa = 1";
    return j;
}

inline Json psi_to_json(const PsiReport& p) {
    Json j;
    j["i0"] = p.i0;
    Json mods = Json::array();
    for (const auto& v : p.psi_abs) mods.push_back(interval_to_json(v));
    j["psi_abs"] = mods;
    j["product_contains_m"] = p.product_contains_m;
    j["norm_identity_ok"] = p.norm_identity_ok;
    j["value"] = to_decimal(p.value);
    return j;
}

inline Json solution_set_to_json(const SolutionSet& s, bool with_diag,
                                 const TwistFamily* fam, const Integer& m) {
    Json j;
    j["count"] = s.solutions.size();
    j["skipped_a"] = s.skipped_a;
    j["fullscan_fallbacks"] = s.fullscan_fallbacks;
    Json arr = Json::array();
    for (const auto& sol : s.solutions) {
        Json e;
        e["a"] = sol.a;
        e["x"] = to_decimal(sol.x);
        e["y"] = to_decimal(sol.y);
        e["value"] = to_decimal(sol.value);
        if (with_diag && fam != nullptr) {
            FieldElement gamma = fam->alpha() * fam->upsilon().pow(sol.a);
            e["generates"] = generates_field(gamma);
            Integer xn = sol.x, yn = sol.y;
            if (yn < 0) {
                xn = -xn;
                yn = -yn;
            }
            e["psi"] = psi_to_json(psi_values(*fam, xn, yn, sol.a, m));
        }
        arr.push_back(e);
    }
    j["solutions"] = arr;
    return j;
}

inline std::string solution_set_to_csv(const SolutionSet& s) {
    std::string out = "a,x,y,value\n";
    for (const auto& sol : s.solutions)
        out += std::to_string(sol.a) + "," + to_decimal(sol.x) + "," + to_decimal(sol.y) + "," +
               to_decimal(sol.value) + "\n";
    return out;
}

}  // namespace thuetwist

#endif
