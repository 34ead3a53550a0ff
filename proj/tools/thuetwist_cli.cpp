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
#include <cstdio>
#include <fstream>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "thuetwist/descriptors.hpp"

using namespace thuetwist;

namespace {

struct CommonOpts {
    std::string family_file;
    long a = 0;
    std::string a_range;
    long xy_max = 10;
    std::string m_str = "1";
    bool require_degree = false;
    long bits = 128;
    long max_bits = 4096;
    std::string format = "json";
    double kappa_thm1 = 1.0;
    double kappa_thm2 = 1.0;
    bool unchecked_root_of_unity = false;
    double regulator = 0.0;
    bool diagnostics = false;
};

PrecisionConfig prec_of(const CommonOpts& o) { return PrecisionConfig{o.bits, o.max_bits}; }

FamilyDescriptor load_descriptor(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw domain_error("cannot open family file: " + path);
    Json j = Json::parse(in, nullptr, true, true);
    return family_descriptor_from_json(j);
}

TwistFamily load_family(const CommonOpts& o) {
    FamilyDescriptor fd = load_descriptor(o.family_file);
    if (o.unchecked_root_of_unity)
        return TwistFamily::create_unchecked_root_of_unity(fd.field, fd.alpha, fd.upsilon, fd.a0,
                                                           prec_of(o));
    return TwistFamily::create(fd.field, fd.alpha, fd.upsilon, fd.a0, prec_of(o));
}

std::pair<long, long> parse_a_range(const CommonOpts& o) {
    if (o.a_range.empty()) return {o.a, o.a};
    auto pos = o.a_range.find(':');
    if (pos == std::string::npos) throw domain_error("--a-range expects LO:HI");
    return {std::stol(o.a_range.substr(0, pos)), std::stol(o.a_range.substr(pos + 1))};
}

void emit(const Json& j, const CommonOpts& o) {
    if (o.format == "csv") {
        // flat key,value rows; arrays are inlined one element per row
        std::function<void(const std::string&, const Json&)> walk =
            [&](const std::string& prefix, const Json& v) {
                if (v.is_object()) {
                    for (auto it = v.begin(); it != v.end(); ++it)
                        walk(prefix.empty() ? it.key() : prefix + "." + it.key(), it.value());
                } else if (v.is_array()) {
                    int i = 0;
                    for (const auto& e : v) walk(prefix + "[" + std::to_string(i++) + "]", e);
                } else {
                    std::cout << prefix << "," << (v.is_string() ? v.get<std::string>() : v.dump())
                              << "\n";
                }
            };
        walk("", j);
    } else {
        std::cout << j.dump(2) << "\n";
    }
}

double resolve_regulator(const CommonOpts& o, const FamilyDescriptor& fd, const TwistFamily& fam) {
    if (o.regulator > 0) return o.regulator;
    if (!fd.units.empty()) {
        UnitSystem sys(fd.field, fd.units);
        return regulator_from_units(sys, fam.embeddings()).mid();
    }
    throw domain_error("supply --R or a \"units\" array in the family file");
}

int run_form(const CommonOpts& o) {
    TwistFamily fam = load_family(o);
    auto [alo, ahi] = parse_a_range(o);
    Json out = Json::array();
    for (long a = alo; a <= ahi; ++a) {
        Json e = form_to_json(form_at(fam, a));
        e["a"] = a;
        out.push_back(e);
    }
    emit(out.size() == 1 ? out[0] : out, o);
    return 0;
}

int run_invariants(const CommonOpts& o) {
    TwistFamily fam = load_family(o);
    Json j = invariants_to_json(invariants_of(fam));
    j["embeddings"] = embeddings_to_json(fam.embeddings());
    UnitConjugateOrder ord = unit_conjugate_order(fam);
    auto um = check_unit_modulus_bounds(ord, family_lambda(fam));
    j["unit_modulus_bounds_ok"] = um.pass();
    emit(j, o);
    return 0;
}

int run_bounds(const CommonOpts& o) {
    FamilyDescriptor fd = load_descriptor(o.family_file);
    TwistFamily fam = o.unchecked_root_of_unity
                          ? TwistFamily::create_unchecked_root_of_unity(fd.field, fd.alpha,
                                                                        fd.upsilon, fd.a0, prec_of(o))
                          : TwistFamily::create(fd.field, fd.alpha, fd.upsilon, fd.a0, prec_of(o));
    double reg = resolve_regulator(o, fd, fam);
    FamilyInvariants inv = invariants_of(fam);
    KappaConfig cfg{o.kappa_thm1, o.kappa_thm2};
    int r = unit_rank(fam.embeddings());
    BoundReport rep = make_bound_report(reg, integer_from_decimal(o.m_str), inv.lambda0.mid(),
                                        inv.lambda.mid(), inv.mu.mid(), Integer(o.a),
                                        fam.field()->degree(), r, cfg);
    emit(bound_report_to_json(rep), o);
    return 0;
}

int run_solve(const CommonOpts& o) {
    TwistFamily fam = load_family(o);
    auto [alo, ahi] = parse_a_range(o);
    SearchBox box{alo, ahi, o.xy_max, integer_from_decimal(o.m_str)};
    SolutionSet s = enumerate_solutions(fam, box, o.require_degree);
    if (o.format == "csv") {
        std::cout << solution_set_to_csv(s);
        return 0;
    }
    Json j = solution_set_to_json(s, o.diagnostics, &fam, box.m);
    j["a_min"] = box.a_min;
    j["a_max"] = box.a_max;
    j["xy_max"] = o.xy_max;
    j["m"] = o.m_str;
    j["require_degree"] = o.require_degree;
    emit(j, o);
    return 0;
}

int run_verify(const CommonOpts& o, const std::string& xs, const std::string& ys) {
    TwistFamily fam = load_family(o);
    VerifyReport rep = verify_solution(fam, integer_from_decimal(xs), integer_from_decimal(ys),
                                       o.a, integer_from_decimal(o.m_str),
                                       o.require_degree || !fam.outside_theorem_hypotheses());
    Json j;
    j["pass"] = rep.pass;
    j["value"] = to_decimal(rep.value);
    j["xy_nonzero"] = rep.xy_nonzero;
    j["in_range"] = rep.in_range;
    j["generates_field"] = rep.generates;
    if (!rep.reason.empty()) j["reason"] = rep.reason;
    if (rep.psi) j["psi"] = psi_to_json(*rep.psi);
    emit(j, o);
    return rep.pass ? 0 : 1;
}

int run_demo_cyclotomic(int n, const CommonOpts& o) {
    CyclotomicReport rep = cyclotomic_demo(n);
    if (o.format == "json") {
        Json j;
        j["n"] = n;
        j["phi"] = rep.phi.to_string();
        j["base_form"] = form_to_json(rep.base_form);
        j["coprime_a"] = rep.coprime_a;
        j["all_forms_equal"] = rep.all_forms_equal;
        Json sols = Json::array();
        for (auto& s : rep.solutions) sols.push_back(Json{{"x", s[0]}, {"y", s[1]}});
        j["solutions"] = sols;
        j["note"] = "upsilon is a root of unity: outside the theorem hypotheses "
                    "(unchecked construction)";
        emit(j, o);
    } else {
        std::printf("Phi_%d = %s\n", n, rep.phi.to_string().c_str());
        std::string as;
        for (size_t i = 0; i < rep.coprime_a.size(); ++i)
            as += (i ? "," : "") + std::to_string(rep.coprime_a[i]);
        std::printf("F_a = F_0 for a in {%s}: %s\n", as.c_str(),
                    rep.all_forms_equal ? "verified" : "FAILED");
        if (n == 12) {
            std::printf("solutions of x^4-x^2y^2+y^4 = 1 with |x|,|y| <= 10, xy != 0:\n");
            for (auto& s : rep.solutions) std::printf("(%ld,%ld) ", s[0], s[1]);
            std::printf("\n");
        }
    }
    return rep.all_forms_equal ? 0 : 1;
}

int run_demo_corollary(const CommonOpts& o) {
    // The power-twist construction prod_i (X^h - eps_i^a Y^h) for two
    // quadratic units, with the certified mu law log mu >= (2/(d-1)) log lambda.
    Json j;
    {
        Json g;
        IntPoly golden({-1, -1, 1});
        g["eps_minpoly"] = golden.to_string();
        for (long a : {0L, 1L, 3L})
            g["F_" + std::to_string(a)] = power_family(golden, 2, a).to_string();
        j["golden"] = g;
    }
    {
        Json q;
        IntPoly m({1, -4, 1});  // 2 + sqrt(3)
        q["eps_minpoly"] = m.to_string();
        BinaryForm f = power_family(m, 2, 1);
        q["F_1"] = f.to_string();
        // family view: K = Q[t]/(t^4 - 4 t^2 + 1), upsilon = t
        FieldPtr K = NumberField::create(IntPoly({1, 0, -4, 0, 1}));
        TwistFamily fam =
            TwistFamily::create(K, FieldElement::one(K), FieldElement::theta(K), 1, prec_of(o));
        FamilyInvariants inv = invariants_of(fam);
        q["mu"] = interval_to_json(inv.mu);
        q["mu_case"] = to_string(inv.mu_case);
        // log mu >= (2/(d-1)) log lambda, certified
        RealInterval lhs = inv.mu.log();
        RealInterval rhs = RealInterval::from_rational(Rational(2, 4 - 1), lhs.prec()) *
                           inv.lambda.log();
        q["mu_law_ok"] = !lhs.certainly_less(rhs);
        j["sharp_quartic"] = q;
    }
    emit(j, o);
    return 0;
}

int run_checks(const CommonOpts& o);

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"thuetwist: families of unit-twisted binary forms, their invariants, "
                 "explicit bounds, and desk-scale solution enumeration"};
    app.require_subcommand(1);
    CommonOpts o;

    auto add_common = [&](CLI::App* s, bool with_family = true) {
        if (with_family)
            s->add_option("--family", o.family_file, "family descriptor JSON file")->required();
        s->add_option("--bits", o.bits, "working precision in bits (default 128)");
        s->add_option("--max-bits", o.max_bits, "certification precision cap (default 4096)");
        s->add_option("--format", o.format, "output format: json or csv")
            ->check(CLI::IsMember({"json", "csv"}));
        s->add_flag("--unchecked-root-of-unity", o.unchecked_root_of_unity,
                    "bypass the root-of-unity rejection (demo families)");
    };

    CLI::App* form = app.add_subcommand("form", "print the twisted form F_a");
    add_common(form);
    form->add_option("--a", o.a, "twist exponent a");
    form->add_option("--a-range", o.a_range, "range LO:HI of twist exponents");

    CLI::App* invars = app.add_subcommand("invariants", "certified lambda0, lambda, mu, case tag");
    add_common(invars);

    CLI::App* bounds = app.add_subcommand("bounds", "evaluate the explicit bound right-hand sides");
    add_common(bounds);
    bounds->add_option("--a", o.a, "twist exponent a (for the coordinate bound)");
    bounds->add_option("--m", o.m_str, "inequality bound m");
    bounds->add_option("--R", o.regulator, "regulator (else computed from \"units\")");
    bounds->add_option("--kappa-thm1", o.kappa_thm1, "constant for the lambda-power bound");
    bounds->add_option("--kappa-thm2", o.kappa_thm2, "constant for the mu-refined bound");

    CLI::App* solve = app.add_subcommand("solve", "enumerate 0 < |F_a(x,y)| <= m over a box");
    add_common(solve);
    solve->add_option("--a", o.a, "single twist exponent");
    solve->add_option("--a-range", o.a_range, "range LO:HI of twist exponents");
    solve->add_option("--xy-max", o.xy_max, "coordinate box |x|,|y| <= xy_max");
    solve->add_option("--m", o.m_str, "inequality bound m");
    solve->add_flag("--require-degree", o.require_degree,
                    "skip exponents where alpha upsilon^a does not generate the field");
    solve->add_flag("--diagnostics", o.diagnostics, "attach Psi diagnostics to each solution");

    CLI::App* verify = app.add_subcommand("verify", "verify one claimed solution (x, y, a)");
    add_common(verify);
    std::string xs = "0", ys = "0";
    verify->add_option("--x", xs, "x coordinate")->required();
    verify->add_option("--y", ys, "y coordinate")->required();
    verify->add_option("--a", o.a, "twist exponent a")->required();
    verify->add_option("--m", o.m_str, "inequality bound m");
    verify->add_flag("--require-degree", o.require_degree, "require the degree condition");

    CLI::App* demo = app.add_subcommand("demo", "reproduce the bundled example scenarios");
    demo->require_subcommand(1);
    CLI::App* demo_cyc = demo->add_subcommand("cyclotomic", "root-of-unity counterexample family");
    int cyc_n = 12;
    demo_cyc->add_option("n", cyc_n, "cyclotomic index (>= 3)")->required();
    demo_cyc->add_option("--format", o.format, "output format: json or csv");
    CLI::App* demo_cor = demo->add_subcommand("corollary", "power-twist family demo");
    demo_cor->add_option("--format", o.format, "output format: json or csv");
    demo_cor->add_option("--bits", o.bits, "working precision in bits");

    CLI::App* checks = app.add_subcommand("checks", "run the bundled property suites");
    checks->add_option("--bits", o.bits, "working precision in bits");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : 64;
    }

    try {
        if (app.got_subcommand(form)) return run_form(o);
        if (app.got_subcommand(invars)) return run_invariants(o);
        if (app.got_subcommand(bounds)) return run_bounds(o);
        if (app.got_subcommand(solve)) return run_solve(o);
        if (app.got_subcommand(verify)) return run_verify(o, xs, ys);
        if (app.got_subcommand(demo)) {
            if (demo->got_subcommand(demo_cyc)) return run_demo_cyclotomic(cyc_n, o);
            return run_demo_corollary(o);
        }
        if (app.got_subcommand(checks)) return run_checks(o);
    } catch (const certification_error& e) {
        std::cerr << "certification error: " << e.what() << "\n";
        return 2;
    } catch (const domain_error& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return 64;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 64;
}

namespace {

// Deterministic property suites over the bundled corpus; mirrors (in reduced
// size) what the test suite pins, so a user can re-run the substance checks
// from the installed binary alone.
int run_checks(const CommonOpts& o) {
    int failures = 0;
    auto report = [&](const char* name, bool ok) {
        std::printf("[%s] %s\n", ok ? "PASS" : "FAIL", name);
        if (!ok) ++failures;
    };
    std::mt19937 rng(20260811u);
    PrecisionConfig cfg = prec_of(o);

    {  // height inequalities M <= sqrt(d+1) H and H <= 2^d M
        bool ok = true;
        int done = 0;
        while (done < 60) {
            int d = 2 + static_cast<int>(rng() % 7);
            std::vector<Integer> c(static_cast<size_t>(d) + 1);
            for (auto& v : c) v = Integer(static_cast<long>(rng() % 101) - 50);
            if (c.back() == 0) c.back() = 1;
            if (c.back() < 0) for (auto& v : c) v = -v;
            IntPoly f(std::move(c));
            if (f.degree() < 2 || !squarefree_check(f)) continue;
            EmbeddingSet emb;
            try {
                emb = isolate_roots(f, cfg);
            } catch (const certification_error&) {
                continue;
            }
            ++done;
            RealInterval m = mahler_measure(f, emb);
            mpfr_prec_t prec = m.prec();
            RealInterval h = RealInterval::from_integer(naive_height(f), prec);
            RealInterval rhs1 = (RealInterval::from_long(f.degree() + 1, prec)).sqrt() * h;
            RealInterval rhs2 = RealInterval::from_integer(
                int_pow(Integer(2), static_cast<unsigned long>(f.degree())), prec) * m;
            if (!m.le_possible(rhs1) || !h.le_possible(rhs2)) ok = false;
        }
        report("height inequalities on 60 random polynomials", ok);
    }
    {  // modulus separation floor
        bool ok = true;
        int done = 0;
        while (done < 30) {
            int d = 2 + static_cast<int>(rng() % 5);
            std::vector<Integer> c(static_cast<size_t>(d) + 1);
            for (auto& v : c) v = Integer(static_cast<long>(rng() % 41) - 20);
            if (c.back() == 0) c.back() = 1;
            IntPoly f(std::move(c));
            if (f.degree() < 2 || !squarefree_check(f)) continue;
            EmbeddingSet emb;
            try {
                emb = isolate_roots(f, cfg);
            } catch (const certification_error&) {
                continue;
            }
            ++done;
            double gap = gs_separation(f, emb);
            int ng = static_cast<int>(emb.tie_groups().size());
            for (int u = 0; u < ng && ok; ++u)
                for (int v = u + 1; v < ng && ok; ++v) {
                    RealInterval diff = emb.group_modulus(v) - emb.group_modulus(u);
                    if (mpfr_cmp_d(diff.hi().raw(), gap) < 0) ok = false;
                }
        }
        report("root modulus separation floor on 30 random polynomials", ok);
    }
    {  // two-conjugates check on the bundled corpus
        bool ok = true;
        for (const IntPoly& g : {IntPoly({-1, -1, 0, 1}), IntPoly({-2, 0, 0, 1}),
                                 IntPoly({1, 0, -4, 0, 1}), IntPoly({-1, -1, 0, 0, 1})}) {
            EmbeddingSet emb = isolate_roots(g, cfg);
            if (!check_two_conjugates_real(emb).pass) ok = false;
        }
        report("real-conjugate separation on the bundled corpus", ok);
    }
    {  // elementary lemma grid
        bool ok = true;
        for (int i = 0; i < 100 && ok; ++i)
            for (int k = 0; k < 100 && ok; ++k) {
                double u = std::pow(10.0, -3.0 + 9.0 * i / 99.0);
                double v = std::pow(10.0, -3.0 + 9.0 * k / 99.0);
                auto r = lemma_elementary(u, v);
                if (r.hypothesis && !r.conclusion) ok = false;
            }
        report("elementary lemma on a 100x100 grid", ok);
    }
    {  // unit corpus: height threshold and modulus bounds
        bool ok = true;
        for (const IntPoly& g : {IntPoly({-1, -1, 1}), IntPoly({-1, -2, 1}), IntPoly({-1, -1, 0, 1}),
                                 IntPoly({1, 0, -4, 0, 1})}) {
            FieldPtr k = NumberField::create(g);
            FieldElement u = FieldElement::theta(k);
            TwistFamily fam = TwistFamily::create(k, FieldElement::one(k), u, 1, cfg);
            UnitConjugateOrder ord = unit_conjugate_order(fam);
            RealInterval lam = family_lambda(fam);
            if (!check_unit_modulus_bounds(ord, lam).pass()) ok = false;
            EmbeddingSet emb = isolate_roots(g, cfg);
            RealInterval h = log_height(u, emb);
            if (mpfr_get_d(h.lo().raw(), MPFR_RNDD) < voutier_bound(g.degree())) ok = false;
        }
        // theta - 1 over t^3 = 2
        {
            FieldPtr k = NumberField::create(IntPoly({-2, 0, 0, 1}));
            FieldElement u = FieldElement::theta(k) - FieldElement::one(k);
            TwistFamily fam = TwistFamily::create(k, FieldElement::one(k), u, 1, cfg);
            if (!check_unit_modulus_bounds(unit_conjugate_order(fam), family_lambda(fam)).pass())
                ok = false;
        }
        report("unit corpus: height thresholds and modulus bounds", ok);
    }
    {  // regulators and the universal floor
        FieldPtr k2 = NumberField::create(IntPoly({-2, 0, 1}));
        EmbeddingSet e2 = isolate_roots(IntPoly({-2, 0, 1}), cfg);
        UnitSystem s2(k2, {FieldElement::one(k2) + FieldElement::theta(k2)});
        RealInterval r2 = regulator_from_units(s2, e2);
        FieldPtr kp = NumberField::create(IntPoly({-1, -1, 0, 1}));
        EmbeddingSet ep = isolate_roots(IntPoly({-1, -1, 0, 1}), cfg);
        UnitSystem sp(kp, {FieldElement::theta(kp)});
        RealInterval rp = regulator_from_units(sp, ep);
        bool ok = friedman_check(r2) && friedman_check(rp) &&
                  std::fabs(r2.mid() - 0.8813735870195430) < 1e-9 &&
                  std::fabs(rp.mid() - 0.2811995743229618) < 1e-9;
        report("regulator values and universal floor", ok);
    }
    {  // mu <= lambda^2 on bundled families
        bool ok = true;
        for (const IntPoly& g : {IntPoly({-1, -1, 0, 1}), IntPoly({-2, 0, 0, 1}),
                                 IntPoly({1, 0, -4, 0, 1})}) {
            FieldPtr k = NumberField::create(g);
            FieldElement u = g.coeff(0) == -2 ? FieldElement::theta(k) - FieldElement::one(k)
                                              : FieldElement::theta(k);
            TwistFamily fam = TwistFamily::create(k, FieldElement::one(k), u, 1, cfg);
            FamilyInvariants inv = invariants_of(fam);
            if (!inv.mu.le_possible(inv.lambda.sqr())) ok = false;
        }
        report("mu <= lambda^2 on bundled families", ok);
    }
    std::printf("%s\n", failures == 0 ? "all checks passed" : "CHECK FAILURES PRESENT");
    return failures == 0 ? 0 : 1;
}

}  // namespace
