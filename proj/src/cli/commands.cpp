#include "fibrant/cli.hpp"
#include "fibrant/lagrange.hpp"
#include "fibrant/monodromy.hpp"

#include "CLI11.hpp"

#include <algorithm>
#include <sstream>

namespace fibrant::cli {

namespace {

// Rejected input: exit code 2.
class InputError : public Error {
public:
    using Error::Error;
};

using poly::Rational;

Rational rational_arg(const std::string& name, const std::string& text) {
    try {
        return poly::parse_rational(text);
    } catch (const poly::ParseError& e) {
        throw InputError(name + ": " + e.what());
    }
}

poly::Order order_arg(const std::string& text) {
    if (text == "inf") return poly::Order::infinity();
    try {
        std::size_t used = 0;
        int v = std::stoi(text, &used);
        if (used == text.size() && v >= 0) return v;
    } catch (const std::exception&) {
    }
    throw InputError("order '" + text + "' is neither a non-negative integer nor 'inf'");
}

json order_json(const poly::Order& o) {
    if (o.is_infinite()) return "inf";
    return o.value();
}

json triple_json(const wnf::OrderTriple& t) { return {order_json(t.L), order_json(t.K), order_json(t.N)}; }

json chart_json(const blowup::LocalModel& m) {
    return {{"coordinates", {m.x, m.y}},
            {"chart_path", m.chart_path},
            {"a", poly::to_string(m.a)},
            {"b", poly::to_string(m.b)},
            {"delta", poly::to_string(m.delta)}};
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

std::string cmd_analyze(const std::string& alpha_text, const std::string& format) {
    auto report = miranda::analyze_lagrange_family(rational_arg("--alpha", alpha_text));
    json doc = report_to_json(report);
    auto problems = validate(doc, report_schema());
    if (!problems.empty()) throw Error("report violates its schema: " + problems.front());
    return format == "md" ? report_to_markdown(report) : dump(doc);
}

std::string cmd_classify_triple(const std::string& l, const std::string& k, const std::string& n) {
    wnf::OrderTriple t{order_arg(l), order_arg(k), order_arg(n)};
    wnf::OrderTriple reduced = wnf::reduce_triple_mod(t);
    auto type = wnf::kodaira_classify(reduced);
    return dump({{"triple", triple_json(t)},
                 {"reduced", triple_json(reduced)},
                 {"kodaira", type.label()},
                 {"components", type.component_count()},
                 {"monodromy", wnf::kodaira_monodromy(type).str()}});
}

std::string cmd_collide(const std::string& t1, const std::string& t2) {
    return dump(fiber_to_json(miranda::collide(wnf::kodaira_from_label(t1), wnf::kodaira_from_label(t2))));
}

std::string cmd_blowup_demo(const std::string& which, const std::string& alpha_text) {
    blowup::BaseModification mod;
    std::string center;
    if (which == "cusp") {
        center = "p";
        auto m = blowup::LocalModel::make("s1", "s2", poly::MultiPoly::var("s1"), poly::MultiPoly::var("s2"));
        m.curves.push_back({"Q~", m.delta});
        std::map<std::string, wnf::KodairaType> types{{"Q~", wnf::KodairaType{wnf::KodairaFamily::In, 1}}};
        mod.centers.push_back({center, "a = b = 0", "cusp of Q~"});
        blowup::regularize_local(m, center, types, mod, blowup::default_budget());
    } else {
        center = which == "p010" ? "(0:1:0)" : "(0:0:1)";
        Rational alpha = rational_arg("--alpha", alpha_text);
        wnf::check_lagrange_genericity(alpha);
        blowup::RegularizeOptions options;
        options.component_names = {{"A0", "L"}, {"R1", "Q"}};
        options.budget = blowup::default_budget();
        mod = blowup::regularize(lagrange::build_global_sections(alpha), options);
    }
    json events = json::array(), divisors = json::array(), collisions = json::array();
    const blowup::BlowUpEvent* last = nullptr;
    for (auto& e : mod.events) {
        if (e.center != center) continue;
        events.push_back({{"exceptional", e.exceptional},
                          {"blown_up_chart", e.chart},
                          {"point", e.point},
                          {"chart_a", chart_json(e.chart_a)},
                          {"chart_b", chart_json(e.chart_b)}});
        last = &e;
    }
    for (auto& d : mod.divisors)
        if (d.origin == "exceptional@" + center)
            divisors.push_back({{"name", d.name}, {"triple", triple_json(d.triple)}, {"kodaira", d.type.label()}});
    for (auto& c : mod.collisions)
        if (c.center == center) collisions.push_back(collision_to_json(c));
    json out{{"demo", which}, {"center", center}, {"events", events}, {"divisors", divisors}, {"collisions", collisions}};
    if (last) out["final_charts"] = {poly::to_string(last->chart_a.delta), poly::to_string(last->chart_b.delta)};
    return dump(out);
}

std::string cmd_bracket_check(const std::string& m_text) {
    Rational m = rational_arg("--m", m_text);
    if (m + 1 == 0) throw InputError("1 + m must be nonzero");
    auto hs = lagrange::first_integrals(m).all();
    auto field = lagrange::euler_poisson_field(m);
    json brackets = json::array(), conservation = json::array();
    bool all_zero = true;
    for (int i = 0; i < 4; ++i) {
        for (int j = i + 1; j < 4; ++j) {
            auto b = lagrange::lie_poisson_bracket(hs[i], hs[j]);
            all_zero = all_zero && b.is_zero();
            brackets.push_back({{"pair", "H" + std::to_string(i + 1) + ",H" + std::to_string(j + 1)},
                                {"bracket", poly::to_string(b)}});
        }
        auto dh = lagrange::directional_derivative(hs[i], field);
        all_zero = all_zero && dh.is_zero();
        conservation.push_back({{"integral", "H" + std::to_string(i + 1)}, {"derivative", poly::to_string(dh)}});
    }
    json integrals = json::array();
    for (auto& h : hs) integrals.push_back(poly::to_string(h));
    return dump({{"m", poly::to_string(m)},
                 {"integrals", integrals},
                 {"brackets", brackets},
                 {"conservation", conservation},
                 {"all_zero", all_zero}});
}

json complex_json(const lagrange::Complex& z) { return {z.real(), z.imag()}; }

std::string cmd_sample_fiber(const std::string& h3, const std::string& h4, const std::string& a, const std::string& m,
                             int n, std::uint64_t seed) {
    if (n < 1) throw InputError("-n must be positive");
    lagrange::LevelSet level{rational_arg("--h3", h3), rational_arg("--h4", h4),
                             {rational_arg("--m", m), rational_arg("--a", a)}};
    if (level.top.m + 1 == 0) throw InputError("1 + m must be nonzero");
    std::mt19937_64 rng(seed);
    json points = json::array();
    double worst_cubic = 0, worst_wnf = 0;
    for (int i = 0; i < n; ++i) {
        auto p = lagrange::sample_fiber_point(level, rng);
        double rc = std::abs(lagrange::quotient_cubic_residual(p, level));
        double rw = std::abs(lagrange::weierstrass_residual(p, level));
        worst_cubic = std::max(worst_cubic, rc);
        worst_wnf = std::max(worst_wnf, rw);
        json g = json::array(), w = json::array();
        for (int k = 0; k < 3; ++k) {
            g.push_back(complex_json(p.gamma[k]));
            w.push_back(complex_json(p.omega[k]));
        }
        auto [x, y] = lagrange::quotient_map(p);
        points.push_back({{"gamma", g}, {"omega", w}, {"quotient", {complex_json(x), complex_json(y)}},
                          {"cubic_residual", rc}, {"weierstrass_residual", rw}});
    }
    auto [a1, a2] = lagrange::tau_transform(level.h3, level.h4, level.top.m);
    auto [g2, g3] = lagrange::g2_g3(a1, a2, level.top.alpha());
    return dump({{"seed", seed},
                 {"a1", poly::to_string(a1)},
                 {"a2", poly::to_string(a2)},
                 {"g2", poly::to_string(g2)},
                 {"g3", poly::to_string(g3)},
                 {"points", points},
                 {"max_cubic_residual", worst_cubic},
                 {"max_weierstrass_residual", worst_wnf}});
}

std::string cmd_monodromy(long bound, const std::string& alpha_text) {
    if (bound < 1) throw InputError("--bound must be positive");
    auto cert = monodromy::certify_monodromy(bound);
    auto list = [](const std::vector<monodromy::SL2ZMatrix>& v) {
        json out = json::array();
        for (auto& m : v) out.push_back(m.str());
        return out;
    };
    const monodromy::SL2ZMatrix t = monodromy::SL2ZMatrix::T(), b(1, 0, -1, 1);
    auto report = miranda::analyze_lagrange_family(rational_arg("--alpha", alpha_text));
    auto p = monodromy::build_presentation(report);
    json rel = json::array();
    for (auto& r : p.relations) rel.push_back(r.text());
    json assignment = json::object();
    for (auto& g : p.generators) assignment[g] = p.assignment.at(g).str();
    return dump({{"bound", bound},
                 {"node_solutions", list(cert.node_solutions)},
                 {"cusp_solutions", list(cert.cusp_solutions)},
                 {"normal_forms", list(cert.normal_forms)},
                 {"braid_check", t * b * t == b * t * b},
                 {"presentation", {{"generators", p.generators}, {"relations", rel}, {"assignment", assignment},
                                   {"satisfied", p.assignment_satisfies(bound)}}}});
}

}  // namespace

CommandResult run(const std::vector<std::string>& args) {
    CommandResult result;
    CLI::App app{"Singular fibers of elliptic fibrations over the projective plane", "fibrant"};
    app.set_version_flag("--version", kVersion);
    app.require_subcommand(1);

    std::string alpha = "1", format = "json";
    auto* analyze = app.add_subcommand("analyze", "classify the singular fibers of the Lagrange-top family");
    analyze->add_option("--alpha", alpha, "exact rational parameter")->required();
    analyze->add_option("--format", format)->check(CLI::IsMember({"json", "md"}));

    std::string l, k, n;
    auto* classify = app.add_subcommand("classify-triple", "Kodaira type of an order triple (L, K, N)");
    classify->add_option("L", l)->required();
    classify->add_option("K", k)->required();
    classify->add_option("N", n)->required();

    std::string t1, t2;
    auto* collide = app.add_subcommand("collide", "fiber over a transversal collision of two types");
    collide->add_option("T1", t1)->required();
    collide->add_option("T2", t2)->required();

    std::string demo;
    std::string demo_alpha = "1";
    auto* blowup_demo = app.add_subcommand("blowup-demo", "charts of a blow-up schedule");
    blowup_demo->add_option("which", demo)->required()->check(CLI::IsMember({"cusp", "p010", "p001"}));
    blowup_demo->add_option("--alpha", demo_alpha);

    std::string m = "1/2";
    auto* bracket = app.add_subcommand("bracket-check", "involution and conservation of the first integrals");
    bracket->add_option("--m", m);

    std::string h3, h4, a_cas, sm = "1/2";
    int count = 10;
    std::uint64_t seed = 0;
    auto* sample = app.add_subcommand("sample-fiber", "complex points on a level set and their quotient images");
    sample->add_option("--h3", h3)->required();
    sample->add_option("--h4", h4)->required();
    sample->add_option("--a", a_cas)->required();
    sample->add_option("--m", sm);
    sample->add_option("-n", count);
    sample->add_option("--seed", seed);

    long bound = 25;
    std::string mono_alpha = "1";
    auto* mono = app.add_subcommand("monodromy", "local monodromy relations in SL(2,Z)");
    mono->add_option("--bound", bound);
    mono->add_option("--alpha", mono_alpha);

    std::ostringstream out, err;
    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
        if (*analyze)
            result.out = cmd_analyze(alpha, format);
        else if (*classify)
            result.out = cmd_classify_triple(l, k, n);
        else if (*collide)
            result.out = cmd_collide(t1, t2);
        else if (*blowup_demo)
            result.out = cmd_blowup_demo(demo, demo_alpha);
        else if (*bracket)
            result.out = cmd_bracket_check(m);
        else if (*sample)
            result.out = cmd_sample_fiber(h3, h4, a_cas, sm, count, seed);
        else if (*mono)
            result.out = cmd_monodromy(bound, mono_alpha);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e, out, err);
        result.out = out.str();
        result.err = err.str();
        result.exit_code = code == 0 ? 0 : 2;
    } catch (const InputError& e) {
        result.err = std::string("error: ") + e.what() + "\n";
        result.exit_code = 2;
    } catch (const wnf::GenericityError& e) {
        result.err = std::string("error: ") + e.what() + "\n";
        result.exit_code = 2;
    } catch (const miranda::NotOnList& e) {
        result.err = std::string("error: ") + e.what() + "\n";
        result.exit_code = 2;
    } catch (const wnf::NotInTable& e) {
        result.err = std::string("error: ") + e.what() + "\n";
        result.exit_code = 2;
    } catch (const wnf::NeedsNormalization& e) {
        result.err = std::string("error: ") + e.what() + "\n";
        result.exit_code = 2;
    } catch (const std::exception& e) {
        result.err = std::string("internal error: ") + e.what() + "\n";
        result.exit_code = 1;
    }
    return result;
}

}  // namespace fibrant::cli
