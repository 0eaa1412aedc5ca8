#include "fibrant/blowup.hpp"
#include "fibrant/planecurve.hpp"

#include <algorithm>
#include <cstdlib>
#include <set>

namespace fibrant::blowup {

namespace {

using Point3 = std::array<Rational, 3>;

MultiPoly V(const std::string& name) { return MultiPoly::var(name); }

// Derivative that treats an absent variable as a constant direction.
MultiPoly d(const MultiPoly& f, const std::string& v) {
    return f.has_variable(v) ? poly::partial_derivative(f, v) : MultiPoly(0);
}

bool divides(const MultiPoly& delta, const MultiPoly& c) {
    return poly::extract_power(delta, c).k > poly::Order(0);
}

std::string point_text(const std::string& path, const std::string& x, const std::string& y,
                       const Rational& p, const Rational& q) {
    return "chart " + (path.empty() ? std::string("base") : path) + ": (" + x + "," + y + ")=(" +
           poly::to_string(p) + "," + poly::to_string(q) + ")";
}

std::string projective_text(const Point3& p) {
    return "(" + poly::to_string(p[0]) + ":" + poly::to_string(p[1]) + ":" + poly::to_string(p[2]) + ")";
}

struct Branch {
    std::string name;
    MultiPoly equation;
};

struct Driver {
    std::string center;
    std::map<std::string, KodairaType>& types;
    BaseModification& out;
    int budget;
    int count = 0;

    const KodairaType& type_of(const std::string& name) {
        auto it = types.find(name);
        if (it == types.end()) throw Error("no fiber type registered for divisor '" + name + "'");
        return it->second;
    }

    void record(const std::string& first, const std::string& second, const std::string& point) {
        out.collisions.push_back({first, second, center, point, miranda::collide(type_of(first), type_of(second))});
    }

    bool is_node(const std::vector<Branch>& br, const LocalModel& m) {
        if (br.size() == 1)
            return curve::classify_double_point(br[0].equation, m.x, m.y, {0, 0}).kind == curve::PointKind::Node;
        auto grad = [&](const MultiPoly& f) {
            return std::array<Rational, 2>{d(f, m.x).constant_term(),
                                           d(f, m.y).constant_term()};
        };
        auto g1 = grad(br[0].equation), g2 = grad(br[1].equation);
        return g1[0] * g2[1] - g1[1] * g2[0] != 0;
    }

    void process(const LocalModel& m, const std::string& where) {
        std::vector<Branch> br;
        MultiPoly rest = m.delta;
        auto take = [&](const std::string& name, const MultiPoly& eq) {
            auto split = poly::extract_power(rest, eq);
            if (split.k == poly::Order(0)) return;
            br.push_back({name, eq});
            rest = split.remainder;
        };
        if (!m.x_label.empty()) take(m.x_label, V(m.x));
        if (!m.y_label.empty()) take(m.y_label, V(m.y));
        for (auto& c : m.curves)
            if (c.equation.constant_term() == 0) take(c.name, c.equation);
        if (rest.constant_term() == 0)
            throw Unsupported("discriminant has an unregistered component through " + where);
        if (br.empty()) return;

        int mult = 0;
        for (auto& b : br) mult += curve::multiplicity_at(b.equation, m.x, m.y, {0, 0});
        if (mult == 1) return;
        if (mult == 2 && is_node(br, m)) {
            const std::string& second = br.size() == 2 ? br[1].name : br[0].name;
            try {
                record(br[0].name, second, where);
                return;
            } catch (const miranda::NotOnList&) {
            }
        }
        blow_up(m, where);
    }

    void blow_up(const LocalModel& m, const std::string& where) {
        if (++count > budget)
            throw BudgetExceeded("blow-up budget " + std::to_string(budget) + " exhausted at " + center + ", " +
                                 where + "; germ a = " + poly::to_string(m.a) + ", b = " + poly::to_string(m.b));
        const std::string e = "E" + std::to_string(count) + "@" + center;
        auto charts = blow_up_point(m, {0, 0});
        LocalModel A = pull_back_fibration(charts.chart_a), B = pull_back_fibration(charts.chart_b);
        A.x_label = e;
        B.y_label = e;
        OrderTriple ta = exceptional_order_triple(A), tb = exceptional_order_triple(B);
        if (!(ta == tb))
            throw Error("exceptional divisor " + e + " has triples " + ta.str() + " and " + tb.str() +
                        " in its two charts");
        KodairaType type = wnf::kodaira_classify(wnf::reduce_triple_mod(ta));
        types[e] = type;
        out.divisors.push_back({e, "exceptional@" + center, ta, type, A.chart_path});
        out.events.push_back({center, m.chart_path, e, where, A, B});

        const bool in_discriminant = ta.N > poly::Order(0);
        std::set<Rational> on_e;
        if (!A.y_label.empty() && divides(A.delta, V(A.y))) on_e.insert(0);
        std::vector<std::pair<std::string, MultiPoly>> irrational;
        for (auto& c : A.curves) {
            MultiPoly r = poly::substitute(c.equation, {{A.x, MultiPoly(0)}});
            if (r.is_zero()) throw Error("curve " + c.name + " contains the exceptional divisor");
            if (r.is_constant() || !divides(A.delta, c.equation)) continue;
            r = r.drop_unused();
            for (auto& root : poly::rational_roots(r)) on_e.insert(root.value);
            MultiPoly irr = poly::strip_rational_roots(r);
            if (!irr.is_constant()) irrational.push_back({c.name, irr});
        }
        for (std::size_t i = 0; i < irrational.size(); ++i) {
            auto& [name, irr] = irrational[i];
            bool simple = poly::gcd(irr, d(irr, A.y)).is_constant();
            for (std::size_t j = 0; j < irrational.size(); ++j)
                if (j != i && !poly::gcd(irr, irrational[j].second).is_constant()) simple = false;
            if (!simple) throw Unsupported(name + " meets " + e + " non-transversally at irrational points");
            if (!in_discriminant) continue;
            try {
                record(e, name, "chart " + A.chart_path + ": " + A.x + "=0, " + A.y + " a root of " +
                                    poly::to_string(irr.monic()));
            } catch (const miranda::NotOnList&) {
                throw Unsupported("collision of " + e + " and " + name + " at irrational points is off the list");
            }
        }
        for (auto& v : on_e) process(A.translated(0, v), point_text(A.chart_path, A.x, A.y, 0, v));
        process(B, point_text(B.chart_path, B.x, B.y, 0, 0));
    }
};

bool is_line(const MultiPoly& c) { return c.total_degree() == 1 && c.size() == 1; }

}  // namespace

const DivisorRecord* BaseModification::divisor(const std::string& name) const {
    for (auto& d : divisors)
        if (d.name == name) return &d;
    return nullptr;
}

int default_budget() {
    if (const char* env = std::getenv("FIBRANT_BLOWUP_BUDGET")) {
        char* end = nullptr;
        long v = std::strtol(env, &end, 10);
        if (end != env && *end == '\0' && v > 0 && v < 1000) return static_cast<int>(v);
        throw Error(std::string("invalid FIBRANT_BLOWUP_BUDGET '") + env + "'");
    }
    return 12;
}

void regularize_local(const LocalModel& model, const std::string& center,
                      std::map<std::string, KodairaType>& types, BaseModification& out, int budget) {
    Driver d{center, types, out, budget};
    d.process(model, point_text(model.chart_path, model.x, model.y, 0, 0));
    for (auto& c : out.centers)
        if (c.name == center) c.blow_ups = d.count;
}

BaseModification regularize(const wnf::WeierstrassFibration& fib, const RegularizeOptions& options) {
    BaseModification out;
    std::map<std::string, KodairaType> types;
    const MultiPoly &a = fib.a(), &b = fib.b();

    struct Component {
        std::string name;
        MultiPoly equation;
    };
    std::vector<Component> comps;
    for (auto& c : wnf::discriminant_components(fib)) {
        auto it = options.component_names.find(c.name);
        std::string name = (it == options.component_names.end() ? c.name : it->second) + "~";
        OrderTriple t = wnf::order_triple_along(a, b, c.equation);
        KodairaType k = wnf::kodaira_classify(wnf::reduce_triple_mod(t));
        types[name] = k;
        out.divisors.push_back({name, is_line(c.equation) ? "line" : "residual", t, k, "P2"});
        comps.push_back({name, c.equation});
    }

    // Rational centers: singular points of residual components and pairwise intersections.
    std::map<Point3, std::vector<std::string>> centers;
    for (auto& c : comps) {
        if (is_line(c.equation)) continue;
        std::vector<MultiPoly> system{c.equation};
        for (auto& v : curve::kHomogeneousNames) system.push_back(d(c.equation, v));
        for (auto& p : wnf::projective_rational_zeros(system, {})) centers[p].push_back("singular point of " + c.name);
    }
    for (std::size_t i = 0; i < comps.size(); ++i)
        for (std::size_t j = i + 1; j < comps.size(); ++j) {
            for (auto& p : wnf::projective_rational_zeros({comps[i].equation, comps[j].equation}, {}))
                centers[p].push_back(comps[i].name + " meets " + comps[j].name);
            if (!is_line(comps[i].equation) && !is_line(comps[j].equation))
                out.notes.push_back("irrational intersections of " + comps[i].name + " and " + comps[j].name +
                                    " are not examined");
        }

    // Irrational singular points of a residual component are accepted when they are
    // the common zeros of (a, b) with (a, b) local coordinates there: the germ is then
    // exactly the model a = s1, b = s2 with discriminant s1^3 - 27 s2^2.
    struct Cluster {
        std::string component;
        std::string description;
        int count;
    };
    std::vector<Cluster> clusters;
    const auto u0 = curve::AffineChart::standard(0);
    for (auto& c : comps) {
        if (is_line(c.equation)) continue;
        MultiPoly r0 = u0.dehomogenize(c.equation);
        if (r0.is_constant()) continue;
        auto locus = curve::rational_singular_points(r0, u0);
        if (locus.clusters.empty()) continue;
        MultiPoly cluster_elim(1);
        for (auto& cl : locus.clusters) {
            if (cl.eliminant_variable != u0.y || cl.fixed_y)
                throw Unsupported("irrational singular points of " + c.name + " on a rational line");
            cluster_elim *= cl.eliminant;
        }
        MultiPoly a0 = u0.dehomogenize(a), b0 = u0.dehomogenize(b);
        if (a0.degree(u0.x) != 1 || !poly::coefficients_in(a0, u0.x)[1].is_constant())
            throw Unsupported("irrational singular points of " + c.name + " need a section linear in " + u0.x);
        MultiPoly res = poly::strip_rational_roots(poly::resultant(a0, b0, u0.x).drop_unused());
        if (res.is_constant() || res.monic() != cluster_elim.monic())
            throw Unsupported("irrational singular points of " + c.name + " are not the common zeros of a and b");
        if (!poly::gcd(res, d(res, u0.y)).is_constant())
            throw Unsupported("common zeros of a and b are not simple");
        // a0 = c w + rest with c constant: restrict to the curve a0 = 0 by solving for w.
        const auto lin = poly::coefficients_in(a0, u0.x);
        const std::map<std::string, MultiPoly> on_a0{{u0.x, -lin[0] / lin[1].constant_term()}};
        auto meets = [&](const MultiPoly& g) {
            return !poly::gcd(res, poly::substitute(g, on_a0).drop_unused()).is_constant();
        };
        MultiPoly jac = d(a0, u0.x) * d(b0, u0.y) -
                        d(a0, u0.y) * d(b0, u0.x);
        if (meets(jac))
            throw Unsupported("a and b are not local coordinates at the singular points of " + c.name);
        for (auto& other : comps) {
            if (other.name == c.name) continue;
            MultiPoly o0 = u0.dehomogenize(other.equation);
            if (!o0.is_constant() && meets(o0))
                throw Unsupported(other.name + " passes through a singular point of " + c.name);
        }
        clusters.push_back({c.name, "a = b = 0 with " + u0.y + " a root of " + poly::to_string(res.monic()),
                            res.total_degree()});
    }

    int cusp_index = 0;
    for (auto& cl : clusters)
        for (int i = 0; i < cl.count; ++i) {
            std::string name = "p" + std::to_string(++cusp_index);
            out.centers.push_back({name, cl.description, "cusp of " + cl.component});
            LocalModel m = LocalModel::make("s1", "s2", V("s1"), V("s2"));
            m.curves.push_back({cl.component, m.delta});
            regularize_local(m, name, types, out, options.budget);
        }

    // Nodes last; everything else in point order.
    std::vector<std::pair<Point3, std::vector<std::string>>> ordered(centers.begin(), centers.end());
    auto is_plain_node = [&](const Point3& p) {
        const int i = p[0] != 0 ? 0 : (p[1] != 0 ? 1 : 2);
        auto chart = curve::AffineChart::standard(i);
        auto q = chart.from_projective(p);
        for (auto& c : comps) {
            MultiPoly loc = chart.dehomogenize(c.equation);
            if (poly::evaluate(loc, {{chart.x, q.first}, {chart.y, q.second}}) != 0) continue;
            if (is_line(c.equation)) return false;
            if (curve::multiplicity_at(loc, chart.x, chart.y, q) != 2) return false;
            return curve::classify_double_point(loc, chart.x, chart.y, q).kind == curve::PointKind::Node;
        }
        return false;
    };
    std::stable_partition(ordered.begin(), ordered.end(), [&](auto& e) { return !is_plain_node(e.first); });

    for (auto& [p, why] : ordered) {
        const int i = p[0] != 0 ? 0 : (p[1] != 0 ? 1 : 2);
        auto chart = curve::AffineChart::standard(i);
        auto q = chart.from_projective(p);
        LocalModel m = LocalModel::make(chart.x, chart.y, chart.dehomogenize(a), chart.dehomogenize(b));
        for (auto& c : comps) {
            MultiPoly loc = chart.dehomogenize(c.equation);
            if (loc.is_constant()) continue;
            if (loc == V(chart.x))
                m.x_label = c.name;
            else if (loc == V(chart.y))
                m.y_label = c.name;
            else
                m.curves.push_back({c.name, loc});
        }
        std::string kind;
        for (auto& w : why) kind += (kind.empty() ? "" : "; ") + w;
        std::string name = projective_text(p);
        out.centers.push_back({name, name, kind});
        regularize_local(m.translated(q.first, q.second), name, types, out, options.budget);
    }

    for (auto& d : out.divisors)
        if (d.type.family == wnf::KodairaFamily::I0)
            out.notes.push_back("fibers over generic points of " + d.name + " are smooth elliptic curves");
    return out;
}

}  // namespace fibrant::blowup
