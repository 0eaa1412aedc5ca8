#include "fibrant/monodromy.hpp"

#include <algorithm>
#include <set>

namespace fibrant::monodromy {

std::string Relation::text() const {
    if (kind == Kind::Node) return first + " " + second + " = " + second + " " + first;
    return first + " " + second + " " + first + " = " + second + " " + first + " " + second;
}

int Presentation::count(Relation::Kind k) const {
    return static_cast<int>(std::count_if(relations.begin(), relations.end(), [&](auto& r) { return r.kind == k; }));
}

void Presentation::validate() const {
    std::set<std::string> names(generators.begin(), generators.end());
    for (auto& r : relations)
        if (!names.count(r.first) || !names.count(r.second))
            throw Error("relation '" + r.text() + "' uses an unknown generator");
}

bool Presentation::assignment_satisfies(long bound) const {
    for (auto& g : generators) {
        auto it = assignment.find(g);
        if (it == assignment.end() || !is_conjugate_to_T(it->second, bound)) return false;
    }
    for (auto& r : relations) {
        const SL2ZMatrix &x = assignment.at(r.first), &y = assignment.at(r.second);
        bool ok = r.kind == Relation::Kind::Node ? node_relation_holds(x, y) : cusp_relation_holds(x, y);
        if (!ok) return false;
    }
    return true;
}

Presentation build_presentation(const miranda::ClassificationReport& report) {
    const int d = report.quintic_degree;
    if (d < 1) throw Error("report has no residual discriminant component");
    if (report.cusps > d - 1 || report.nodes > std::max(d - 2, 0))
        throw Error("report has more singular points than this presentation layout supports");
    Presentation p;
    p.base_point = "generic point of a line avoiding the singular points";
    const SL2ZMatrix b(1, 0, -1, 1);
    for (int i = 1; i <= d; ++i) {
        std::string g = "g" + std::to_string(i);
        p.generators.push_back(g);
        p.assignment.emplace(g, i % 2 ? SL2ZMatrix::T() : b);
    }
    for (int i = 0; i < report.nodes; ++i)
        p.relations.push_back({Relation::Kind::Node, p.generators[i], p.generators[i + 2]});
    for (int i = 0; i < report.cusps; ++i)
        p.relations.push_back({Relation::Kind::Cusp, p.generators[i], p.generators[i + 1]});
    p.validate();
    return p;
}

NormalFormCertificate certify_monodromy(long bound) {
    NormalFormCertificate c;
    c.bound = bound;
    const SL2ZMatrix t = SL2ZMatrix::T();
    c.node_solutions = solve_node_relation(t, bound);
    c.cusp_solutions = solve_cusp_relation(t, bound, true);
    std::set<SL2ZMatrix> forms;
    for (auto& b : c.cusp_solutions) forms.insert(normalize_pair(t, b));
    c.normal_forms.assign(forms.begin(), forms.end());
    return c;
}

}  // namespace fibrant::monodromy
