#include "fibrant/cli.hpp"
#include "fibrant/monodromy.hpp"

#include <sstream>

namespace fibrant::cli {

namespace {

json order_json(const poly::Order& o) {
    if (o.is_infinite()) return "inf";
    return o.value();
}

json graph_json(const wnf::DualGraph& g) {
    json edges = json::array();
    for (auto& [i, j] : g.edges) edges.push_back({i, j});
    return {{"multiplicities", g.multiplicities}, {"edges", edges}, {"shape", g.shape}};
}

json presentation_json(const monodromy::Presentation& p) {
    json rel = json::array();
    for (auto& r : p.relations)
        rel.push_back({{"kind", r.kind == monodromy::Relation::Kind::Node ? "node" : "cusp"},
                       {"generators", {r.first, r.second}},
                       {"text", r.text()}});
    json assignment = json::object();
    for (auto& g : p.generators) assignment[g] = p.assignment.at(g).str();
    return {{"generators", p.generators}, {"relations", rel}, {"assignment", assignment},
            {"satisfied", p.assignment_satisfies()}};
}

}  // namespace

json fiber_to_json(const miranda::MirandaFiber& f) {
    return {{"colliding_types", {f.first.label(), f.second.label()}},
            {"row", f.row},
            {"label", f.label},
            {"kodaira_label", f.kodaira_label},
            {"dual_graph", graph_json(f.graph)},
            {"contracted", f.contracted}};
}

json collision_to_json(const blowup::CollisionRecord& c) {
    return {{"divisor_pair", {c.first, c.second}},
            {"point", {{"center", c.center}, {"description", c.point}}},
            {"dual_graph", graph_json(c.fiber.graph)},
            {"label", c.fiber.label},
            {"kodaira_label", c.fiber.kodaira_label},
            {"row", c.fiber.row},
            {"colliding_types", {c.fiber.first.label(), c.fiber.second.label()}},
            {"contracted", c.fiber.contracted}};
}

json report_to_json(const miranda::ClassificationReport& r) {
    json doc;
    doc["schema_version"] = "1";
    doc["alpha"] = r.alpha ? json(poly::to_string(*r.alpha)) : json(nullptr);
    doc["quintic"] = r.quintic;
    doc["blow_ups"] = r.blow_ups;
    doc["nodes"] = r.nodes;
    doc["cusps"] = r.cusps;

    json centers = json::array();
    for (auto& c : r.centers)
        centers.push_back({{"name", c.name}, {"description", c.description}, {"kind", c.kind}, {"blow_ups", c.blow_ups}});
    doc["centers"] = centers;

    json divisors = json::array();
    for (auto& d : r.divisors)
        divisors.push_back({{"name", d.name},
                            {"origin", d.origin},
                            {"triple", {order_json(d.triple.L), order_json(d.triple.K), order_json(d.triple.N)}},
                            {"kodaira", d.type.label()},
                            {"chart", d.chart}});
    doc["divisors"] = divisors;

    json collisions = json::array();
    for (auto& c : r.collisions) collisions.push_back(collision_to_json(c));
    doc["collisions"] = collisions;

    json sing = json::array();
    for (auto& s : r.total_space_singularities) {
        json e;
        const bool curve = s.kind == wnf::TotalSpaceSingularity::Kind::Curve;
        e["kind"] = curve ? "curve" : "point";
        e["criterion"] = s.criterion;
        e["fiber"] = {poly::to_string(s.fiber[0]), poly::to_string(s.fiber[1]), poly::to_string(s.fiber[2])};
        if (curve)
            e["curve"] = poly::to_string(s.curve);
        else
            e["base"] = {poly::to_string(s.base[0]), poly::to_string(s.base[1]), poly::to_string(s.base[2])};
        sing.push_back(e);
    }
    doc["total_space_singularities"] = sing;

    if (r.quintic_degree > 0) doc["monodromy"] = presentation_json(monodromy::build_presentation(r));
    doc["notes"] = r.notes;
    return doc;
}

std::string report_to_markdown(const miranda::ClassificationReport& r) {
    std::ostringstream md;
    md << "# Singular fibers";
    if (r.alpha) md << " for alpha = " << poly::to_string(*r.alpha);
    md << "\n\nResidual discriminant component: `" << r.quintic << "` (" << r.nodes << " nodes, " << r.cusps
       << " cusps).\n\n## Divisors\n\n| divisor | origin | (L,K,N) | fiber |\n|---|---|---|---|\n";
    for (auto& d : r.divisors)
        md << "| " << d.name << " | " << d.origin << " | " << d.triple.str() << " | " << d.type.label() << " |\n";
    md << "\n## Collisions\n\n| divisors | center | row | fiber | graph multiplicities |\n|---|---|---|---|---|\n";
    for (auto& c : r.collisions) {
        md << "| " << c.first << " + " << c.second << " | " << c.center << " | " << c.fiber.row << " | "
           << c.fiber.label << " |";
        for (std::size_t i = 0; i < c.fiber.graph.multiplicities.size(); ++i)
            md << (i ? "," : " ") << c.fiber.graph.multiplicities[i];
        md << " |\n";
    }
    md << "\n## Blow-up centers\n\n| center | kind | blow-ups |\n|---|---|---|\n";
    for (auto& c : r.centers) md << "| " << c.name << " | " << c.kind << " | " << c.blow_ups << " |\n";
    md << "\n## Singular points of the total space\n\n";
    for (auto& s : r.total_space_singularities) {
        if (s.kind == wnf::TotalSpaceSingularity::Kind::Curve)
            md << "- curve over `" << poly::to_string(s.curve) << " = 0`";
        else
            md << "- point over (" << poly::to_string(s.base[0]) << ":" << poly::to_string(s.base[1]) << ":"
               << poly::to_string(s.base[2]) << ")";
        md << ", fiber point (" << poly::to_string(s.fiber[0]) << " : " << poly::to_string(s.fiber[1]) << " : "
           << poly::to_string(s.fiber[2]) << "), " << s.criterion << "\n";
    }
    if (!r.notes.empty()) {
        md << "\n## Notes\n\n";
        for (auto& n : r.notes) md << "- " << n << "\n";
    }
    return md.str();
}

}  // namespace fibrant::cli
