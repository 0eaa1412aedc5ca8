#include "fibrant/lagrange.hpp"
#include "fibrant/report.hpp"

#include <algorithm>
#include <map>

namespace fibrant::miranda {

namespace {

bool starts_with(const std::string& s, const std::string& prefix) { return s.rfind(prefix, 0) == 0; }

}  // namespace

std::vector<std::string> ClassificationReport::inventory() const {
    std::map<std::string, std::string> kind_of;
    for (auto& c : centers) {
        if (starts_with(c.kind, "cusp of"))
            kind_of[c.name] = "cusp";
        else if (starts_with(c.kind, "singular point of") && c.blow_ups == 0)
            kind_of[c.name] = "node";
        else
            kind_of[c.name] = c.name;
    }
    auto generic = [&](const std::string& name) {
        auto at = name.find('@');
        if (at == std::string::npos) return name;
        auto it = kind_of.find(name.substr(at + 1));
        return name.substr(0, at + 1) + (it == kind_of.end() ? name.substr(at + 1) : it->second);
    };
    std::vector<std::string> out;
    for (auto& d : divisors) out.push_back("divisor " + generic(d.name) + " " + d.triple.str() + " " + d.type.label());
    for (auto& c : collisions) {
        auto it = kind_of.find(c.center);
        out.push_back("collision " + generic(c.first) + "+" + generic(c.second) + " at " +
                      (it == kind_of.end() ? c.center : it->second) + " " + c.fiber.row + " " + c.fiber.label);
    }
    for (auto& s : total_space_singularities)
        out.push_back(std::string("total-space ") + (s.kind == wnf::TotalSpaceSingularity::Kind::Curve ? "curve" : "point") +
                      " " + s.criterion);
    std::sort(out.begin(), out.end());
    return out;
}

ClassificationReport analyze_fibration(const wnf::WeierstrassFibration& fib,
                                       const blowup::RegularizeOptions& options) {
    ClassificationReport r;
    r.alpha = fib.params().alpha;
    for (auto& c : wnf::discriminant_components(fib))
        if (starts_with(c.name, "R")) {
            r.quintic += (r.quintic.empty() ? "" : "; ") + poly::to_string(c.equation);
            r.quintic_degree += c.equation.total_degree();
        }
    auto mod = blowup::regularize(fib, options);
    r.divisors = std::move(mod.divisors);
    r.collisions = std::move(mod.collisions);
    r.centers = std::move(mod.centers);
    r.notes = std::move(mod.notes);
    r.blow_ups = static_cast<int>(mod.events.size());
    for (auto& c : r.centers) {
        if (starts_with(c.kind, "cusp of")) ++r.cusps;
        if (starts_with(c.kind, "singular point of") && c.blow_ups == 0) ++r.nodes;
    }
    r.total_space_singularities = wnf::total_space_singularities(fib);
    return r;
}

ClassificationReport analyze_lagrange_family(const Rational& alpha, int budget) {
    wnf::check_lagrange_genericity(alpha);
    blowup::RegularizeOptions options;
    options.component_names = {{"A0", "L"}, {"R1", "Q"}};
    options.budget = budget;
    return analyze_fibration(lagrange::build_global_sections(alpha), options);
}

}  // namespace fibrant::miranda
