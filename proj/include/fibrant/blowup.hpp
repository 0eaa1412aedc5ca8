#pragma once

#include "fibrant/miranda.hpp"
#include "fibrant/weierstrass.hpp"

#include <array>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace fibrant::blowup {

using poly::MultiPoly;
using poly::Rational;
using wnf::KodairaType;
using wnf::OrderTriple;

class BudgetExceeded : public Error {
public:
    using Error::Error;
};

class Unsupported : public Error {
public:
    using Error::Error;
};

struct NamedCurve {
    std::string name;
    MultiPoly equation;
};

struct ChartStep {
    enum class Kind { Translate, ChartA, ChartB };
    Kind kind = Kind::Translate;
    Rational c1, c2;  // translation offsets
    std::string from_x, from_y, to_x, to_y;
};

// Germs of the sections in one chart over the (partially) blown-up base.
struct LocalModel {
    std::string x, y;
    MultiPoly a, b, delta;
    // Divisors cut out by x = 0 and y = 0; empty when the axis is not a registered divisor.
    std::string x_label, y_label;
    std::vector<NamedCurve> curves;  // remaining divisor components
    std::string chart_path;          // "A"/"B" per blow-up
    std::optional<std::string> exceptional;  // coordinate of the newest exceptional divisor
    std::string base_x, base_y;
    std::vector<ChartStep> steps;
    std::vector<int> t_values;

    static LocalModel make(std::string x, std::string y, MultiPoly a, MultiPoly b);
    // Moves (c1, c2) to the origin.
    LocalModel translated(const Rational& c1, const Rational& c2) const;
    // Base-chart coordinates of a point given in this chart, and the inverse
    // (defined off the exceptional set).
    std::array<Rational, 2> to_base(const std::array<Rational, 2>& p) const;
    std::array<Rational, 2> from_base(const std::array<Rational, 2>& p) const;
    // Composite substitution expressing the base coordinates in this chart.
    std::map<std::string, MultiPoly> history() const;
};

struct BlowUpCharts {
    LocalModel chart_a, chart_b;
};

// Raw pull-back through the two standard charts of the blow-up at `center`.
// chartA: (x, y) -> (c1 + u, c2 + u v), exceptional u = 0.
// chartB: (x, y) -> (c1 + u v, c2 + v), exceptional v = 0.
BlowUpCharts blow_up_point(const LocalModel& model, const std::array<Rational, 2>& center);

// Condition (C) along the exceptional coordinate; recomputes the discriminant.
LocalModel pull_back_fibration(const LocalModel& model);

OrderTriple exceptional_order_triple(const LocalModel& model);

struct DivisorRecord {
    std::string name;
    std::string origin;  // "line", "residual", or "exceptional@<center>"
    OrderTriple triple;
    KodairaType type;
    std::string chart;  // where the triple was computed
};

struct CollisionRecord {
    std::string first, second;
    std::string center;
    std::string point;  // description in the chart where the node was found
    miranda::MirandaFiber fiber;
};

struct BlowUpEvent {
    std::string center;
    std::string chart;      // chart path of the blown-up model
    std::string exceptional;
    std::string point;      // center in that chart
    // Both charts after condition (C) normalization along the exceptional coordinate.
    LocalModel chart_a, chart_b;
};

struct CenterRecord {
    std::string name;
    std::string description;  // projective point, or eliminant for irrational clusters
    std::string kind;         // node, cusp, tangency, ...
    int blow_ups = 0;
};

struct BaseModification {
    std::vector<BlowUpEvent> events;
    std::vector<DivisorRecord> divisors;
    std::vector<CollisionRecord> collisions;
    std::vector<CenterRecord> centers;
    std::vector<std::string> notes;

    const DivisorRecord* divisor(const std::string& name) const;
};

struct RegularizeOptions {
    // Renames discriminant components ("A0", "R1", ...) before the analysis.
    std::map<std::string, std::string> component_names;
    int budget = 12;  // blow-ups per center
};

// Budget from FIBRANT_BLOWUP_BUDGET, default 12.
int default_budget();

BaseModification regularize(const wnf::WeierstrassFibration& fib, const RegularizeOptions& options = {});

// Blows up a single local model until the reduced discriminant has only nodes
// on Miranda's list. `types` maps divisor names already present in the model to
// their generic fiber types; new exceptional divisors are named "E<k>@<center>".
void regularize_local(const LocalModel& model, const std::string& center,
                      std::map<std::string, KodairaType>& types, BaseModification& out, int budget);

}  // namespace fibrant::blowup
