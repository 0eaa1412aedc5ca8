#include "fibrant/blowup.hpp"

namespace fibrant::blowup {

namespace {

MultiPoly V(const std::string& name) { return MultiPoly::var(name); }

MultiPoly discriminant_of(const MultiPoly& a, const MultiPoly& b) { return pow(a, 3) - 27 * pow(b, 2); }

}  // namespace

LocalModel LocalModel::make(std::string x, std::string y, MultiPoly a, MultiPoly b) {
    LocalModel m;
    m.x = x;
    m.y = y;
    m.base_x = std::move(x);
    m.base_y = std::move(y);
    m.delta = discriminant_of(a, b);
    m.a = std::move(a);
    m.b = std::move(b);
    return m;
}

LocalModel LocalModel::translated(const Rational& c1, const Rational& c2) const {
    if (c1 == 0 && c2 == 0) return *this;
    LocalModel m = *this;
    std::map<std::string, MultiPoly> shift{{x, V(x) + MultiPoly(c1)}, {y, V(y) + MultiPoly(c2)}};
    auto sub = [&](const MultiPoly& p) { return poly::substitute(p, shift); };
    m.a = sub(a);
    m.b = sub(b);
    m.delta = sub(delta);
    for (auto& c : m.curves) c.equation = sub(c.equation);
    // An axis that no longer passes through the origin becomes an ordinary curve.
    if (c1 != 0 && !x_label.empty()) {
        m.curves.push_back({x_label, V(x) + MultiPoly(c1)});
        m.x_label.clear();
    }
    if (c2 != 0 && !y_label.empty()) {
        m.curves.push_back({y_label, V(y) + MultiPoly(c2)});
        m.y_label.clear();
    }
    if (c1 != 0 && exceptional == x) m.exceptional.reset();
    if (c2 != 0 && exceptional == y) m.exceptional.reset();
    m.steps.push_back({ChartStep::Kind::Translate, c1, c2, x, y, x, y});
    return m;
}

std::array<Rational, 2> LocalModel::to_base(const std::array<Rational, 2>& p) const {
    Rational u = p[0], v = p[1];
    for (auto it = steps.rbegin(); it != steps.rend(); ++it) {
        switch (it->kind) {
            case ChartStep::Kind::Translate:
                u += it->c1;
                v += it->c2;
                break;
            case ChartStep::Kind::ChartA: v = u * v; break;
            case ChartStep::Kind::ChartB: u = u * v; break;
        }
    }
    return {u, v};
}

std::array<Rational, 2> LocalModel::from_base(const std::array<Rational, 2>& p) const {
    Rational u = p[0], v = p[1];
    for (auto& s : steps) {
        switch (s.kind) {
            case ChartStep::Kind::Translate:
                u -= s.c1;
                v -= s.c2;
                break;
            case ChartStep::Kind::ChartA:
                if (u == 0) throw Error("point lies on the exceptional divisor");
                v /= u;
                break;
            case ChartStep::Kind::ChartB:
                if (v == 0) throw Error("point lies on the exceptional divisor");
                u /= v;
                break;
        }
    }
    return {u, v};
}

std::map<std::string, MultiPoly> LocalModel::history() const {
    std::map<std::string, MultiPoly> h{{base_x, V(base_x)}, {base_y, V(base_y)}};
    for (auto& s : steps) {
        std::map<std::string, MultiPoly> step;
        switch (s.kind) {
            case ChartStep::Kind::Translate:
                step = {{s.from_x, V(s.to_x) + MultiPoly(s.c1)}, {s.from_y, V(s.to_y) + MultiPoly(s.c2)}};
                break;
            case ChartStep::Kind::ChartA:
                step = {{s.from_x, V(s.to_x)}, {s.from_y, V(s.to_x) * V(s.to_y)}};
                break;
            case ChartStep::Kind::ChartB:
                step = {{s.from_x, V(s.to_x) * V(s.to_y)}, {s.from_y, V(s.to_y)}};
                break;
        }
        for (auto& [k, p] : h) p = poly::substitute(p, step);
    }
    return h;
}

BlowUpCharts blow_up_point(const LocalModel& model, const std::array<Rational, 2>& center) {
    LocalModel m = model.translated(center[0], center[1]);
    auto make_chart = [&](bool chart_a) {
        LocalModel c = m;
        c.x = m.x + (chart_a ? "'" : "b");
        c.y = m.y + (chart_a ? "'" : "b");
        const MultiPoly X = V(c.x), Y = V(c.y);
        std::map<std::string, MultiPoly> sub = chart_a ? std::map<std::string, MultiPoly>{{m.x, X}, {m.y, X * Y}}
                                                       : std::map<std::string, MultiPoly>{{m.x, X * Y}, {m.y, Y}};
        const std::string e = chart_a ? c.x : c.y;
        c.a = poly::substitute(m.a, sub);
        c.b = poly::substitute(m.b, sub);
        c.delta = poly::substitute(m.delta, sub);
        for (auto& curve : c.curves)
            curve.equation = poly::extract_power(poly::substitute(curve.equation, sub), V(e)).remainder;
        // The strict transform of the other axis is the new non-exceptional axis.
        if (chart_a)
            c.x_label.clear();
        else
            c.y_label.clear();
        c.exceptional = e;
        c.chart_path += chart_a ? "A" : "B";
        c.steps.push_back({chart_a ? ChartStep::Kind::ChartA : ChartStep::Kind::ChartB, 0, 0, m.x, m.y, c.x, c.y});
        return c;
    };
    return {make_chart(true), make_chart(false)};
}

LocalModel pull_back_fibration(const LocalModel& model) {
    if (!model.exceptional) return model;
    LocalModel m = model;
    auto n = wnf::normalize_condition_C(m.a, m.b, *m.exceptional);
    m.a = n.a;
    m.b = n.b;
    m.t_values.push_back(n.t);
    m.delta = discriminant_of(m.a, m.b);
    return m;
}

OrderTriple exceptional_order_triple(const LocalModel& model) {
    if (!model.exceptional) throw Error("model has no exceptional coordinate");
    return wnf::order_triple_along(model.a, model.b, V(*model.exceptional));
}

}  // namespace fibrant::blowup
