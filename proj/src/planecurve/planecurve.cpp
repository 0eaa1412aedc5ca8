#include "fibrant/planecurve.hpp"

#include <algorithm>

namespace fibrant::curve {

using poly::coefficients_in;
using poly::exact_divide;
using poly::gcd;
using poly::partial_derivative;
using poly::pow;
using poly::resultant;
using poly::substitute;
using poly::translate;

const std::array<std::string, 3> kHomogeneousNames{"A0", "A1", "A2"};

AffineChart AffineChart::standard(int i) {
    switch (i) {
        case 0: return {0, "a1", "a2"};
        case 1: return {1, "u", "v"};
        case 2: return {2, "u", "v"};
    }
    throw Error("chart index must be 0, 1 or 2");
}

MultiPoly AffineChart::dehomogenize(const MultiPoly& h) const {
    std::map<std::string, MultiPoly> map;
    std::array<std::string, 2> coords{x, y};
    int next = 0;
    for (int i = 0; i < 3; ++i) {
        if (i == chart_index)
            map.emplace(kHomogeneousNames[i], MultiPoly(1));
        else
            map.emplace(kHomogeneousNames[i], MultiPoly::var(coords[next++]));
    }
    MultiPoly out = substitute(h, map);
    return out.with_variables(poly::merge_variables(out.variables(), {x, y}));
}

std::array<Rational, 3> AffineChart::to_projective(const RationalPoint& p) const {
    std::array<Rational, 3> out;
    std::array<Rational, 2> coords{p.first, p.second};
    int next = 0;
    for (int i = 0; i < 3; ++i) out[i] = i == chart_index ? Rational(1) : coords[next++];
    return out;
}

RationalPoint AffineChart::from_projective(const std::array<Rational, 3>& p) const {
    const Rational& d = p[chart_index];
    if (d == 0) throw Error("point not in chart");
    std::array<Rational, 2> coords;
    int next = 0;
    for (int i = 0; i < 3; ++i)
        if (i != chart_index) coords[next++] = p[i] / d;
    return {coords[0], coords[1]};
}

std::string to_string(PointKind k) {
    switch (k) {
        case PointKind::Smooth: return "Smooth";
        case PointKind::Node: return "Node";
        case PointKind::Cusp: return "Cusp";
        case PointKind::Tacnode: return "Tacnode";
        case PointKind::MultiplicityAtLeast3: return "Multiplicity>=3";
        case PointKind::Unresolved: return "Unresolved";
    }
    return "?";
}

namespace {

MultiPoly at_origin(const MultiPoly& f, const std::string& x, const std::string& y,
                    const RationalPoint& p) {
    MultiPoly g = translate(f, {{x, p.first}, {y, p.second}});
    return g.with_variables(poly::merge_variables(g.variables(), {x, y}));
}

int order_at_origin(const MultiPoly& g) {
    if (g.is_zero()) return -1;
    int m = g.total_degree();
    for (auto& [e, c] : g.terms()) {
        int d = 0;
        for (auto k : e) d += static_cast<int>(k);
        m = std::min(m, d);
    }
    return m;
}

Rational coeff(const MultiPoly& g, const std::string& x, const std::string& y, unsigned i, unsigned j) {
    MultiPoly m = MultiPoly::monomial(1, {{x, i}, {y, j}});
    auto gg = g.with_variables(poly::merge_variables(g.variables(), {x, y}));
    auto mm = m.with_variables(gg.variables());
    auto it = gg.terms().find(mm.terms().begin()->first);
    return it == gg.terms().end() ? Rational(0) : it->second;
}

// A_k index of the germ g at the origin: 0 for smooth, nullopt when the
// germ is not of type A or the depth limit is reached.
struct AIndex {
    std::optional<int> k;
    int depth = 0;
    bool triple = false;
};

constexpr int kDepthLimit = 3;

AIndex a_index(const MultiPoly& g, const std::string& x, const std::string& y, int depth) {
    int m = order_at_origin(g);
    if (m == 1) return {0, depth, false};
    if (m != 2) return {std::nullopt, depth, true};
    Rational a = coeff(g, x, y, 2, 0), b = coeff(g, x, y, 1, 1), c = coeff(g, x, y, 0, 2);
    if (b * b - 4 * a * c != 0) return {1, depth, false};
    if (depth >= kDepthLimit) return {std::nullopt, depth, false};
    // Rank one: move the tangent line to {Y = 0} and blow up along X.
    MultiPoly X = MultiPoly::var(x), T = MultiPoly::var(y);
    MultiPoly h;
    if (a != 0) {
        Rational beta = b / (2 * a);
        // x = X (t - beta), y = X, where the tangent is x + beta y = 0.
        h = substitute(g, {{x, X * (T - MultiPoly(beta))}, {y, X}});
    } else {
        h = substitute(g, {{x, X}, {y, X * T}});
    }
    h = exact_divide(h, pow(X, 2));
    h = h.with_variables(poly::merge_variables(h.variables(), {x, y}));
    AIndex sub = a_index(h, x, y, depth + 1);
    if (!sub.k) return {std::nullopt, sub.depth, false};
    return {*sub.k + 2, sub.depth, false};
}

}  // namespace

int multiplicity_at(const MultiPoly& f, const std::string& x, const std::string& y,
                    const RationalPoint& point) {
    MultiPoly g = at_origin(f, x, y, point);
    if (g.is_zero()) throw Error("multiplicity of the zero polynomial");
    return order_at_origin(g);
}

Rational node_determinant(const MultiPoly& f, const std::string& x, const std::string& y,
                          const RationalPoint& point) {
    MultiPoly g = at_origin(f, x, y, point);
    Rational p1 = coeff(g, x, y, 2, 0), p2 = coeff(g, x, y, 0, 2), p3 = coeff(g, x, y, 1, 1);
    return p1 * p2 - (p3 / 2) * (p3 / 2);
}

SingularPointReport classify_double_point(const MultiPoly& f, const std::string& x,
                                          const std::string& y, const RationalPoint& point) {
    MultiPoly g = at_origin(f, x, y, point);
    int m = order_at_origin(g);
    if (m < 2) throw NotSingular("point is not a singular point of the curve");
    SingularPointReport r;
    r.point = point;
    r.multiplicity = m;
    if (m >= 3) {
        r.kind = PointKind::MultiplicityAtLeast3;
        return r;
    }
    AIndex ai = a_index(g, x, y, 0);
    r.depth = ai.depth;
    r.a_index = ai.k;
    if (!ai.k) {
        r.kind = PointKind::Unresolved;
    } else if (*ai.k == 1) {
        r.kind = PointKind::Node;
    } else if (*ai.k == 2) {
        r.kind = PointKind::Cusp;
    } else if (*ai.k == 3) {
        r.kind = PointKind::Tacnode;
    } else {
        r.kind = PointKind::Unresolved;
    }
    return r;
}

CommonZeros rational_common_zeros(const std::vector<MultiPoly>& polys, const std::string& x,
                                  const std::string& y) {
    std::vector<MultiPoly> ps;
    for (auto& p : polys)
        if (!p.is_zero()) ps.push_back(p);
    if (ps.empty()) throw Error("rational_common_zeros: every polynomial is zero");
    CommonZeros out;
    for (auto& p : ps)
        if (p.is_constant()) {
            out.eliminant = MultiPoly(1);
            return out;
        }
    for (auto& p : ps)
        for (auto& v : p.used_variables())
            if (v != x && v != y) throw Error("rational_common_zeros: unexpected variable '" + v + "'");

    std::vector<MultiPoly> elims;
    std::vector<const MultiPoly*> with_x;
    for (auto& p : ps) {
        if (p.involves(x))
            with_x.push_back(&p);
        else
            elims.push_back(p);
    }
    for (std::size_t i = 0; i < with_x.size(); ++i)
        for (std::size_t j = i + 1; j < with_x.size(); ++j) {
            MultiPoly r = resultant(*with_x[i], *with_x[j], x);
            if (!r.is_zero()) elims.push_back(r);
        }
    if (elims.empty()) throw Error("rational_common_zeros: common zero set is not finite");
    MultiPoly e = gcd(elims);
    out.eliminant = e;
    if (e.is_constant()) return out;

    for (auto& root : poly::rational_roots(e)) {
        std::vector<MultiPoly> fiber;
        for (auto& p : ps) {
            MultiPoly q = substitute(p, {{y, MultiPoly(root.value)}});
            if (!q.is_zero()) fiber.push_back(q);
        }
        if (fiber.empty()) throw Error("rational_common_zeros: common zero set contains a line");
        MultiPoly h = gcd(fiber);
        if (h.is_constant()) continue;
        MultiPoly rest = h;
        for (auto& xr : poly::rational_roots(h)) {
            out.points.push_back({xr.value, root.value});
            rest = exact_divide(rest, pow(MultiPoly::var(x) - MultiPoly(xr.value), xr.multiplicity));
        }
        if (!rest.is_constant()) out.irrational_fibers.push_back({root.value, rest});
    }
    std::sort(out.points.begin(), out.points.end());
    return out;
}

SingularLocus rational_singular_points(const MultiPoly& f, const AffineChart& chart) {
    if (f.is_zero()) throw Error("rational_singular_points of the zero polynomial");
    const std::string &x = chart.x, &y = chart.y;
    MultiPoly fx = partial_derivative(f.with_variables(poly::merge_variables(f.variables(), {x, y})), x);
    MultiPoly fy = partial_derivative(f.with_variables(poly::merge_variables(f.variables(), {x, y})), y);
    MultiPoly common = gcd(std::vector<MultiPoly>{f, fx, fy});
    if (!common.is_constant())
        throw NonReduced("curve is not reduced: repeated factor " + poly::to_string(common));

    CommonZeros cz = rational_common_zeros({f, fx, fy}, x, y);
    SingularLocus out;
    out.eliminant = cz.eliminant;
    for (auto& p : cz.points) out.rational.push_back(classify_double_point(f, x, y, p));

    if (!cz.eliminant.is_constant()) {
        MultiPoly irrational = poly::strip_rational_roots(cz.eliminant);
        for (auto& [factor, mult] : poly::squarefree_decomposition(irrational)) {
            SingularPointReport r;
            r.eliminant = factor;
            r.eliminant_variable = y;
            r.eliminant_multiplicity = mult;
            out.clusters.push_back(r);
        }
    }
    for (auto& [y0, h] : cz.irrational_fibers) {
        SingularPointReport r;
        r.eliminant = h;
        r.eliminant_variable = x;
        r.fixed_y = y0;
        r.eliminant_multiplicity = 1;
        out.clusters.push_back(r);
    }
    return out;
}

int intersection_multiplicity(const MultiPoly& f, const MultiPoly& g, const std::string& x,
                              const std::string& y, const RationalPoint& point) {
    MultiPoly F = at_origin(f, x, y, point), G = at_origin(g, x, y, point);
    if (F.constant_term() != 0 || G.constant_term() != 0) return 0;
    MultiPoly h = gcd(F, G);
    if (!h.is_constant()) {
        if (h.constant_term() == 0) throw CommonComponent("curves share a component through the point");
        F = exact_divide(F, h);
        G = exact_divide(G, h);
    }
    const MultiPoly X = MultiPoly::var(x), Y = MultiPoly::var(y);
    for (int lambda = 0; lambda <= 64; ++lambda) {
        MultiPoly Fs = lambda == 0 ? F : substitute(F, {{x, X + lambda * Y}});
        MultiPoly Gs = lambda == 0 ? G : substitute(G, {{x, X + lambda * Y}});
        MultiPoly A = substitute(Fs, {{x, MultiPoly(0)}}), B = substitute(Gs, {{x, MultiPoly(0)}});
        if (A.is_zero() || B.is_zero()) continue;
        MultiPoly c = gcd(A, B);
        if (!c.is_constant() && c != pow(Y, c.degree(y))) continue;
        auto lead_at_zero = [&](const MultiPoly& P) {
            auto cs = coefficients_in(P, y);
            return substitute(cs.back(), {{x, MultiPoly(0)}}).constant_term() != 0;
        };
        if (!lead_at_zero(Fs) && !lead_at_zero(Gs)) continue;
        MultiPoly R = resultant(Fs, Gs, y);
        if (R.is_zero()) throw CommonComponent("curves share a component");
        return order_at_origin(R);
    }
    throw Error("intersection_multiplicity: no generic shear found");
}

SmoothnessCertificate smoothness_certificate(const MultiPoly& f, const AffineChart& chart) {
    SmoothnessCertificate cert;
    const std::string &x = chart.x, &y = chart.y;
    MultiPoly ff = f.with_variables(poly::merge_variables(f.variables(), {x, y}));
    if (ff.is_constant()) {
        cert.status = SmoothnessStatus::Smooth;
        cert.reason = "curve is empty";
        return cert;
    }
    for (const std::string& v : {x, y}) {
        MultiPoly d = partial_derivative(ff, v);
        if (d.is_constant() && !d.is_zero()) {
            cert.status = SmoothnessStatus::Smooth;
            cert.reason = "partial derivative in " + v + " is the nonzero constant " + poly::to_string(d.constant_term());
            return cert;
        }
    }
    CommonZeros cz = rational_common_zeros({ff, partial_derivative(ff, x), partial_derivative(ff, y)}, x, y);
    cert.eliminant = cz.eliminant;
    if (cz.eliminant.is_constant()) {
        cert.status = SmoothnessStatus::Smooth;
        cert.reason = "eliminant of f, f_" + x + ", f_" + y + " is a nonzero constant";
    } else if (!cz.points.empty()) {
        cert.status = SmoothnessStatus::Singular;
        cert.witnesses = cz.points;
        cert.reason = "rational singular point found";
    } else {
        cert.status = SmoothnessStatus::Undecided;
        cert.reason = "eliminant has no rational roots; singular points, if any, are irrational";
    }
    return cert;
}

}  // namespace fibrant::curve
