#include "fibrant/planecurve.hpp"
#include "fibrant/weierstrass.hpp"

#include <algorithm>

namespace fibrant::wnf {

namespace {

const std::vector<std::string> kBase = {"A0", "A1", "A2"};

MultiPoly on_base(const MultiPoly& p, const char* what) {
    for (auto& v : p.used_variables())
        if (std::find(kBase.begin(), kBase.end(), v) == kBase.end())
            throw Error(std::string(what) + " involves '" + v + "'; expected A0, A1, A2 only");
    return p.drop_unused().with_variables(kBase);
}

void check_degree(const MultiPoly& p, int d, const char* what) {
    if (p.is_zero()) return;
    if (!poly::is_homogeneous(p) || p.total_degree() != d)
        throw Error(std::string(what) + " must be homogeneous of degree " + std::to_string(d));
}

MultiPoly line(int i) { return MultiPoly::var(kBase[i]); }

bool vanishes_on(const MultiPoly& p, const std::array<Rational, 3>& pt) {
    return poly::evaluate(p, {{"A0", pt[0]}, {"A1", pt[1]}, {"A2", pt[2]}}) == 0;
}

bool divides(const MultiPoly& c, const MultiPoly& p, int times = 1) {
    if (p.is_zero()) return true;
    return poly::extract_power(p, c).k >= Order(times);
}

}  // namespace

WeierstrassFibration::WeierstrassFibration(MultiPoly a, MultiPoly b, FibrationParams params)
    : a_(on_base(a, "a")), b_(on_base(b, "b")), params_(std::move(params)) {
    check_degree(a_, 4, "a");
    check_degree(b_, 6, "b");
    delta_ = wnf::discriminant(a_, b_);
}

MultiPoly discriminant(const MultiPoly& a, const MultiPoly& b) {
    MultiPoly d = pow(a, 3) - 27 * pow(b, 2);
    if (d.is_zero()) throw Error("discriminant vanishes identically: not an elliptic fibration");
    return d;
}

JInvariant j_invariant(const MultiPoly& a, const MultiPoly& b) {
    JInvariant j;
    j.numerator = pow(a, 3);
    j.denominator = discriminant(a, b);
    if (j.numerator.is_zero()) {
        j.reduced_numerator = MultiPoly(0);
        j.reduced_denominator = MultiPoly(1);
        return j;
    }
    MultiPoly g = poly::gcd(j.numerator, j.denominator);
    j.reduced_numerator = poly::exact_divide(j.numerator, g);
    j.reduced_denominator = poly::exact_divide(j.denominator, g);
    return j;
}

std::optional<Rational> j_value(const JInvariant& j, const std::map<std::string, Rational>& at) {
    Rational den = poly::evaluate(j.reduced_denominator, at);
    if (den == 0) return std::nullopt;
    return poly::evaluate(j.reduced_numerator, at) / den;
}

std::vector<DiscriminantComponent> discriminant_components(const WeierstrassFibration& f) {
    std::vector<DiscriminantComponent> out;
    MultiPoly rest = f.discriminant();
    for (int i = 0; i < 3; ++i) {
        auto split = poly::extract_power(rest, line(i));
        if (split.k == Order(0)) continue;
        out.push_back({kBase[i], line(i), split.k.value()});
        rest = split.remainder;
    }
    // rest = prod_i F_i^i with F_i squarefree; peel one layer of multiplicity at a time.
    std::vector<MultiPoly> layers;
    for (MultiPoly g = rest; !g.is_constant();) {
        MultiPoly s = poly::squarefree_part(g);
        layers.push_back(s);
        g = poly::exact_divide(g, s);
    }
    int residual = 0;
    for (std::size_t i = 0; i < layers.size(); ++i) {
        MultiPoly factor =
            i + 1 < layers.size() ? poly::exact_divide(layers[i], layers[i + 1]) : layers[i];
        if (factor.is_constant()) continue;
        ++residual;
        out.push_back({"R" + std::to_string(residual), factor.monic(), static_cast<int>(i + 1)});
    }
    return out;
}

std::vector<std::array<Rational, 3>> projective_rational_zeros(const std::vector<MultiPoly>& polys,
                                                               const std::vector<MultiPoly>& excluded) {
    std::vector<std::array<Rational, 3>> out;
    auto on_excluded = [&](const std::array<Rational, 3>& pt) {
        return std::any_of(excluded.begin(), excluded.end(),
                           [&](const MultiPoly& c) { return vanishes_on(c, pt); });
    };

    // Chart A0 = 1. Excluded curves are divided out so that the rest of the
    // solution set is finite.
    std::vector<MultiPoly> affine;
    for (auto& p : polys) {
        MultiPoly q = poly::substitute(p, {{"A0", MultiPoly(1)}});
        for (auto& c : excluded) {
            MultiPoly c0 = poly::substitute(c, {{"A0", MultiPoly(1)}});
            if (!c0.is_constant() && !q.is_zero()) q = poly::extract_power(q, c0).remainder;
        }
        if (!q.is_zero()) affine.push_back(q.drop_unused().with_variables({"A1", "A2"}));
    }
    if (affine.empty()) throw Error("common zero set is not finite off the excluded curves");
    auto zeros = curve::rational_common_zeros(affine, "A1", "A2");
    for (auto& [x, y] : zeros.points) {
        std::array<Rational, 3> pt{Rational(1), x, y};
        if (!on_excluded(pt)) out.push_back(pt);
    }

    // The line A0 = 0.
    bool line_excluded = std::any_of(excluded.begin(), excluded.end(), [](const MultiPoly& c) {
        return poly::substitute(c, {{"A0", MultiPoly(0)}}).is_zero();
    });
    if (line_excluded) return out;
    std::vector<MultiPoly> on_line;
    for (auto& p : polys) {
        MultiPoly q = poly::substitute(p, {{"A0", MultiPoly(0)}, {"A1", MultiPoly(1)}});
        if (!q.is_zero()) on_line.push_back(q);
    }
    if (on_line.empty()) throw Error("common zero set contains the line A0 = 0");
    MultiPoly g = poly::gcd(on_line);
    if (!g.is_constant())
        for (auto& r : poly::rational_roots(g.drop_unused())) {
            std::array<Rational, 3> pt{Rational(0), Rational(1), r.value};
            if (!on_excluded(pt)) out.push_back(pt);
        }
    std::array<Rational, 3> corner{Rational(0), Rational(0), Rational(1)};
    if (!on_excluded(corner) &&
        std::all_of(polys.begin(), polys.end(), [&](const MultiPoly& p) { return vanishes_on(p, corner); }))
        out.push_back(corner);
    return out;
}

std::vector<TotalSpaceSingularity> total_space_singularities(const WeierstrassFibration& f) {
    std::vector<TotalSpaceSingularity> out;
    const MultiPoly &a = f.a(), &b = f.b(), &d = f.discriminant();
    auto components = discriminant_components(f);

    auto point_fiber = [](const Rational& x) {
        return std::array<MultiPoly, 3>{MultiPoly(x), MultiPoly(0), MultiPoly(1)};
    };

    // (i) Singular points of B lying on A; the fiber point is (0:0:1).
    if (!b.is_zero()) {
        std::vector<MultiPoly> excluded;
        for (auto& c : components)
            if (divides(c.equation, a) && divides(c.equation, b, 2)) {
                excluded.push_back(c.equation);
                TotalSpaceSingularity s;
                s.kind = TotalSpaceSingularity::Kind::Curve;
                s.criterion = "sing-B-on-A";
                s.fiber = point_fiber(0);
                s.curve = c.equation;
                out.push_back(s);
            }
        std::vector<MultiPoly> system{a, b};
        for (auto& v : kBase) system.push_back(poly::partial_derivative(b, v));
        for (auto& pt : projective_rational_zeros(system, excluded)) {
            TotalSpaceSingularity s;
            s.criterion = "sing-B-on-A";
            s.fiber = point_fiber(0);
            s.base = pt;
            out.push_back(s);
        }
    }

    // (ii) Singular points of D off A and B; the fiber point is (-3b : 0 : 2a).
    std::vector<MultiPoly> excluded;
    for (auto& c : components)
        if (c.multiplicity >= 2) {
            excluded.push_back(c.equation);
            if (divides(c.equation, a) || divides(c.equation, b)) continue;
            TotalSpaceSingularity s;
            s.kind = TotalSpaceSingularity::Kind::Curve;
            s.criterion = "sing-D-off-A-B";
            s.fiber = {-3 * b, MultiPoly(0), 2 * a};
            s.curve = c.equation;
            out.push_back(s);
        }
    std::vector<MultiPoly> system{d};
    for (auto& v : kBase) system.push_back(poly::partial_derivative(d, v));
    for (auto& pt : projective_rational_zeros(system, excluded)) {
        std::map<std::string, Rational> at{{"A0", pt[0]}, {"A1", pt[1]}, {"A2", pt[2]}};
        Rational av = poly::evaluate(a, at), bv = poly::evaluate(b, at);
        if (av == 0 || bv == 0) continue;
        TotalSpaceSingularity s;
        s.criterion = "sing-D-off-A-B";
        s.fiber = point_fiber(-3 * bv / (2 * av));
        s.base = pt;
        out.push_back(s);
    }
    return out;
}

void check_lagrange_genericity(const Rational& alpha) {
    if (alpha == 0 || alpha == 4 || alpha == -4)
        throw GenericityError("alpha = " + poly::to_string(alpha) +
                              " is not generic: the resultant -3^10 alpha^4 (alpha^2+16)^3 "
                              "(alpha+4)^3 (alpha-4)^3 of the cusp eliminant vanishes");
}

}  // namespace fibrant::wnf
