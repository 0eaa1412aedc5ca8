#include "doctest.h"

#include "fibrant/exactpoly.hpp"

#include <random>

using namespace fibrant::poly;

namespace {

MultiPoly P(const char* s, const std::map<std::string, Rational>& params = {}) { return parse(s, params); }

MultiPoly random_poly(std::mt19937& rng, const std::vector<std::string>& vars, int max_deg, int terms) {
    std::uniform_int_distribution<int> coef(-5, 5), den(1, 4), deg(0, max_deg);
    MultiPoly p(vars);
    for (int t = 0; t < terms; ++t) {
        std::vector<std::pair<std::string, unsigned>> pw;
        for (auto& v : vars) pw.push_back({v, static_cast<unsigned>(deg(rng))});
        Rational c(coef(rng), den(rng));
        c.canonicalize();
        p += MultiPoly::monomial(c, pw);
    }
    return p;
}

const std::map<std::string, Rational> alpha1{{"alpha", 1}};

MultiPoly lagrange_discriminant(const Rational& alpha) {
    std::map<std::string, Rational> prm{{"alpha", alpha}};
    MultiPoly phi = P("A0^2*(A0^2 + (1/12)*A2^2 - (alpha/4)*A0*A1)", prm);
    MultiPoly psi = P("A0^3*((1/216)*A2^3 + (1/16)*A0*A1^2 - (alpha/48)*A0*A1*A2 - (1/6)*A0^2*A2 + (alpha^2/16)*A0^3)", prm);
    return pow(phi, 3) - 27 * pow(psi, 2);
}

}  // namespace

TEST_CASE("rational parsing is canonical") {
    CHECK(parse_rational("6/4") == Rational(3, 2));
    CHECK(parse_rational("-0/5") == 0);
    CHECK(parse_rational("0").get_den() == 1);
    CHECK(parse_rational(" -3/12 ").get_str() == "-1/4");
    CHECK_THROWS_AS(parse_rational("1.5"), ParseError);
    CHECK_THROWS_AS(parse_rational("1/0"), ParseError);
}

TEST_CASE("arithmetic examples") {
    CHECK(P("s1^2 + 1") + P("-1") == P("s1^2"));
    MultiPoly a = P("s1"), b = P("s2");
    CHECK(pow(a, 3) - 27 * pow(b, 2) == P("s1^3 - 27*s2^2"));
    CHECK(pow(P("x + y"), 2) == P("x^2 + 2*x*y + y^2"));
    CHECK_THROWS(pow(P("x"), -1));
    CHECK((P("x") - P("x")).is_zero());
}

TEST_CASE("partial derivatives") {
    MultiPoly g2 = P("1 + (1/12)*a2^2 - (alpha/4)*a1", alpha1);
    CHECK(partial_derivative(g2, "a1") == MultiPoly(Rational(-1, 4)));
    CHECK(partial_derivative(MultiPoly(std::vector<std::string>{"x"}) + MultiPoly(7), "x").is_zero());
    CHECK(partial_derivative(P("s1^3 - 27*s2^2"), "s2") == P("-54*s2"));
    CHECK_THROWS_AS(partial_derivative(P("x"), "q"), UnknownVariable);
}

TEST_CASE("substitution") {
    MultiPoly d = P("s1^3 - 27*s2^2");
    auto r = substitute(d, {{"s1", P("t1")}, {"s2", P("t1*t2")}});
    CHECK(r == P("t1^3 - 27*t1^2*t2^2"));
    CHECK(substitute(d, {{"s1", P("s1")}, {"s2", P("s2")}}) == d);
    MultiPoly phi = P("A0^2 + (1/12)*A2^2 - (alpha/4)*A0*A1", alpha1);
    auto dehom = substitute(phi, {{"A0", MultiPoly(1)}, {"A1", P("a1")}, {"A2", P("a2")}});
    CHECK(dehom == P("1 + (1/12)*a2^2 - (1/4)*a1"));
}

TEST_CASE("exact division") {
    CHECK(exact_divide(P("t1^2*(t1 - 27*t2^2)"), P("t1^2")) == P("t1 - 27*t2^2"));
    CHECK(exact_divide(P("x^2 - y^2"), P("x - y")) == P("x + y"));
    CHECK_THROWS_AS(exact_divide(P("x^2 + 1"), P("x")), NotDivisible);
}

TEST_CASE("extract_power") {
    auto split = extract_power(lagrange_discriminant(1), P("A0"));
    CHECK(split.k == Order(7));
    CHECK(split.remainder.total_degree() == 5);
    CHECK(is_homogeneous(split.remainder));

    auto cusp = extract_power(P("s1'^2*s2'^6*(s1' - 27)"), P("s2'"));
    CHECK(cusp.k == Order(6));
    CHECK(cusp.remainder == P("s1'^2*(s1' - 27)"));

    auto c = extract_power(MultiPoly(5), P("x"));
    CHECK(c.k == Order(0));
    CHECK(c.remainder == MultiPoly(5));
    CHECK(extract_power(MultiPoly(), P("x")).k.is_infinite());
}

TEST_CASE("resultant") {
    MultiPoly f = P("3*a2^4 - a2^3 + 72*a2^2 - 108*a2 + 27*17");
    MultiPoly r = resultant(f, partial_derivative(f, "a2"), "a2");
    REQUIRE(r.is_constant());
    // Closed form -3^10 a^4 (a^2+16)^3 (a+4)^3 (a-4)^3 at a = 1.
    Rational closed = Rational(-59049) * 1 * 17 * 17 * 17 * 125 * -27;
    CHECK(r.constant_term() == closed);
    CHECK(r.constant_term() == Rational(979113612375L));

    CHECK(resultant(P("x - a"), P("x - b"), "x") == P("a - b"));
    CHECK(resultant(P("x^2"), P("x"), "x").is_zero());
}

TEST_CASE("resultant closed form in alpha") {
    MultiPoly f = P("3*a2^4 - al^2*a2^3 + 72*a2^2 - 108*al^2*a2 + 27*(al^4 + 16)");
    MultiPoly r = resultant(f, partial_derivative(f, "a2"), "a2");
    MultiPoly expected = -59049 * pow(P("al"), 4) * pow(P("al^2 + 16"), 3) * pow(P("al + 4"), 3) * pow(P("al - 4"), 3);
    CHECK(r == expected);
}

TEST_CASE("gcd") {
    CHECK(gcd_univar(P("x^2 - 1"), P("x - 1"), "x") == P("x - 1"));
    MultiPoly f = P("x^3 - 2*x + 5");
    CHECK(gcd_univar(f, partial_derivative(f, "x"), "x") == MultiPoly(1));
    CHECK(gcd_univar(P("s1^3 - 27*s2^2"), P("-54*s2"), "s2").is_constant());
    CHECK(gcd(P("(x + y)^2*(x - 3*y)"), P("(x + y)*(x^2 + y)")) == P("x + y"));
}

TEST_CASE("homogeneous components") {
    auto parts = homogeneous_components(P("x^2"), {0});
    REQUIRE(parts.size() == 3);
    CHECK(parts[0].is_zero());
    CHECK(parts[1].is_zero());
    CHECK(parts[2] == P("x^2"));
    auto shifted = homogeneous_components(P("(x - 1)^2"), {1});
    REQUIRE(shifted.size() == 3);
    CHECK(shifted[2] == P("x^2"));
    CHECK(shifted[0].is_zero());

    MultiPoly q = exact_divide(lagrange_discriminant(1), pow(P("A0"), 7));
    MultiPoly q0 = substitute(q, {{"A0", MultiPoly(1)}, {"A1", P("a1")}, {"A2", P("a2")}});
    auto node = homogeneous_components(q0, {1, Rational(9, 4)});
    CHECK(node[0].is_zero());
    CHECK(node[1].is_zero());
    CHECK(!node[2].is_zero());
}

TEST_CASE("evaluation") {
    MultiPoly g2 = P("1 + (1/12)*a2^2 - (alpha/4)*a1", alpha1);
    MultiPoly g3 = P("(1/216)*a2^3 + (1/16)*a1^2 - (alpha/48)*a1*a2 - (1/6)*a2 + alpha^2/16", alpha1);
    CHECK(evaluate(g2, {{"a1", 0}, {"a2", 0}}) == 1);
    CHECK(evaluate(g3, {{"a1", 0}, {"a2", 0}}) == Rational(1, 16));
    std::map<std::string, Rational> alpha2{{"alpha", 2}};
    MultiPoly g2b = P("1 + (1/12)*a2^2 - (alpha/4)*a1", alpha2);
    MultiPoly g3b = P("(1/216)*a2^3 + (1/16)*a1^2 - (alpha/48)*a1*a2 - (1/6)*a2 + alpha^2/16", alpha2);
    CHECK(evaluate(g2b, {{"a1", 1}, {"a2", 2}}) == Rational(5, 6));
    CHECK(evaluate(g3b, {{"a1", 1}, {"a2", 2}}) == Rational(-29, 432));
    CHECK_THROWS_AS(evaluate(g2, {{"a1", 0}}), UnknownVariable);
    auto z = evaluate_complex(P("x^2 + 1"), std::map<std::string, std::complex<double>>{{"x", {0, 1}}});
    CHECK(std::abs(z) < 1e-15);
}

TEST_CASE("division identity for the smoothness of g3") {
    MultiPoly lhs = P("8*a2^3 - 3*al^2*a2^2 - 288*a2 + 108*al^2");
    MultiPoly rhs = P("(4*a2^2 - al^2*a2 - 48)*(2*a2 - al^2/4) - (al^4/4 + 192)*a2 + 96*al^2");
    CHECK(lhs == rhs);
}

TEST_CASE("text round trip") {
    MultiPoly p = P("1 + (1/12)*A2^2 - (1/4)*alpha*A1");
    CHECK(to_string(p) == "1 + (1/12)*A2^2 - (1/4)*A1*alpha");
    CHECK(parse(to_string(p)) == p);
    CHECK(to_string(parse(to_string(p))) == to_string(p));
    CHECK(to_string(P("-x^3*y + 0*z")) == "-x^3*y");
    CHECK(to_string(MultiPoly()) == "0");
    CHECK(to_string(P("s1'^2*s2'^6*(s1' - 27)")) == "-27*s1'^2*s2'^6 + s1'^3*s2'^6");
    CHECK(to_string(P("1 + (1/12)*A2^2 - (alpha/4)*A1", alpha1)) == "1 - (1/4)*A1 + (1/12)*A2^2");
    CHECK_THROWS_AS(parse("x +"), ParseError);
    CHECK_THROWS_AS(parse("x/y"), ParseError);
}

TEST_CASE("univariate roots and decompositions") {
    auto roots = rational_roots(P("(4*t - 9)^2*(4*t + 7)^2*(3*t^4 - t^3 + 72*t^2 - 108*t + 459)^3"));
    REQUIRE(roots.size() == 2);
    CHECK(roots[0].value == Rational(-7, 4));
    CHECK(roots[0].multiplicity == 2);
    CHECK(roots[1].value == Rational(9, 4));
    CHECK(rational_roots(P("x^2 - 2")).empty());
    auto zero_root = rational_roots(P("x^3*(x + 1/3)"));
    REQUIRE(zero_root.size() == 2);
    CHECK(zero_root[0].value == Rational(-1, 3));
    CHECK(zero_root[1].multiplicity == 3);
    auto dec = squarefree_decomposition(P("(x - 1)*(x + 2)^3*(x^2 + 1)^3"));
    REQUIRE(dec.size() == 2);
    CHECK(dec[0].second == 1);
    CHECK(dec[1] == std::pair<MultiPoly, int>{P("(x + 2)*(x^2 + 1)"), 3});
    CHECK(strip_rational_roots(P("(x - 1)^2*(x^2 + 1)")) == P("x^2 + 1"));
}

TEST_CASE("ring axioms on random triples") {
    std::mt19937 rng(17);
    std::vector<std::string> vars{"x", "y", "z"};
    for (int trial = 0; trial < 25; ++trial) {
        MultiPoly p = random_poly(rng, vars, 3, 4), q = random_poly(rng, vars, 3, 4), r = random_poly(rng, vars, 2, 3);
        CHECK((p + q) + r == p + (q + r));
        CHECK((p * q) * r == p * (q * r));
        CHECK(p * (q + r) == p * q + p * r);
        CHECK(p * q == q * p);
        CHECK(p + q == q + p);
        CHECK(partial_derivative(partial_derivative(p, "x"), "y") ==
              partial_derivative(partial_derivative(p, "y"), "x"));
        auto parts = homogeneous_components(p, {1, -2, Rational(1, 3)});
        MultiPoly sum(vars);
        for (auto& h : parts) sum += h;
        CHECK(sum == translate(p, {{"x", 1}, {"y", -2}, {"z", Rational(1, 3)}}));
        if (!q.is_constant()) {
            MultiPoly prod = p * pow(q, 2);
            auto split = extract_power(prod, q);
            CHECK(split.k >= Order(2));
            CHECK(split.remainder * pow(q, split.k.value()) == prod);
        }
        CHECK(parse(to_string(p)) == p);
    }
}

TEST_CASE("resultant vanishes iff gcd is non-constant") {
    std::mt19937 rng(5);
    std::uniform_int_distribution<int> c(-3, 3);
    int common = 0;
    for (int trial = 0; trial < 40; ++trial) {
        MultiPoly x = P("x");
        MultiPoly f = MultiPoly(c(rng)) + c(rng) * x + pow(x, 2);
        MultiPoly g = MultiPoly(c(rng)) + pow(x, 1 + trial % 2);
        if (trial % 3 == 0) {
            MultiPoly shared = x - MultiPoly(c(rng));
            f *= shared;
            g *= shared;
        }
        bool zero = resultant(f, g, "x").is_zero();
        bool nonconst = !gcd_univar(f, g, "x").is_constant();
        CHECK(zero == nonconst);
        common += zero;
    }
    CHECK(common >= 14);
}
