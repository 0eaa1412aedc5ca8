#include "doctest.h"

#include "fibrant/report.hpp"

#include <algorithm>
#include <set>

using namespace fibrant::miranda;
using fibrant::wnf::KodairaFamily;
using fibrant::wnf::kodaira_from_label;

namespace {

KodairaType K(const char* label) { return kodaira_from_label(label); }

int count_mult(const DualGraph& g, int m) {
    return static_cast<int>(std::count(g.multiplicities.begin(), g.multiplicities.end(), m));
}

std::vector<KodairaType> sample_types() {
    std::vector<KodairaType> out;
    for (const char* l : {"I0", "II", "III", "IV", "I0*", "IV*", "III*", "II*"}) out.push_back(K(l));
    for (int n = 1; n <= 6; ++n) out.push_back({KodairaFamily::In, n});
    for (int n = 1; n <= 3; ++n) out.push_back({KodairaFamily::InStar, n});
    return out;
}

}  // namespace

TEST_CASE("table rows") {
    auto f = collide(K("I1"), K("I1"));
    CHECK(f.row == "I+I");
    CHECK(f.label == "I2");
    CHECK(f.graph.multiplicities.size() == 2);
    CHECK(f.contracted == "none");

    CHECK(collide(K("I1"), K("I4")).label == "I5");

    auto s = collide(K("I4"), K("I1*"));
    CHECK(s.row == "I+I* even");
    CHECK(s.label == "I3*");
    CHECK(s.kodaira_label == "I5*");
    CHECK(count_mult(s.graph, 2) == 4);
    CHECK(collide(K("I4"), K("I2*")).label == "I4*");

    auto odd = collide(K("I1"), K("I0*"));
    CHECK(odd.row == "I+I* odd");
    CHECK(odd.label == "I1*");
    CHECK(count_mult(odd.graph, 1) == 2);

    auto r1 = collide(K("II"), K("I0*"));
    CHECK(r1.row == "II+I0*");
    CHECK(r1.graph.multiplicities == std::vector<int>{3, 2, 1});
    CHECK(r1.label == "IV*");

    CHECK(collide(K("II"), K("IV")).label == "I0*");
    CHECK(collide(K("II"), K("IV*")).label == "II*");
    CHECK(collide(K("IV"), K("I0*")).label == "II*");
    CHECK(collide(K("III"), K("I0*")).label == "III*");
    CHECK(collide(K("III"), K("I0*")).graph.multiplicities == std::vector<int>{1, 2, 3, 2, 1});

    CHECK(collide(K("I0"), K("IV*")).label == "IV*");
    CHECK(collide(K("I0"), K("I0")).label == "I0");

    CHECK_THROWS_AS(collide(K("IV"), K("IV")), NotOnList);
    CHECK_THROWS_AS(collide(K("I1"), K("IV*")), NotOnList);
    CHECK_THROWS_AS(collide(K("II"), K("I1*")), NotOnList);
    CHECK_THROWS_AS(collide(K("I1*"), K("I1*")), NotOnList);
}

TEST_CASE("collide is symmetric") {
    auto types = sample_types();
    for (auto& x : types)
        for (auto& y : types) {
            bool fx = false, fy = false;
            MirandaFiber a, b;
            try {
                a = collide(x, y);
            } catch (const NotOnList&) {
                fx = true;
            }
            try {
                b = collide(y, x);
            } catch (const NotOnList&) {
                fy = true;
            }
            CHECK(fx == fy);
            if (fx || fy) continue;
            CHECK(a.row == b.row);
            CHECK(a.label == b.label);
            CHECK(a.kodaira_label == b.kodaira_label);
            CHECK(a.graph.multiplicities == b.graph.multiplicities);
            CHECK(a.graph.edges == b.graph.edges);
        }
}

TEST_CASE("I+I* even rows match the pictures") {
    for (int m1 = 2; m1 <= 6; m1 += 2)
        for (int m2 = 0; m2 <= 3; ++m2) {
            auto f = collide({KodairaFamily::In, m1}, {KodairaFamily::InStar, m2});
            CHECK(count_mult(f.graph, 2) == m2 + m1 / 2 + 1);
            CHECK(count_mult(f.graph, 1) == 4);
            CHECK(f.graph.edges.size() + 1 == f.graph.multiplicities.size());
        }
    for (int m1 = 1; m1 <= 5; m1 += 2)
        for (int m2 = 0; m2 <= 3; ++m2) {
            auto f = collide({KodairaFamily::In, m1}, {KodairaFamily::InStar, m2});
            CHECK(count_mult(f.graph, 2) == m2 + (m1 - 1) / 2 + 1);
            CHECK(count_mult(f.graph, 1) == 2);
        }
}

TEST_CASE("collision fibers are contractions of their Kodaira models") {
    auto types = sample_types();
    int rows = 0;
    for (auto& x : types)
        for (auto& y : types) {
            try {
                auto f = collide(x, y);
                CHECK(f.graph.weighted_count() <= K(f.kodaira_label.c_str()).graph().weighted_count());
                ++rows;
            } catch (const NotOnList&) {
            }
        }
    CHECK(rows > 40);
}

TEST_CASE("Lagrange family inventory") {
    auto r = analyze_lagrange_family(1);
    CHECK(r.cusps == 4);
    CHECK(r.nodes == 2);

    std::multiset<std::string> types;
    for (auto& d : r.divisors) types.insert(d.name.substr(0, d.name.find('@')) + ":" + d.type.label());
    const std::multiset<std::string> expected_types{
        "L~:I1*", "Q~:I1",  "E1:II",  "E1:II", "E1:II", "E1:II", "E2:III", "E2:III", "E2:III", "E2:III",
        "E3:I0*", "E3:I0*", "E3:I0*", "E3:I0*", "E1:IV*", "E2:IV",  "E3:I0",  "E4:I0",  "E1:I2*", "E2:I4"};
    CHECK(types == expected_types);

    std::multiset<std::string> labels;
    for (auto& c : r.collisions) labels.insert(c.fiber.row + ":" + c.fiber.label);
    std::multiset<std::string> expected_labels{"I+I* even:I4*", "I+I:I5", "I+I* even:I3*", "I+I:I2", "I+I:I2"};
    for (int i = 0; i < 4; ++i)
        expected_labels.insert({"III+I0*:III*", "I+I* odd:I1*", "II+I0*:IV*"});
    CHECK(labels == expected_labels);

    CHECK(r.total_space_singularities.size() == 3);
    CHECK(r.quintic.find("A1") != std::string::npos);

    auto base = r.inventory();
    for (int alpha : {2, 3, 5}) CHECK(analyze_lagrange_family(alpha).inventory() == base);
}

TEST_CASE("non-generic parameters are rejected") {
    for (int alpha : {0, 4, -4}) CHECK_THROWS_AS(analyze_lagrange_family(alpha), fibrant::wnf::GenericityError);
    CHECK_NOTHROW(analyze_lagrange_family(-1));
}
