#include "doctest.h"

#include "fibrant/monodromy.hpp"

#include <set>

using namespace fibrant::monodromy;

namespace {

const SL2ZMatrix kT = SL2ZMatrix::T();
const SL2ZMatrix kB(1, 0, -1, 1);

}  // namespace

TEST_CASE("matrix arithmetic") {
    CHECK(kT * kT.inverse() == SL2ZMatrix::identity());
    CHECK(kT * kB == SL2ZMatrix(0, 1, -1, 1));
    CHECK(sl2z_inv(kT) == SL2ZMatrix(1, -1, 0, 1));
    CHECK(sl2z_eq(sl2z_mul(kT, kT), kT.pow(2)));
    CHECK(kT.pow(-3) == SL2ZMatrix(1, -3, 0, 1));
    CHECK_THROWS_AS(SL2ZMatrix(1, 1, 1, 1), fibrant::Error);
    CHECK(kB.str() == "[[1,0],[-1,1]]");
}

TEST_CASE("conjugacy to T") {
    CHECK(is_conjugate_to_T(kB, 50));
    CHECK_FALSE(is_conjugate_to_T(SL2ZMatrix::identity(), 50));
    CHECK_FALSE(is_conjugate_to_T(kT.inverse(), 50));
    CHECK_FALSE(is_conjugate_to_T(kT.pow(2), 50));
    CHECK(parabolic_class(kT.inverse()) == Integer(-1));
    CHECK(parabolic_class(kB) == Integer(1));
    CHECK_FALSE(parabolic_class(SL2ZMatrix(0, 1, -1, 0)).has_value());
}

TEST_CASE("parabolic class agrees with the exhaustive search") {
    // Conjugates of T^n by products of small generators.
    const SL2ZMatrix S(0, -1, 1, 0);
    std::vector<SL2ZMatrix> conj{SL2ZMatrix::identity(), S, kT, kT * S, S * kT * kT, kT.pow(-2) * S * kT};
    for (int n : {-2, -1, 1, 2, 3})
        for (auto& P : conj) {
            SL2ZMatrix M = P * kT.pow(n) * P.inverse();
            CHECK(parabolic_class(M) == Integer(n));
            CHECK(is_conjugate_to_T(M, 12) == (n == 1));
        }
}

TEST_CASE("node relation") {
    CHECK(solve_node_relation(kT, 10) == std::vector<SL2ZMatrix>{kT});
    CHECK(solve_node_relation(kB, 10) == std::vector<SL2ZMatrix>{kB});
    CHECK(solve_node_relation(kT, 1) == std::vector<SL2ZMatrix>{kT});
    for (int bound : {5, 25, 50}) CHECK(solve_node_relation(kT, bound) == std::vector<SL2ZMatrix>{kT});
    CHECK(node_relation_holds(kT, kT));
    CHECK_THROWS_AS(solve_node_relation(kT.pow(2), 5), fibrant::Error);
}

TEST_CASE("cusp relation") {
    auto sols = solve_cusp_relation(kT, 10);
    std::set<SL2ZMatrix> s(sols.begin(), sols.end());
    CHECK(s.count(kB) == 1);
    CHECK(s.count(SL2ZMatrix(2, 1, -1, 0)) == 1);
    CHECK(s.count(kT) == 1);
    for (auto& b : sols) {
        CHECK(kT * b * kT == b * kT * b);
        CHECK(is_conjugate_to_T(b, 25));
        if (b != kT) CHECK((kT * b).trace() == 1);
    }
    auto distinct = solve_cusp_relation(kT, 10, true);
    CHECK(distinct.size() == sols.size() - 1);
    for (auto& b : distinct) CHECK(normalize_pair(kT, b) == kB);
    CHECK(cusp_relation_holds(kT, kB));
}

TEST_CASE("normal form") {
    CHECK(normalize_pair(kT, SL2ZMatrix(2, 1, -1, 0)) == kB);
    CHECK(normalize_pair(kT, kB) == kB);
    for (int k = -5; k <= 5; ++k) {
        SL2ZMatrix member = kT.pow(k) * kB * kT.pow(-k);
        CHECK(normalize_pair(kT, member) == kB);
        CHECK(normalize_pair(kT, SL2ZMatrix(-1, 0, 0, -1) * kT.pow(k) * kB * kT.pow(-k) *
                                     SL2ZMatrix(-1, 0, 0, -1)) == kB);
    }
    CHECK_THROWS_AS(normalize_pair(kT, kT), fibrant::Error);
    CHECK_THROWS_AS(normalize_pair(kT, SL2ZMatrix(0, 1, -1, 0)), fibrant::Error);
    CHECK_THROWS_AS(normalize_pair(kB, kT), fibrant::Error);
}

TEST_CASE("solutions are bound-monotone") {
    auto small = solve_cusp_relation(kT, 10, true), large = solve_cusp_relation(kT, 25, true);
    std::set<SL2ZMatrix> l(large.begin(), large.end());
    for (auto& b : small) CHECK(l.count(b) == 1);
    CHECK(large.size() > small.size());
    std::set<SL2ZMatrix> forms;
    for (auto& b : large) forms.insert(normalize_pair(kT, b));
    CHECK(forms == std::set<SL2ZMatrix>{kB});
}

TEST_CASE("presentation of the Lagrange family") {
    auto report = fibrant::miranda::analyze_lagrange_family(1);
    auto p = build_presentation(report);
    CHECK(p.generators.size() == 5);
    CHECK(p.count(Relation::Kind::Node) == 2);
    CHECK(p.count(Relation::Kind::Cusp) == 4);
    CHECK(p.assignment_satisfies());
    for (auto& r : p.relations) {
        const auto &x = p.assignment.at(r.first), &y = p.assignment.at(r.second);
        if (r.kind == Relation::Kind::Cusp) {
            CHECK(x != y);
            CHECK(normalize_pair(kT, x == kT ? y : x) == kB);
        } else {
            CHECK(x == y);
        }
    }
    CHECK(p.relations[0].text() == "g1 g3 = g3 g1");
    CHECK(Relation{Relation::Kind::Cusp, "g1", "g2"}.text() == "g1 g2 g1 = g2 g1 g2");

    // A relation on an unknown generator is rejected; a wrong assignment is detected.
    Presentation bad = p;
    bad.relations.push_back({Relation::Kind::Node, "g1", "g9"});
    CHECK_THROWS_AS(bad.validate(), fibrant::Error);
    Presentation swapped = p;
    swapped.assignment.at("g3") = kB;
    CHECK_FALSE(swapped.assignment_satisfies());

    fibrant::miranda::ClassificationReport empty;
    CHECK_THROWS_AS(build_presentation(empty), fibrant::Error);
}

TEST_CASE("monodromy certificate") {
    for (long bound : {10L, 25L}) {
        auto c = certify_monodromy(bound);
        CHECK(c.node_solutions == std::vector<SL2ZMatrix>{kT});
        CHECK(!c.cusp_solutions.empty());
        CHECK(c.normal_forms == std::vector<SL2ZMatrix>{kB});
    }
    CHECK(kT * kB * kT == kB * kT * kB);
}
