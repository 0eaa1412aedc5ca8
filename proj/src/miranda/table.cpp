#include "fibrant/miranda.hpp"

namespace fibrant::miranda {

using wnf::KodairaFamily;

namespace {

DualGraph chain(std::vector<int> mults, std::string shape) {
    DualGraph g{std::move(mults), {}, std::move(shape)};
    for (int i = 0; i + 1 < static_cast<int>(g.multiplicities.size()); ++i) g.edges.push_back({i, i + 1});
    return g;
}

std::string star(int n) { return "I" + std::to_string(n) + "*"; }

bool is(const KodairaType& k, KodairaFamily f) { return k.family == f; }

}  // namespace

MirandaFiber collide(const KodairaType& k1, const KodairaType& k2) {
    MirandaFiber out;
    // Put the pair in table order: I0 first, then I_M before I*_M, II before the rest.
    auto rank = [](const KodairaType& k) {
        switch (k.family) {
            case KodairaFamily::I0: return 0;
            case KodairaFamily::In: return 1;
            case KodairaFamily::II: return 2;
            case KodairaFamily::III: return 3;
            case KodairaFamily::IV: return 4;
            case KodairaFamily::InStar: return 5;
            default: return 6;
        }
    };
    KodairaType x = k1, y = k2;
    if (rank(y) < rank(x) || (rank(x) == rank(y) && y.n < x.n)) std::swap(x, y);
    out.first = x;
    out.second = y;

    if (is(x, KodairaFamily::I0)) {
        out.row = "I0+X";
        out.graph = y.graph();
        out.label = out.kodaira_label = y.label();
        out.contracted = "none";
        return out;
    }
    if (is(x, KodairaFamily::In) && is(y, KodairaFamily::In)) {
        KodairaType sum{KodairaFamily::In, x.n + y.n};
        out.row = "I+I";
        out.graph = sum.graph();
        out.label = out.kodaira_label = sum.label();
        out.contracted = "none";
        return out;
    }
    if (is(x, KodairaFamily::In) && is(y, KodairaFamily::InStar)) {
        const int m1 = x.n, m2 = y.n;
        out.kodaira_label = star(m1 + m2);
        if (m1 % 2 == 0) {
            out.row = "I+I* even";
            out.graph = KodairaType{KodairaFamily::InStar, m2 + m1 / 2}.graph();
            out.label = star(m2 + m1 / 2);
            out.contracted = std::to_string(m1 / 2) + " components with multiplicity 2";
        } else {
            out.row = "I+I* odd";
            // Multiplicity-2 chain with the two multiplicity-1 leaves at one end only.
            out.graph = chain(std::vector<int>(m2 + (m1 - 1) / 2 + 1, 2), "half-star-chain");
            const int n = static_cast<int>(out.graph.multiplicities.size());
            out.graph.multiplicities.insert(out.graph.multiplicities.end(), {1, 1});
            out.graph.edges.push_back({0, n});
            out.graph.edges.push_back({0, n + 1});
            out.label = out.kodaira_label;
            out.contracted = std::to_string((m1 - 1) / 2) +
                             " components with multiplicity 2 and 2 components with multiplicity 1";
        }
        return out;
    }
    auto row = [&](const char* name, DualGraph g, const char* kodaira, const char* contracted) {
        out.row = name;
        out.graph = std::move(g);
        out.label = out.kodaira_label = kodaira;
        out.contracted = contracted;
        return out;
    };
    if (is(x, KodairaFamily::II) && is(y, KodairaFamily::IV))
        return row("II+IV", chain({2, 1}, "chain"), "I0*", "3 components with multiplicity 1");
    if (is(x, KodairaFamily::II) && is(y, KodairaFamily::InStar) && y.n == 0)
        return row("II+I0*", chain({3, 2, 1}, "chain"), "IV*",
                   "two of the three (2,1) arms");
    if (is(x, KodairaFamily::II) && is(y, KodairaFamily::IVStar))
        return row("II+IV*", chain({1, 2, 3, 4, 2}, "chain"), "II*",
                   "components with multiplicities 6, 5, 4, 3");
    if (is(x, KodairaFamily::IV) && is(y, KodairaFamily::InStar) && y.n == 0)
        return row("IV+I0*", chain({1, 2, 4, 2}, "chain"), "II*",
                   "components with multiplicities 6, 5, 4, 3, 3");
    if (is(x, KodairaFamily::III) && is(y, KodairaFamily::InStar) && y.n == 0)
        return row("III+I0*", chain({1, 2, 3, 2, 1}, "chain"), "III*",
                   "components with multiplicities 4, 3, 2");
    throw NotOnList("collision " + k1.label() + "+" + k2.label() + " is not on Miranda's list");
}

}  // namespace fibrant::miranda
