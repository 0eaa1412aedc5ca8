#include "fibrant/weierstrass.hpp"

#include <algorithm>
#include <numeric>

namespace fibrant::wnf {

using monodromy::SL2ZMatrix;

std::string OrderTriple::str() const { return "(" + L.str() + "," + K.str() + "," + N.str() + ")"; }

bool OrderTriple::consistent() const {
    Order lo = std::min(3 * L, 2 * K);
    if (N < lo) return false;
    return 3 * L == 2 * K || N == lo;
}

OrderTriple order_triple_along(const MultiPoly& a, const MultiPoly& b, const MultiPoly& component) {
    MultiPoly d = pow(a, 3) - 27 * pow(b, 2);
    return {poly::extract_power(a, component).k, poly::extract_power(b, component).k,
            poly::extract_power(d, component).k};
}

int DualGraph::weighted_count() const {
    return std::accumulate(multiplicities.begin(), multiplicities.end(), 0);
}

std::string KodairaType::label() const {
    switch (family) {
        case KodairaFamily::I0: return "I0";
        case KodairaFamily::In: return "I" + std::to_string(n);
        case KodairaFamily::InStar: return "I" + std::to_string(n) + "*";
        case KodairaFamily::II: return "II";
        case KodairaFamily::III: return "III";
        case KodairaFamily::IV: return "IV";
        case KodairaFamily::IVStar: return "IV*";
        case KodairaFamily::IIIStar: return "III*";
        case KodairaFamily::IIStar: return "II*";
    }
    return "?";
}

namespace {

DualGraph chain_graph(std::vector<int> mults, std::string shape) {
    DualGraph g{std::move(mults), {}, std::move(shape)};
    for (int i = 0; i + 1 < static_cast<int>(g.multiplicities.size()); ++i) g.edges.push_back({i, i + 1});
    return g;
}

}  // namespace

DualGraph KodairaType::graph() const {
    switch (family) {
        case KodairaFamily::I0: return {{1}, {}, "smooth"};
        case KodairaFamily::In: {
            if (n == 1) return {{1}, {{0, 0}}, "nodal"};
            DualGraph g{std::vector<int>(n, 1), {}, "cycle"};
            for (int i = 0; i < n; ++i) g.edges.push_back({i, (i + 1) % n});
            return g;
        }
        case KodairaFamily::InStar: {
            // n+1 multiplicity-2 components in a chain, two multiplicity-1 leaves at each end.
            DualGraph g = chain_graph(std::vector<int>(n + 1, 2), "star-chain");
            for (int i = 0; i < 4; ++i) g.multiplicities.push_back(1);
            g.edges.push_back({0, n + 1});
            g.edges.push_back({0, n + 2});
            g.edges.push_back({n, n + 3});
            g.edges.push_back({n, n + 4});
            return g;
        }
        case KodairaFamily::II: return {{1}, {}, "cuspidal"};
        case KodairaFamily::III: return {{1, 1}, {{0, 1}, {0, 1}}, "tangent-pair"};
        case KodairaFamily::IV: return {{1, 1, 1}, {{0, 1}, {1, 2}, {2, 0}}, "concurrent-triple"};
        case KodairaFamily::IVStar: {
            DualGraph g = chain_graph({1, 2, 3, 2, 1}, "E6");
            g.multiplicities.insert(g.multiplicities.end(), {2, 1});
            g.edges.push_back({2, 5});
            g.edges.push_back({5, 6});
            return g;
        }
        case KodairaFamily::IIIStar: {
            DualGraph g = chain_graph({1, 2, 3, 4, 3, 2, 1}, "E7");
            g.multiplicities.push_back(2);
            g.edges.push_back({3, 7});
            return g;
        }
        case KodairaFamily::IIStar: {
            DualGraph g = chain_graph({1, 2, 3, 4, 5, 6, 4, 2}, "E8");
            g.multiplicities.push_back(3);
            g.edges.push_back({5, 8});
            return g;
        }
    }
    return {};
}

KodairaType kodaira_classify(const OrderTriple& t) {
    const Order &L = t.L, &K = t.K, &N = t.N;
    if (N.is_infinite()) throw NotInTable("discriminant vanishes identically along the component");
    if (!t.consistent()) throw NotInTable("inconsistent order triple " + t.str());
    if (L >= Order(4) && K >= Order(6))
        throw NeedsNormalization("triple " + t.str() + " violates the minimality condition");
    auto is = [](const Order& o, int v) { return o == Order(v); };
    int n = N.value();
    if (n == 0) return {KodairaFamily::I0, 0};
    if (is(L, 0) && is(K, 0)) return {KodairaFamily::In, n};
    if (L >= Order(1) && is(K, 1) && n == 2) return {KodairaFamily::II, 0};
    if (is(L, 1) && K >= Order(2) && n == 3) return {KodairaFamily::III, 0};
    if (L >= Order(2) && is(K, 2) && n == 4) return {KodairaFamily::IV, 0};
    if (L >= Order(2) && K >= Order(3) && n == 6) return {KodairaFamily::InStar, 0};
    if (is(L, 2) && is(K, 3) && n >= 7) return {KodairaFamily::InStar, n - 6};
    if (L >= Order(3) && is(K, 4) && n == 8) return {KodairaFamily::IVStar, 0};
    if (is(L, 3) && K >= Order(5) && n == 9) return {KodairaFamily::IIIStar, 0};
    if (L >= Order(4) && is(K, 5) && n == 10) return {KodairaFamily::IIStar, 0};
    throw NotInTable("triple " + t.str() + " is not on Kodaira's list");
}

KodairaType kodaira_from_label(const std::string& label) {
    static const std::vector<std::pair<std::string, KodairaFamily>> fixed = {
        {"II", KodairaFamily::II},         {"III", KodairaFamily::III},
        {"IV", KodairaFamily::IV},         {"IV*", KodairaFamily::IVStar},
        {"III*", KodairaFamily::IIIStar},  {"II*", KodairaFamily::IIStar}};
    for (auto& [name, fam] : fixed)
        if (label == name) return {fam, 0};
    if (label.size() >= 2 && label[0] == 'I') {
        bool star = label.back() == '*';
        std::string digits = label.substr(1, label.size() - 1 - (star ? 1 : 0));
        if (!digits.empty() && std::all_of(digits.begin(), digits.end(), ::isdigit) && digits.size() < 7) {
            int n = std::stoi(digits);
            if (star) return {KodairaFamily::InStar, n};
            return n == 0 ? KodairaType{KodairaFamily::I0, 0} : KodairaType{KodairaFamily::In, n};
        }
    }
    throw NotInTable("unknown Kodaira type '" + label + "'");
}

Normalized normalize_condition_C(const MultiPoly& a, const MultiPoly& b, const std::string& u) {
    MultiPoly U = MultiPoly::var(u);
    Order la = poly::extract_power(a, U).k, kb = poly::extract_power(b, U).k;
    if (la.is_infinite() && kb.is_infinite()) throw Error("both sections vanish identically");
    int t = std::min(la.is_infinite() ? kb.value() / 6 : la.value() / 4,
                     kb.is_infinite() ? la.value() / 4 : kb.value() / 6);
    if (t == 0) return {a, b, 0};
    return {poly::exact_divide(a, pow(U, 4 * t)), poly::exact_divide(b, pow(U, 6 * t)), t};
}

OrderTriple reduce_triple_mod(OrderTriple t) {
    while (t.L >= Order(4) && t.K >= Order(6) && t.N >= Order(12)) {
        t.L = t.L - 4;
        t.K = t.K - 6;
        t.N = t.N - 12;
    }
    return t;
}

SL2ZMatrix kodaira_monodromy(const KodairaType& k) {
    switch (k.family) {
        case KodairaFamily::I0: return SL2ZMatrix::identity();
        case KodairaFamily::In: return {1, k.n, 0, 1};
        case KodairaFamily::InStar: return {-1, -k.n, 0, -1};
        case KodairaFamily::II: return {1, 1, -1, 0};
        case KodairaFamily::III: return {0, 1, -1, 0};
        case KodairaFamily::IV: return {0, 1, -1, -1};
        case KodairaFamily::IVStar: return {-1, -1, 1, 0};
        case KodairaFamily::IIIStar: return {0, -1, 1, 0};
        case KodairaFamily::IIStar: return {0, -1, 1, 1};
    }
    return SL2ZMatrix::identity();
}

}  // namespace fibrant::wnf
