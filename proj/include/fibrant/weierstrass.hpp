#pragma once

#include "fibrant/exactpoly.hpp"
#include "fibrant/sl2z.hpp"

#include <array>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace fibrant::wnf {

using poly::MultiPoly;
using poly::Order;
using poly::Rational;

class NeedsNormalization : public Error {
public:
    using Error::Error;
};

class NotInTable : public Error {
public:
    using Error::Error;
};

class GenericityError : public Error {
public:
    using Error::Error;
};

struct FibrationParams {
    std::optional<Rational> alpha;
    std::optional<Rational> m;
};

// Y^2 Z = 4 X^3 - a X Z^2 - b Z^3 over the plane with coordinates (A0, A1, A2),
// with a of degree 4 and b of degree 6.
class WeierstrassFibration {
public:
    WeierstrassFibration(MultiPoly a, MultiPoly b, FibrationParams params = {});

    const MultiPoly& a() const { return a_; }
    const MultiPoly& b() const { return b_; }
    const MultiPoly& discriminant() const { return delta_; }
    const FibrationParams& params() const { return params_; }

private:
    MultiPoly a_, b_, delta_;
    FibrationParams params_;
};

// a^3 - 27 b^2; throws when it vanishes identically.
MultiPoly discriminant(const MultiPoly& a, const MultiPoly& b);
inline MultiPoly discriminant(const WeierstrassFibration& f) { return f.discriminant(); }

struct JInvariant {
    MultiPoly numerator, denominator;            // a^3 and a^3 - 27 b^2
    MultiPoly reduced_numerator, reduced_denominator;
};
JInvariant j_invariant(const MultiPoly& a, const MultiPoly& b);
inline JInvariant j_invariant(const WeierstrassFibration& f) { return j_invariant(f.a(), f.b()); }

// Value of J at a point; nullopt marks a pole (point on the discriminant).
std::optional<Rational> j_value(const JInvariant& j, const std::map<std::string, Rational>& at);

struct DiscriminantComponent {
    std::string name;
    MultiPoly equation;  // homogeneous, squarefree
    int multiplicity = 0;
};
// Coordinate lines dividing the discriminant, then the residual split by multiplicity.
std::vector<DiscriminantComponent> discriminant_components(const WeierstrassFibration& f);

struct TotalSpaceSingularity {
    enum class Kind { Point, Curve };
    Kind kind = Kind::Point;
    std::string criterion;  // "sing-B-on-A" or "sing-D-off-A-B"
    // (X : Y : Z), scaled to Z = 1. For curves these may depend on the base coordinates.
    std::array<MultiPoly, 3> fiber;
    std::array<Rational, 3> base;  // points only; first nonzero coordinate is 1
    MultiPoly curve;               // curves only
};
std::vector<TotalSpaceSingularity> total_space_singularities(const WeierstrassFibration& f);

// Rational points of P^2 where every polynomial vanishes, skipping points on the
// excluded curves (whose full zero sets are allowed to be in the solution set).
std::vector<std::array<Rational, 3>> projective_rational_zeros(const std::vector<MultiPoly>& polys,
                                                               const std::vector<MultiPoly>& excluded);

struct OrderTriple {
    Order L, K, N;
    std::string str() const;
    bool consistent() const;
    friend bool operator==(const OrderTriple& x, const OrderTriple& y) {
        return x.L == y.L && x.K == y.K && x.N == y.N;
    }
};

OrderTriple order_triple_along(const MultiPoly& a, const MultiPoly& b, const MultiPoly& component);

enum class KodairaFamily { I0, In, InStar, II, III, IV, IVStar, IIIStar, IIStar };

struct DualGraph {
    std::vector<int> multiplicities;
    std::vector<std::pair<int, int>> edges;  // repeated edges mark tangency
    std::string shape;                       // smooth, nodal, cuspidal, cycle, star, chain, ...
    int weighted_count() const;
};

struct KodairaType {
    KodairaFamily family = KodairaFamily::I0;
    int n = 0;  // index for I_n and I_n*

    std::string label() const;
    DualGraph graph() const;
    int component_count() const { return static_cast<int>(graph().multiplicities.size()); }
    friend bool operator==(const KodairaType& x, const KodairaType& y) {
        return x.family == y.family && x.n == y.n;
    }
    friend bool operator!=(const KodairaType& x, const KodairaType& y) { return !(x == y); }
};

KodairaType kodaira_classify(const OrderTriple& t);
KodairaType kodaira_from_label(const std::string& label);  // "I0", "I3", "I2*", "IV*", ...

struct Normalized {
    MultiPoly a, b;
    int t = 0;
};
Normalized normalize_condition_C(const MultiPoly& a, const MultiPoly& b, const std::string& u);

OrderTriple reduce_triple_mod(OrderTriple t);

monodromy::SL2ZMatrix kodaira_monodromy(const KodairaType& k);

// Rejects parameters where the cusps of the residual discriminant meet the
// coordinate line non-transversally (alpha in {0, 4, -4}).
void check_lagrange_genericity(const Rational& alpha);

}  // namespace fibrant::wnf
