#pragma once

#include "fibrant/exactpoly.hpp"

#include <array>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace fibrant::curve {

using poly::MultiPoly;
using poly::Rational;
using RationalPoint = std::pair<Rational, Rational>;

class NotSingular : public Error {
public:
    using Error::Error;
};

class NonReduced : public Error {
public:
    using Error::Error;
};

class CommonComponent : public Error {
public:
    using Error::Error;
};

// Standard affine chart U_i = {A_i != 0} of the plane with homogeneous
// coordinates (A0, A1, A2). U0 uses (a1, a2) = (A1/A0, A2/A0); U1 uses
// (u, v) = (A0/A1, A2/A1); U2 uses (u, v) = (A0/A2, A1/A2).
struct AffineChart {
    int chart_index = 0;
    std::string x, y;

    static AffineChart standard(int i);
    MultiPoly dehomogenize(const MultiPoly& homogeneous) const;
    std::array<Rational, 3> to_projective(const RationalPoint& p) const;
    // Chart coordinates of a projective point with A_i != 0.
    RationalPoint from_projective(const std::array<Rational, 3>& p) const;
};

extern const std::array<std::string, 3> kHomogeneousNames;  // A0, A1, A2

enum class PointKind { Smooth, Node, Cusp, Tacnode, MultiplicityAtLeast3, Unresolved };
std::string to_string(PointKind k);

struct SingularPointReport {
    // Empty for a non-rational cluster, which is described by `eliminant`.
    std::optional<RationalPoint> point;
    MultiPoly eliminant;
    std::string eliminant_variable;
    // For clusters found on a rational line y = y0 with irrational x.
    std::optional<Rational> fixed_y;
    int eliminant_multiplicity = 0;
    PointKind kind = PointKind::Unresolved;
    int multiplicity = 0;  // order of f at the point (rational points only)
    std::optional<int> a_index;  // k of an A_k singularity when determined
    int depth = 0;  // blow-ups used by the classifier
};

struct CommonZeros {
    std::vector<RationalPoint> points;
    // Gcd of the y-eliminants; its rational roots are exactly the y-values above.
    MultiPoly eliminant;
    // Irrational x-values over rational y-values: (y0, gcd in x).
    std::vector<std::pair<Rational, MultiPoly>> irrational_fibers;
};

// Rational solutions of a bivariate polynomial system in (x, y).
CommonZeros rational_common_zeros(const std::vector<MultiPoly>& polys, const std::string& x,
                                  const std::string& y);

struct SingularLocus {
    std::vector<SingularPointReport> rational;
    std::vector<SingularPointReport> clusters;
    MultiPoly eliminant;
};

SingularLocus rational_singular_points(const MultiPoly& f, const AffineChart& chart);
SingularPointReport classify_double_point(const MultiPoly& f, const std::string& x,
                                          const std::string& y, const RationalPoint& point);
// Order of f at the point (0 if f does not vanish there).
int multiplicity_at(const MultiPoly& f, const std::string& x, const std::string& y,
                    const RationalPoint& point);
// P1*P2 - (P3/2)^2 for the quadratic part P1 x^2 + P2 y^2 + P3 x y at the point.
Rational node_determinant(const MultiPoly& f, const std::string& x, const std::string& y,
                          const RationalPoint& point);

int intersection_multiplicity(const MultiPoly& f, const MultiPoly& g, const std::string& x,
                              const std::string& y, const RationalPoint& point);

enum class SmoothnessStatus { Smooth, Singular, Undecided };

struct SmoothnessCertificate {
    SmoothnessStatus status = SmoothnessStatus::Undecided;
    std::string reason;
    MultiPoly eliminant;
    std::vector<RationalPoint> witnesses;
    bool smooth() const { return status == SmoothnessStatus::Smooth; }
};

SmoothnessCertificate smoothness_certificate(const MultiPoly& f, const AffineChart& chart);

}  // namespace fibrant::curve
