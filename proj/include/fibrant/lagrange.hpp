#pragma once

#include "fibrant/weierstrass.hpp"

#include <array>
#include <complex>
#include <random>
#include <utility>

namespace fibrant::lagrange {

using poly::MultiPoly;
using poly::Rational;
using Complex = std::complex<double>;

// Lagrange top with J1 = J2 = 1, J3 = 1 + m and chi = (0, 0, -1).
struct TopParams {
    Rational m;
    Rational a_cas;  // level of <Gamma, M>

    Rational alpha() const { return -2 * a_cas; }
    // Throws when 1 + m = 0.
    void validate() const;
};

// Phase-space variables: Gamma = (G1, G2, G3), M = (M1, M2, M3).
extern const std::array<std::string, 3> kGamma;
extern const std::array<std::string, 3> kMomentum;

MultiPoly lie_poisson_bracket(const MultiPoly& f, const MultiPoly& g);

// Omega = J^{-1} M as polynomials in M.
std::array<MultiPoly, 3> angular_velocity(const Rational& m);

struct FirstIntegrals {
    MultiPoly h1, h2, h3, h4;
    std::array<MultiPoly, 4> all() const { return {h1, h2, h3, h4}; }
};

FirstIntegrals first_integrals(const Rational& m);

// (dGamma/dt, dM/dt) = (Gamma x Omega, M x Omega + Gamma x chi) as polynomials.
std::array<MultiPoly, 6> euler_poisson_field(const Rational& m);
// Derivative of f along a polynomial vector field ordered as (G1..G3, M1..M3).
MultiPoly directional_derivative(const MultiPoly& f, const std::array<MultiPoly, 6>& field);

struct PhasePoint {
    std::array<Complex, 3> gamma, omega;
};

// Same field at a numeric point given in (Gamma, Omega) coordinates.
std::array<Complex, 6> euler_poisson_rhs(const PhasePoint& p, const Rational& m);

std::pair<Rational, Rational> tau_transform(const Rational& h3, const Rational& h4, const Rational& m);
std::pair<Rational, Rational> g2_g3(const Rational& a1, const Rational& a2, const Rational& alpha);

// Phi and Psi on the plane (A0 : A1 : A2).
wnf::WeierstrassFibration build_global_sections(const Rational& alpha);

struct LevelSet {
    Rational h3, h4;
    TopParams top;
};

// Complex point with H1 = 1, H2 = a, H3 = h3, H4 = h4.
PhasePoint sample_fiber_point(const LevelSet& level, std::mt19937_64& rng);

// H1 - 1, H2 - a, H3 - h3, H4 - h4 at p.
std::array<Complex, 4> integral_residuals(const PhasePoint& p, const LevelSet& level);

// (x, y) = (-G3/2, -(G1 W2 - G2 W1)/2).
std::pair<Complex, Complex> quotient_map(const PhasePoint& p);
Complex quotient_cubic_residual(const PhasePoint& p, const LevelSet& level);
// y^2 - (4X^3 - g2 X - g3) with X = x - a2/12 and alpha = -2a.
Complex weierstrass_residual(const PhasePoint& p, const LevelSet& level);

}  // namespace fibrant::lagrange
