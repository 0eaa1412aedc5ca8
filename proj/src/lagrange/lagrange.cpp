#include "fibrant/lagrange.hpp"

namespace fibrant::lagrange {

const std::array<std::string, 3> kGamma{"G1", "G2", "G3"};
const std::array<std::string, 3> kMomentum{"M1", "M2", "M3"};

namespace {

using Vec = std::array<MultiPoly, 3>;

MultiPoly V(const std::string& n) { return MultiPoly::var(n); }

Vec vars(const std::array<std::string, 3>& names) { return {V(names[0]), V(names[1]), V(names[2])}; }

MultiPoly d(const MultiPoly& f, const std::string& v) {
    return f.has_variable(v) ? poly::partial_derivative(f, v) : MultiPoly(0);
}

Vec grad(const MultiPoly& f, const std::array<std::string, 3>& names) {
    return {d(f, names[0]), d(f, names[1]), d(f, names[2])};
}

Vec cross(const Vec& u, const Vec& v) {
    return {u[1] * v[2] - u[2] * v[1], u[2] * v[0] - u[0] * v[2], u[0] * v[1] - u[1] * v[0]};
}

MultiPoly dot(const Vec& u, const Vec& v) { return u[0] * v[0] + u[1] * v[1] + u[2] * v[2]; }

template <class T>
std::array<T, 3> cross(const std::array<T, 3>& u, const std::array<T, 3>& v) {
    return {u[1] * v[2] - u[2] * v[1], u[2] * v[0] - u[0] * v[2], u[0] * v[1] - u[1] * v[0]};
}

Complex c(const Rational& q) { return {q.get_d(), 0.0}; }

}  // namespace

void TopParams::validate() const {
    if (m + 1 == 0) throw Error("1 + m must be nonzero");
}

MultiPoly lie_poisson_bracket(const MultiPoly& f, const MultiPoly& g) {
    const Vec gamma = vars(kGamma), mom = vars(kMomentum);
    const Vec fg = grad(f, kGamma), fm = grad(f, kMomentum), gg = grad(g, kGamma), gm = grad(g, kMomentum);
    return -dot(gamma, cross(fm, gg)) - dot(gamma, cross(fg, gm)) - dot(mom, cross(fm, gm));
}

std::array<MultiPoly, 3> angular_velocity(const Rational& m) {
    TopParams{m, 0}.validate();
    Rational inv = 1 / (1 + m);
    return {V("M1"), V("M2"), V("M3") * MultiPoly(inv)};
}

FirstIntegrals first_integrals(const Rational& m) {
    const Vec gamma = vars(kGamma);
    const Vec w = angular_velocity(m);
    FirstIntegrals h;
    h.h1 = dot(gamma, gamma);
    h.h2 = gamma[0] * w[0] + gamma[1] * w[1] + MultiPoly(1 + m) * gamma[2] * w[2];
    h.h3 = (w[0] * w[0] + w[1] * w[1] + MultiPoly(1 + m) * w[2] * w[2]) / 2 - gamma[2];
    h.h4 = w[2];
    return h;
}

std::array<MultiPoly, 6> euler_poisson_field(const Rational& m) {
    const Vec gamma = vars(kGamma), mom = vars(kMomentum);
    const Vec w = angular_velocity(m);
    const Vec chi{MultiPoly(0), MultiPoly(0), MultiPoly(-1)};
    Vec dg = cross(gamma, w), dm = cross(mom, w), torque = cross(gamma, chi);
    return {dg[0], dg[1], dg[2], dm[0] + torque[0], dm[1] + torque[1], dm[2] + torque[2]};
}

MultiPoly directional_derivative(const MultiPoly& f, const std::array<MultiPoly, 6>& field) {
    MultiPoly out(0);
    for (int i = 0; i < 3; ++i) {
        out += d(f, kGamma[i]) * field[i];
        out += d(f, kMomentum[i]) * field[3 + i];
    }
    return out;
}

std::array<Complex, 6> euler_poisson_rhs(const PhasePoint& p, const Rational& m) {
    TopParams{m, 0}.validate();
    const auto& g = p.gamma;
    const auto& w = p.omega;
    std::array<Complex, 3> mom{w[0], w[1], c(1 + m) * w[2]};
    std::array<Complex, 3> chi{0.0, 0.0, -1.0};
    auto dg = cross(g, w), dm = cross(mom, w), torque = cross(g, chi);
    return {dg[0], dg[1], dg[2], dm[0] + torque[0], dm[1] + torque[1], dm[2] + torque[2]};
}

std::pair<Rational, Rational> tau_transform(const Rational& h3, const Rational& h4, const Rational& m) {
    return {2 * (1 + m) * h4, 2 * h3 + (1 + m) * m * h4 * h4};
}

std::pair<Rational, Rational> g2_g3(const Rational& a1, const Rational& a2, const Rational& alpha) {
    Rational g2 = 1 + a2 * a2 / 12 - alpha * a1 / 4;
    Rational g3 = a2 * a2 * a2 / 216 + a1 * a1 / 16 - alpha * a1 * a2 / 48 - a2 / 6 + alpha * alpha / 16;
    return {g2, g3};
}

wnf::WeierstrassFibration build_global_sections(const Rational& alpha) {
    const MultiPoly A0 = V("A0"), A1 = V("A1"), A2 = V("A2");
    const MultiPoly al(alpha);
    MultiPoly phi = A0 * A0 * (A0 * A0 + A2 * A2 / 12 - al * A0 * A1 / 4);
    MultiPoly psi = poly::pow(A0, 3) * (poly::pow(A2, 3) / 216 + A0 * A1 * A1 / 16 - al * A0 * A1 * A2 / 48 -
                                        A0 * A0 * A2 / 6 + al * al * poly::pow(A0, 3) / 16);
    return wnf::WeierstrassFibration(phi, psi, {alpha, std::nullopt});
}

PhasePoint sample_fiber_point(const LevelSet& level, std::mt19937_64& rng) {
    level.top.validate();
    const Complex a = c(level.top.a_cas), k = c(1 + level.top.m), h3 = c(level.h3), h4 = c(level.h4);
    std::uniform_real_distribution<double> real(-0.9, 0.9), imag(-0.3, 0.3), angle(-3.0, 3.0);
    for (int attempt = 0; attempt < 100; ++attempt) {
        const Complex g3(real(rng), imag(rng)), theta(angle(rng), imag(rng));
        const Complex r = std::sqrt(1.0 - g3 * g3);
        if (std::abs(r) < 1e-3) continue;
        // Omega1,2 in the frame of (G1, G2) = r (cos, sin): u along it, v across it.
        const Complex u = (a - k * g3 * h4) / r;
        const Complex q = 2.0 * (h3 + g3) - k * h4 * h4;
        const Complex v = std::sqrt(q - u * u);
        const Complex cs = std::cos(theta), sn = std::sin(theta);
        PhasePoint p;
        p.gamma = {r * cs, r * sn, g3};
        p.omega = {u * cs - v * sn, u * sn + v * cs, h4};
        auto res = integral_residuals(p, level);
        bool ok = true;
        for (auto& x : res) ok = ok && std::abs(x) < 1e-10;
        if (ok) return p;
    }
    throw Error("no admissible fiber point after 100 draws");
}

std::array<Complex, 4> integral_residuals(const PhasePoint& p, const LevelSet& level) {
    const auto& g = p.gamma;
    const auto& w = p.omega;
    const Complex k = c(1 + level.top.m);
    return {g[0] * g[0] + g[1] * g[1] + g[2] * g[2] - 1.0,
            g[0] * w[0] + g[1] * w[1] + k * g[2] * w[2] - c(level.top.a_cas),
            0.5 * (w[0] * w[0] + w[1] * w[1] + k * w[2] * w[2]) - g[2] - c(level.h3), w[2] - c(level.h4)};
}

std::pair<Complex, Complex> quotient_map(const PhasePoint& p) {
    const auto& g = p.gamma;
    const auto& w = p.omega;
    return {-g[2] / 2.0, -(g[0] * w[1] - g[1] * w[0]) / 2.0};
}

Complex quotient_cubic_residual(const PhasePoint& p, const LevelSet& level) {
    const Rational &m = level.top.m, &a = level.top.a_cas, &h3 = level.h3, &h4 = level.h4;
    auto [x, y] = quotient_map(p);
    const Complex c2 = c(2 * h3 + (1 + m) * m * h4 * h4), c1 = c(1 + (1 + m) * a * h4),
                  c0 = c((2 * h3 - (1 + m) * h4 * h4 - a * a) / 4);
    return y * y - (4.0 * x * x * x - c2 * x * x - c1 * x + c0);
}

Complex weierstrass_residual(const PhasePoint& p, const LevelSet& level) {
    auto [a1, a2] = tau_transform(level.h3, level.h4, level.top.m);
    auto [g2, g3] = g2_g3(a1, a2, level.top.alpha());
    auto [x, y] = quotient_map(p);
    const Complex X = x - c(a2 / 12);
    return y * y - (4.0 * X * X * X - c(g2) * X - c(g3));
}

}  // namespace fibrant::lagrange
