#pragma once

#include "fibrant/exactpoly.hpp"

namespace fixtures {

using fibrant::poly::MultiPoly;
using fibrant::poly::Rational;

inline MultiPoly P(const char* s, const std::map<std::string, Rational>& params = {}) {
    return fibrant::poly::parse(s, params);
}

// Sections written out independently of the lagrange module.
inline MultiPoly phi(const Rational& alpha) {
    return P("A0^2*(A0^2 + (1/12)*A2^2 - (alpha/4)*A0*A1)", {{"alpha", alpha}});
}

inline MultiPoly psi(const Rational& alpha) {
    return P("A0^3*((1/216)*A2^3 + (1/16)*A0*A1^2 - (alpha/48)*A0*A1*A2 - (1/6)*A0^2*A2 + (alpha^2/16)*A0^3)",
             {{"alpha", alpha}});
}

inline MultiPoly quintic(const Rational& alpha) {
    MultiPoly d = fibrant::poly::pow(phi(alpha), 3) - 27 * fibrant::poly::pow(psi(alpha), 2);
    return fibrant::poly::exact_divide(d, fibrant::poly::pow(P("A0"), 7));
}

}  // namespace fixtures
