#pragma once

#include <gmpxx.h>

#include <complex>
#include <functional>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace fibrant {

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

namespace poly {

using Integer = mpz_class;
using Rational = mpq_class;

class NotDivisible : public Error {
public:
    using Error::Error;
};

class UnknownVariable : public Error {
public:
    using Error::Error;
};

class ParseError : public Error {
public:
    using Error::Error;
};

// Accepts "7", "-3/12", "+2". Always returns a canonical value.
Rational parse_rational(std::string_view text);
std::string to_string(const Rational& q);

// Order of vanishing along a divisor; infinite when the section is identically zero.
class Order {
public:
    Order() = default;
    Order(int v);
    static Order infinity();

    bool is_infinite() const { return infinite_; }
    int value() const;
    std::string str() const;

    friend bool operator==(const Order& a, const Order& b) {
        return a.infinite_ == b.infinite_ && (a.infinite_ || a.v_ == b.v_);
    }
    friend bool operator<(const Order& a, const Order& b);
    friend bool operator<=(const Order& a, const Order& b) { return a < b || a == b; }
    friend bool operator>=(const Order& a, const Order& b) { return !(a < b); }
    friend bool operator>(const Order& a, const Order& b) { return b < a; }
    friend Order operator+(const Order& a, const Order& b);
    friend Order operator-(const Order& a, int k);
    friend Order operator*(int k, const Order& a);

private:
    int v_ = 0;
    bool infinite_ = false;
};

using Exponents = std::vector<unsigned>;

// Graded lexicographic: total degree first, then lexicographic in variable order.
struct GrlexLess {
    bool operator()(const Exponents& a, const Exponents& b) const;
};

// Sparse polynomial over Q. The variable list is kept sorted by name, so two
// polynomials built in different orders compare and print identically.
class MultiPoly {
public:
    using TermMap = std::map<Exponents, Rational, GrlexLess>;

    MultiPoly() = default;
    MultiPoly(const Rational& c);
    MultiPoly(long c);
    MultiPoly(int c) : MultiPoly(static_cast<long>(c)) {}
    explicit MultiPoly(std::vector<std::string> variables);

    static MultiPoly var(const std::string& name);
    static MultiPoly monomial(const Rational& c,
                              const std::vector<std::pair<std::string, unsigned>>& powers);

    const std::vector<std::string>& variables() const { return vars_; }
    const TermMap& terms() const { return terms_; }
    std::optional<std::size_t> index_of(std::string_view v) const;
    bool has_variable(std::string_view v) const { return index_of(v).has_value(); }

    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    Rational constant_term() const;
    // -1 for the zero polynomial.
    int total_degree() const;
    int degree(std::string_view v) const;
    bool involves(std::string_view v) const { return degree(v) > 0; }
    std::size_t size() const { return terms_.size(); }
    // Largest term in graded lex order.
    std::pair<Exponents, Rational> leading_term() const;
    Rational leading_coefficient() const { return leading_term().second; }
    // Variables with a positive exponent somewhere.
    std::vector<std::string> used_variables() const;

    // Embeds into a larger variable set (names must form a superset).
    MultiPoly with_variables(const std::vector<std::string>& vars) const;
    MultiPoly drop_unused() const;
    // Same polynomial, lowest-order terms scaled so the leading coefficient is 1.
    MultiPoly monic() const;

    MultiPoly operator-() const;
    MultiPoly& operator+=(const MultiPoly& q);
    MultiPoly& operator-=(const MultiPoly& q);
    MultiPoly& operator*=(const MultiPoly& q);
    MultiPoly& operator*=(const Rational& c);

    friend MultiPoly operator+(MultiPoly p, const MultiPoly& q) { return p += q; }
    friend MultiPoly operator-(MultiPoly p, const MultiPoly& q) { return p -= q; }
    friend MultiPoly operator*(const MultiPoly& p, const MultiPoly& q);
    friend MultiPoly operator/(MultiPoly p, const Rational& c);
    friend bool operator==(const MultiPoly& p, const MultiPoly& q);
    friend bool operator!=(const MultiPoly& p, const MultiPoly& q) { return !(p == q); }

    // Raw insertion; exponent arity must match variables().
    void add_term(const Exponents& e, const Rational& c);

private:
    std::vector<std::string> vars_;
    TermMap terms_;
};

std::vector<std::string> merge_variables(const std::vector<std::string>& a,
                                         const std::vector<std::string>& b);

MultiPoly pow(const MultiPoly& p, long e);
MultiPoly partial_derivative(const MultiPoly& p, std::string_view v);
MultiPoly substitute(const MultiPoly& p, const std::map<std::string, MultiPoly>& map);
// x -> x + c for each entry.
MultiPoly translate(const MultiPoly& p, const std::map<std::string, Rational>& shift);

MultiPoly exact_divide(const MultiPoly& p, const MultiPoly& q);
std::optional<MultiPoly> try_divide(const MultiPoly& p, const MultiPoly& q);

struct PowerSplit {
    Order k;
    MultiPoly remainder;
};
PowerSplit extract_power(const MultiPoly& p, const MultiPoly& q);

// Coefficients of v^0, v^1, ... as polynomials in the remaining variables.
std::vector<MultiPoly> coefficients_in(const MultiPoly& p, std::string_view v);
MultiPoly from_coefficients(const std::vector<MultiPoly>& coeffs, const std::string& v);

MultiPoly resultant(const MultiPoly& f, const MultiPoly& g, const std::string& v);
MultiPoly gcd_univar(const MultiPoly& f, const MultiPoly& g, const std::string& v);
// Multivariate gcd, normalized to leading coefficient 1 (0 only if both are 0).
MultiPoly gcd(const MultiPoly& f, const MultiPoly& g);
MultiPoly gcd(const std::vector<MultiPoly>& ps);
MultiPoly pseudo_remainder(const MultiPoly& a, const MultiPoly& b, const std::string& v);
MultiPoly squarefree_part(const MultiPoly& p);

std::vector<MultiPoly> homogeneous_components(const MultiPoly& p,
                                              const std::vector<Rational>& point);
bool is_homogeneous(const MultiPoly& p);

Rational evaluate(const MultiPoly& p, const std::map<std::string, Rational>& at);
std::complex<double> evaluate_complex(const MultiPoly& p,
                                      const std::map<std::string, std::complex<double>>& at);

// Univariate helpers; p must involve at most one variable.
struct RationalRoot {
    Rational value;
    int multiplicity;
};
std::vector<RationalRoot> rational_roots(const MultiPoly& p);
// Yun decomposition: p = c * prod f_i^i; returns (f_i, i) with non-constant f_i.
std::vector<std::pair<MultiPoly, int>> squarefree_decomposition(const MultiPoly& p);
// p divided by every (x - r)^m for its rational roots.
MultiPoly strip_rational_roots(const MultiPoly& p);

// Text format: e.g. "1 + (1/12)*A2^2 - (1/4)*alpha*A1". Identifiers found in
// params are replaced by their value while parsing.
MultiPoly parse(std::string_view text, const std::map<std::string, Rational>& params = {});
std::string to_string(const MultiPoly& p);

}  // namespace poly
}  // namespace fibrant
