#include "fibrant/exactpoly.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace fibrant::poly {

Rational parse_rational(std::string_view text) {
    std::string s(text);
    s.erase(std::remove_if(s.begin(), s.end(), [](unsigned char ch) { return std::isspace(ch); }),
            s.end());
    if (!s.empty() && s[0] == '+') s.erase(0, 1);
    if (s.empty()) throw ParseError("empty rational");
    auto slash = s.find('/');
    auto digits_ok = [](std::string_view d, bool allow_sign) {
        if (allow_sign && !d.empty() && d[0] == '-') d.remove_prefix(1);
        return !d.empty() && std::all_of(d.begin(), d.end(), [](unsigned char ch) { return std::isdigit(ch); });
    };
    std::string num = s.substr(0, slash);
    std::string den = slash == std::string::npos ? "1" : s.substr(slash + 1);
    if (!digits_ok(num, true) || !digits_ok(den, false))
        throw ParseError("not an exact rational: '" + std::string(text) + "'");
    Integer n(num), d(den);
    if (d == 0) throw ParseError("zero denominator in '" + std::string(text) + "'");
    Rational q(n, d);
    q.canonicalize();
    return q;
}

std::string to_string(const Rational& q) { return q.get_str(); }

Order::Order(int v) : v_(v) {
    if (v < 0) throw Error("negative order");
}

Order Order::infinity() {
    Order o;
    o.infinite_ = true;
    return o;
}

int Order::value() const {
    if (infinite_) throw Error("order is infinite");
    return v_;
}

std::string Order::str() const { return infinite_ ? "inf" : std::to_string(v_); }

bool operator<(const Order& a, const Order& b) {
    if (a.infinite_) return false;
    if (b.infinite_) return true;
    return a.v_ < b.v_;
}

Order operator+(const Order& a, const Order& b) {
    if (a.infinite_ || b.infinite_) return Order::infinity();
    return Order(a.v_ + b.v_);
}

Order operator-(const Order& a, int k) {
    if (a.infinite_) return a;
    return Order(a.v_ - k);
}

Order operator*(int k, const Order& a) {
    if (a.infinite_) return k == 0 ? Order(0) : a;
    return Order(k * a.v_);
}

bool GrlexLess::operator()(const Exponents& a, const Exponents& b) const {
    unsigned da = std::accumulate(a.begin(), a.end(), 0u);
    unsigned db = std::accumulate(b.begin(), b.end(), 0u);
    if (da != db) return da < db;
    return a < b;
}

std::vector<std::string> merge_variables(const std::vector<std::string>& a,
                                         const std::vector<std::string>& b) {
    std::vector<std::string> out;
    std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

MultiPoly::MultiPoly(const Rational& c) {
    if (c != 0) terms_.emplace(Exponents{}, c);
}

MultiPoly::MultiPoly(long c) : MultiPoly(Rational(c)) {}

MultiPoly::MultiPoly(std::vector<std::string> variables) : vars_(std::move(variables)) {
    std::sort(vars_.begin(), vars_.end());
    vars_.erase(std::unique(vars_.begin(), vars_.end()), vars_.end());
}

MultiPoly MultiPoly::var(const std::string& name) { return monomial(1, {{name, 1}}); }

MultiPoly MultiPoly::monomial(const Rational& c,
                              const std::vector<std::pair<std::string, unsigned>>& powers) {
    std::vector<std::string> names;
    for (auto& [n, e] : powers) names.push_back(n);
    MultiPoly p(names);
    Exponents ex(p.vars_.size(), 0);
    for (auto& [n, e] : powers) ex[*p.index_of(n)] += e;
    p.add_term(ex, c);
    return p;
}

std::optional<std::size_t> MultiPoly::index_of(std::string_view v) const {
    auto it = std::lower_bound(vars_.begin(), vars_.end(), v);
    if (it == vars_.end() || *it != v) return std::nullopt;
    return static_cast<std::size_t>(it - vars_.begin());
}

bool MultiPoly::is_constant() const {
    if (terms_.empty()) return true;
    if (terms_.size() > 1) return false;
    const auto& e = terms_.begin()->first;
    return std::all_of(e.begin(), e.end(), [](unsigned k) { return k == 0; });
}

Rational MultiPoly::constant_term() const {
    Exponents zero(vars_.size(), 0);
    auto it = terms_.find(zero);
    return it == terms_.end() ? Rational(0) : it->second;
}

int MultiPoly::total_degree() const {
    if (terms_.empty()) return -1;
    const auto& e = terms_.rbegin()->first;
    return static_cast<int>(std::accumulate(e.begin(), e.end(), 0u));
}

int MultiPoly::degree(std::string_view v) const {
    if (terms_.empty()) return -1;
    auto i = index_of(v);
    if (!i) return 0;
    unsigned d = 0;
    for (auto& [e, c] : terms_) d = std::max(d, e[*i]);
    return static_cast<int>(d);
}

std::pair<Exponents, Rational> MultiPoly::leading_term() const {
    if (terms_.empty()) throw Error("leading term of zero polynomial");
    return *terms_.rbegin();
}

std::vector<std::string> MultiPoly::used_variables() const {
    std::vector<std::string> out;
    for (std::size_t i = 0; i < vars_.size(); ++i)
        for (auto& [e, c] : terms_)
            if (e[i] > 0) {
                out.push_back(vars_[i]);
                break;
            }
    return out;
}

MultiPoly MultiPoly::with_variables(const std::vector<std::string>& vars) const {
    MultiPoly out(vars);
    if (out.vars_ == vars_) {
        out.terms_ = terms_;
        return out;
    }
    std::vector<std::size_t> pos(vars_.size());
    for (std::size_t i = 0; i < vars_.size(); ++i) {
        auto j = out.index_of(vars_[i]);
        if (!j) throw UnknownVariable("cannot embed: variable '" + vars_[i] + "' missing");
        pos[i] = *j;
    }
    for (auto& [e, c] : terms_) {
        Exponents ne(out.vars_.size(), 0);
        for (std::size_t i = 0; i < e.size(); ++i) ne[pos[i]] = e[i];
        out.terms_.emplace(std::move(ne), c);
    }
    return out;
}

MultiPoly MultiPoly::drop_unused() const {
    auto used = used_variables();
    MultiPoly out(used);
    std::vector<std::size_t> keep;
    for (auto& u : used) keep.push_back(*index_of(u));
    for (auto& [e, c] : terms_) {
        Exponents ne;
        ne.reserve(keep.size());
        for (auto k : keep) ne.push_back(e[k]);
        out.terms_.emplace(std::move(ne), c);
    }
    return out;
}

MultiPoly MultiPoly::monic() const {
    if (terms_.empty()) return *this;
    return *this / leading_coefficient();
}

void MultiPoly::add_term(const Exponents& e, const Rational& c) {
    if (e.size() != vars_.size()) throw Error("exponent arity mismatch");
    if (c == 0) return;
    auto [it, inserted] = terms_.emplace(e, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

MultiPoly MultiPoly::operator-() const {
    MultiPoly out = *this;
    for (auto& [e, c] : out.terms_) c = -c;
    return out;
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& q) {
    if (vars_ != q.vars_) {
        auto merged = merge_variables(vars_, q.vars_);
        *this = with_variables(merged);
        MultiPoly qq = q.with_variables(merged);
        for (auto& [e, c] : qq.terms_) add_term(e, c);
        return *this;
    }
    for (auto& [e, c] : q.terms_) add_term(e, c);
    return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& q) { return *this += -q; }

MultiPoly& MultiPoly::operator*=(const MultiPoly& q) { return *this = *this * q; }

MultiPoly& MultiPoly::operator*=(const Rational& c) {
    if (c == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& [e, v] : terms_) v *= c;
    return *this;
}

MultiPoly operator*(const MultiPoly& p, const MultiPoly& q) {
    auto merged = merge_variables(p.vars_, q.vars_);
    const MultiPoly a = p.vars_ == merged ? p : p.with_variables(merged);
    const MultiPoly b = q.vars_ == merged ? q : q.with_variables(merged);
    MultiPoly out(merged);
    Exponents e(merged.size());
    for (auto& [ea, ca] : a.terms_)
        for (auto& [eb, cb] : b.terms_) {
            for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
            out.add_term(e, ca * cb);
        }
    return out;
}

MultiPoly operator/(MultiPoly p, const Rational& c) {
    if (c == 0) throw Error("division by zero");
    for (auto& [e, v] : p.terms_) v /= c;
    return p;
}

bool operator==(const MultiPoly& p, const MultiPoly& q) {
    if (p.vars_ == q.vars_) return p.terms_ == q.terms_;
    auto merged = merge_variables(p.vars_, q.vars_);
    return p.with_variables(merged).terms_ == q.with_variables(merged).terms_;
}

MultiPoly pow(const MultiPoly& p, long e) {
    if (e < 0) throw Error("negative exponent in pow");
    MultiPoly result(p.variables());
    result += MultiPoly(1);
    MultiPoly base = p;
    while (e > 0) {
        if (e & 1) result *= base;
        e >>= 1;
        if (e) base *= base;
    }
    return result;
}

MultiPoly partial_derivative(const MultiPoly& p, std::string_view v) {
    auto i = p.index_of(v);
    if (!i) throw UnknownVariable("unknown variable '" + std::string(v) + "'");
    MultiPoly out(p.variables());
    for (auto& [e, c] : p.terms()) {
        if (e[*i] == 0) continue;
        Exponents ne = e;
        ne[*i] -= 1;
        out.add_term(ne, c * e[*i]);
    }
    return out;
}

MultiPoly substitute(const MultiPoly& p, const std::map<std::string, MultiPoly>& map) {
    const auto& vars = p.variables();
    std::vector<std::string> kept;
    std::vector<const MultiPoly*> image(vars.size(), nullptr);
    for (std::size_t i = 0; i < vars.size(); ++i) {
        auto it = map.find(vars[i]);
        if (it != map.end())
            image[i] = &it->second;
        else
            kept.push_back(vars[i]);
    }
    // Cache powers of each image polynomial.
    std::vector<std::vector<MultiPoly>> powers(vars.size());
    auto power_of = [&](std::size_t i, unsigned k) -> const MultiPoly& {
        auto& cache = powers[i];
        if (cache.empty()) cache.push_back(MultiPoly(1));
        while (cache.size() <= k) cache.push_back(cache.back() * *image[i]);
        return cache[k];
    };
    MultiPoly out(kept);
    std::map<Exponents, std::vector<std::pair<Exponents, Rational>>> grouped;
    for (auto& [e, c] : p.terms()) {
        Exponents key(vars.size(), 0);
        Exponents rest;
        for (std::size_t i = 0; i < vars.size(); ++i) {
            if (image[i])
                key[i] = e[i];
            else
                rest.push_back(e[i]);
        }
        grouped[key].push_back({rest, c});
    }
    for (auto& [key, items] : grouped) {
        MultiPoly factor(1);
        for (std::size_t i = 0; i < vars.size(); ++i)
            if (image[i] && key[i] > 0) factor *= power_of(i, key[i]);
        MultiPoly partial(kept);
        for (auto& [rest, c] : items) partial.add_term(rest, c);
        out += partial * factor;
    }
    return out;
}

MultiPoly translate(const MultiPoly& p, const std::map<std::string, Rational>& shift) {
    std::map<std::string, MultiPoly> map;
    for (auto& [v, c] : shift)
        if (c != 0) map.emplace(v, MultiPoly::var(v) + MultiPoly(c));
    if (map.empty()) return p;
    return substitute(p, map).with_variables(merge_variables(p.variables(), {}));
}

std::optional<MultiPoly> try_divide(const MultiPoly& p, const MultiPoly& q) {
    if (q.is_zero()) throw Error("division by zero polynomial");
    auto merged = merge_variables(p.variables(), q.variables());
    MultiPoly r = p.with_variables(merged);
    MultiPoly d = q.with_variables(merged);
    MultiPoly quotient(merged);
    auto [le, lc] = d.leading_term();
    while (!r.is_zero()) {
        auto [re, rc] = r.leading_term();
        Exponents te(merged.size());
        for (std::size_t i = 0; i < te.size(); ++i) {
            if (re[i] < le[i]) return std::nullopt;
            te[i] = re[i] - le[i];
        }
        MultiPoly t(merged);
        t.add_term(te, rc / lc);
        quotient += t;
        r -= t * d;
    }
    return quotient;
}

MultiPoly exact_divide(const MultiPoly& p, const MultiPoly& q) {
    auto r = try_divide(p, q);
    if (!r) throw NotDivisible("not divisible: " + to_string(p) + " by " + to_string(q));
    return *r;
}

PowerSplit extract_power(const MultiPoly& p, const MultiPoly& q) {
    if (q.is_constant()) throw Error("extract_power needs a non-constant divisor");
    if (p.is_zero()) return {Order::infinity(), p};
    MultiPoly r = p;
    int k = 0;
    while (auto next = try_divide(r, q)) {
        r = std::move(*next);
        ++k;
    }
    return {Order(k), r};
}

std::vector<MultiPoly> coefficients_in(const MultiPoly& p, std::string_view v) {
    auto i = p.index_of(v);
    std::vector<std::string> rest;
    for (auto& name : p.variables())
        if (name != v) rest.push_back(name);
    if (!i) return {p.is_zero() ? MultiPoly(rest) : p};
    std::vector<MultiPoly> out(p.degree(v) + 1, MultiPoly(rest));
    for (auto& [e, c] : p.terms()) {
        Exponents ne;
        for (std::size_t j = 0; j < e.size(); ++j)
            if (j != *i) ne.push_back(e[j]);
        out[e[*i]].add_term(ne, c);
    }
    return out;
}

MultiPoly from_coefficients(const std::vector<MultiPoly>& coeffs, const std::string& v) {
    MultiPoly out(std::vector<std::string>{v});
    MultiPoly x = MultiPoly::var(v);
    MultiPoly xp(1);
    for (auto& c : coeffs) {
        out += c * xp;
        xp *= x;
    }
    return out;
}

std::vector<MultiPoly> homogeneous_components(const MultiPoly& p,
                                              const std::vector<Rational>& point) {
    const auto& vars = p.variables();
    if (point.size() != vars.size()) throw Error("point arity does not match variable count");
    std::map<std::string, Rational> shift;
    for (std::size_t i = 0; i < vars.size(); ++i) shift[vars[i]] = point[i];
    MultiPoly q = translate(p, shift);
    int d = std::max(q.total_degree(), 0);
    std::vector<MultiPoly> parts(d + 1, MultiPoly(vars));
    for (auto& [e, c] : q.terms()) {
        unsigned deg = std::accumulate(e.begin(), e.end(), 0u);
        parts[deg].add_term(e, c);
    }
    return parts;
}

bool is_homogeneous(const MultiPoly& p) {
    if (p.is_zero()) return true;
    int d = p.total_degree();
    for (auto& [e, c] : p.terms())
        if (static_cast<int>(std::accumulate(e.begin(), e.end(), 0u)) != d) return false;
    return true;
}

Rational evaluate(const MultiPoly& p, const std::map<std::string, Rational>& at) {
    const auto& vars = p.variables();
    std::vector<Rational> val(vars.size());
    for (std::size_t i = 0; i < vars.size(); ++i) {
        auto it = at.find(vars[i]);
        if (it == at.end()) throw UnknownVariable("no value for variable '" + vars[i] + "'");
        val[i] = it->second;
    }
    Rational sum = 0;
    for (auto& [e, c] : p.terms()) {
        Rational t = c;
        for (std::size_t i = 0; i < e.size(); ++i) {
            if (e[i] == 0) continue;
            Rational b;
            mpz_pow_ui(b.get_num_mpz_t(), val[i].get_num_mpz_t(), e[i]);
            mpz_pow_ui(b.get_den_mpz_t(), val[i].get_den_mpz_t(), e[i]);
            t *= b;
        }
        sum += t;
    }
    return sum;
}

std::complex<double> evaluate_complex(const MultiPoly& p,
                                      const std::map<std::string, std::complex<double>>& at) {
    const auto& vars = p.variables();
    std::vector<std::complex<double>> val(vars.size());
    for (std::size_t i = 0; i < vars.size(); ++i) {
        auto it = at.find(vars[i]);
        if (it == at.end()) throw UnknownVariable("no value for variable '" + vars[i] + "'");
        val[i] = it->second;
    }
    std::complex<double> sum = 0;
    for (auto& [e, c] : p.terms()) {
        std::complex<double> t = c.get_d();
        for (std::size_t i = 0; i < e.size(); ++i)
            for (unsigned k = 0; k < e[i]; ++k) t *= val[i];
        sum += t;
    }
    return sum;
}

}  // namespace fibrant::poly
