#include "fibrant/exactpoly.hpp"

#include <algorithm>

namespace fibrant::poly {

namespace {

std::vector<std::string> without(const std::vector<std::string>& vars, const std::string& v) {
    std::vector<std::string> out;
    for (auto& name : vars)
        if (name != v) out.push_back(name);
    return out;
}

MultiPoly content_in(const MultiPoly& p, const std::string& v) {
    auto coeffs = coefficients_in(p, v);
    MultiPoly c = coeffs.back();
    for (auto& q : coeffs) {
        if (c.is_constant() && !c.is_zero()) return MultiPoly(1);
        c = gcd(c, q);
    }
    return c;
}

// Scales p to integer coefficients with no common factor; keeps PRS numbers small.
MultiPoly integer_primitive(const MultiPoly& p) {
    if (p.is_zero()) return p;
    Integer num = 0, den = 1;
    for (auto& [e, c] : p.terms()) {
        mpz_gcd(num.get_mpz_t(), num.get_mpz_t(), c.get_num_mpz_t());
        mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), c.get_den_mpz_t());
    }
    MultiPoly out = p;
    out *= Rational(den, num);
    return out;
}

MultiPoly primitive_in(const MultiPoly& p, const std::string& v) {
    if (p.is_zero()) return p;
    return integer_primitive(exact_divide(p, content_in(p, v)));
}

// Dense univariate helpers used by rational root isolation.
using Dense = std::vector<Rational>;

void trim(Dense& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

Rational eval_dense(const Dense& a, const Rational& x) {
    Rational r = 0;
    for (auto it = a.rbegin(); it != a.rend(); ++it) r = r * x + *it;
    return r;
}

Dense derivative_dense(const Dense& a) {
    Dense d;
    for (std::size_t i = 1; i < a.size(); ++i) d.push_back(a[i] * static_cast<unsigned long>(i));
    return d;
}

Dense rem_dense(Dense a, const Dense& b) {
    trim(a);
    while (a.size() >= b.size() && !a.empty()) {
        Rational f = a.back() / b.back();
        std::size_t shift = a.size() - b.size();
        for (std::size_t i = 0; i < b.size(); ++i) a[i + shift] -= f * b[i];
        a.pop_back();
        trim(a);
    }
    return a;
}

int sign_changes(const std::vector<Dense>& seq, const Rational& x) {
    int changes = 0, last = 0;
    for (auto& s : seq) {
        int sg = sgn(eval_dense(s, x));
        if (sg == 0) continue;
        if (last != 0 && sg != last) ++changes;
        last = sg;
    }
    return changes;
}

Dense to_dense(const MultiPoly& p, const std::string& v) {
    Dense out;
    for (auto& c : coefficients_in(p, v)) out.push_back(c.constant_term());
    trim(out);
    return out;
}

std::string sole_variable(const MultiPoly& p) {
    auto used = p.used_variables();
    if (used.size() > 1) throw Error("expected a univariate polynomial, got " + to_string(p));
    return used.empty() ? std::string() : used[0];
}

// Real rational roots of a squarefree dense polynomial with nonzero constant term.
std::vector<Rational> isolate_rational(Dense a) {
    // Scale to integer coefficients.
    Integer l = 1;
    for (auto& c : a) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.get_den_mpz_t());
    for (auto& c : a) c *= l;
    Integer lead = abs(a.back().get_num());
    Rational bound = 0;
    for (auto& c : a) bound = std::max(bound, Rational(abs(c) / abs(a.back())));
    bound += 1;

    std::vector<Dense> sturm{a, derivative_dense(a)};
    while (true) {
        Dense r = rem_dense(sturm[sturm.size() - 2], sturm.back());
        if (r.empty()) break;
        for (auto& c : r) c = -c;
        sturm.push_back(r);
    }

    std::vector<Rational> roots;
    struct Box {
        Rational lo, hi;
        int count;
    };
    std::vector<Box> stack{{-bound, bound, sign_changes(sturm, -bound) - sign_changes(sturm, bound)}};
    while (!stack.empty()) {
        Box b = stack.back();
        stack.pop_back();
        if (b.count == 0) continue;
        if (b.count == 1 && (b.hi - b.lo) * lead < 1) {
            Rational lo_s = b.lo * lead, hi_s = b.hi * lead;
            Integer k0, k1;
            mpz_fdiv_q(k0.get_mpz_t(), lo_s.get_num_mpz_t(), lo_s.get_den_mpz_t());
            k0 += 1;  // strictly above lo
            mpz_fdiv_q(k1.get_mpz_t(), hi_s.get_num_mpz_t(), hi_s.get_den_mpz_t());
            for (Integer k = k0; k <= k1; ++k) {
                Rational x(k, lead);
                x.canonicalize();
                if (eval_dense(a, x) == 0) roots.push_back(x);
            }
            continue;
        }
        Rational mid = (b.lo + b.hi) / 2;
        int vm = sign_changes(sturm, mid);
        int vlo = sign_changes(sturm, b.lo);
        stack.push_back({b.lo, mid, vlo - vm});
        stack.push_back({mid, b.hi, b.count - (vlo - vm)});
    }
    std::sort(roots.begin(), roots.end());
    return roots;
}

}  // namespace

MultiPoly resultant(const MultiPoly& f, const MultiPoly& g, const std::string& v) {
    if (f.is_zero() || g.is_zero()) throw Error("degenerate resultant: zero polynomial");
    auto merged = merge_variables(merge_variables(f.variables(), g.variables()), {v});
    auto rest = without(merged, v);
    auto fc = coefficients_in(f.with_variables(merged), v);
    auto gc = coefficients_in(g.with_variables(merged), v);
    const std::size_t m = fc.size() - 1, n = gc.size() - 1;
    if (m == 0 && n == 0) return MultiPoly(rest) + MultiPoly(1);
    if (m == 0) return pow(fc[0], static_cast<long>(n)).with_variables(rest);
    if (n == 0) return pow(gc[0], static_cast<long>(m)).with_variables(rest);

    const std::size_t N = m + n;
    std::vector<std::vector<MultiPoly>> M(N, std::vector<MultiPoly>(N, MultiPoly(rest)));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j <= m; ++j) M[i][i + j] = fc[m - j];
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j <= n; ++j) M[n + i][i + j] = gc[n - j];

    // Fraction-free elimination.
    int sign = 1;
    MultiPoly prev(1);
    for (std::size_t k = 0; k + 1 < N; ++k) {
        if (M[k][k].is_zero()) {
            std::size_t r = k + 1;
            while (r < N && M[r][k].is_zero()) ++r;
            if (r == N) return MultiPoly(rest);
            std::swap(M[k], M[r]);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < N; ++i) {
            for (std::size_t j = k + 1; j < N; ++j)
                M[i][j] = exact_divide(M[k][k] * M[i][j] - M[i][k] * M[k][j], prev);
            M[i][k] = MultiPoly(rest);
        }
        prev = M[k][k];
    }
    MultiPoly det = M[N - 1][N - 1];
    if (sign < 0) det = -det;
    return det.with_variables(merge_variables(rest, det.variables()));
}

MultiPoly pseudo_remainder(const MultiPoly& a, const MultiPoly& b, const std::string& v) {
    if (b.is_zero()) throw Error("pseudo-remainder by zero");
    const int db = b.degree(v);
    const MultiPoly lcb = coefficients_in(b, v)[db];
    const MultiPoly x = MultiPoly::var(v);
    MultiPoly r = a;
    while (!r.is_zero() && r.degree(v) >= db) {
        int dr = r.degree(v);
        MultiPoly lcr = coefficients_in(r, v)[dr];
        r = lcb * r - lcr * pow(x, dr - db) * b;
    }
    return r;
}

MultiPoly gcd_univar(const MultiPoly& f, const MultiPoly& g, const std::string& v) {
    if (f.is_zero()) return g.monic();
    if (g.is_zero()) return f.monic();
    if (!f.involves(v) && !g.involves(v)) return gcd(f, g);
    MultiPoly cf = content_in(f, v), cg = content_in(g, v);
    MultiPoly c = gcd(cf, cg);
    MultiPoly pf = integer_primitive(exact_divide(f, cf)), pg = integer_primitive(exact_divide(g, cg));
    if (pf.degree(v) < pg.degree(v)) std::swap(pf, pg);
    while (!pg.is_zero() && pg.involves(v)) {
        MultiPoly r = pseudo_remainder(pf, pg, v);
        pf = std::move(pg);
        pg = primitive_in(r, v);
    }
    MultiPoly prim = pg.is_zero() ? pf : MultiPoly(1);
    return (c * prim).monic();
}

MultiPoly gcd(const MultiPoly& f, const MultiPoly& g) {
    if (f.is_zero()) return g.monic();
    if (g.is_zero()) return f.monic();
    if (f.is_constant() || g.is_constant()) return MultiPoly(1);
    if (auto q = try_divide(f, g)) return g.monic();
    if (auto q = try_divide(g, f)) return f.monic();
    for (auto& v : merge_variables(f.variables(), g.variables()))
        if (f.involves(v) || g.involves(v)) return gcd_univar(f, g, v);
    return MultiPoly(1);
}

MultiPoly gcd(const std::vector<MultiPoly>& ps) {
    MultiPoly g;
    for (auto& p : ps) {
        g = gcd(g, p);
        if (g.is_constant() && !g.is_zero()) break;
    }
    return g;
}

MultiPoly squarefree_part(const MultiPoly& p) {
    if (p.is_constant()) return p;
    std::vector<MultiPoly> ps{p};
    for (auto& v : p.used_variables()) ps.push_back(partial_derivative(p, v));
    return exact_divide(p, gcd(ps));
}

std::vector<RationalRoot> rational_roots(const MultiPoly& p) {
    if (p.is_zero()) throw Error("rational_roots of the zero polynomial");
    std::string v = sole_variable(p);
    if (v.empty()) return {};
    MultiPoly sqf = exact_divide(p, gcd(p, partial_derivative(p, v)));
    Dense a = to_dense(sqf, v);
    std::vector<Rational> roots;
    if (a[0] == 0) {
        roots.push_back(0);
        a.erase(a.begin());
    }
    if (a.size() > 1)
        for (auto& r : isolate_rational(a)) roots.push_back(r);
    std::sort(roots.begin(), roots.end());

    Dense full = to_dense(p, v);
    std::vector<RationalRoot> out;
    for (auto& r : roots) {
        int mult = 0;
        Dense q = full;
        while (q.size() > 1 && eval_dense(q, r) == 0) {
            // Synthetic division by (x - r).
            Dense next(q.size() - 1);
            Rational acc = 0;
            for (std::size_t i = q.size(); i-- > 1;) {
                acc = acc * r + q[i];
                next[i - 1] = acc;
            }
            q = next;
            ++mult;
        }
        out.push_back({r, mult});
    }
    return out;
}

std::vector<std::pair<MultiPoly, int>> squarefree_decomposition(const MultiPoly& p) {
    std::string v = sole_variable(p);
    std::vector<std::pair<MultiPoly, int>> out;
    if (v.empty()) return out;
    MultiPoly fp = partial_derivative(p, v);
    MultiPoly b = gcd(p, fp);
    MultiPoly c = exact_divide(p, b);
    MultiPoly d = exact_divide(fp, b) - partial_derivative(c, v);
    int i = 1;
    while (!c.is_constant()) {
        MultiPoly a = gcd(c, d);
        if (!a.is_constant()) out.push_back({a.monic(), i});
        c = exact_divide(c, a);
        d = exact_divide(d, a) - partial_derivative(c, v);
        ++i;
    }
    return out;
}

MultiPoly strip_rational_roots(const MultiPoly& p) {
    std::string v = sole_variable(p);
    MultiPoly q = p;
    if (v.empty()) return q;
    for (auto& r : rational_roots(p))
        q = exact_divide(q, pow(MultiPoly::var(v) - MultiPoly(r.value), r.multiplicity));
    return q;
}

}  // namespace fibrant::poly
