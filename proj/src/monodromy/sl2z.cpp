#include "fibrant/sl2z.hpp"

#include <algorithm>
#include <set>

namespace fibrant::monodromy {

SL2ZMatrix::SL2ZMatrix(Integer a, Integer b, Integer c, Integer d) : m_{a, b, c, d} {
    if (a * d - b * c != 1) throw Error("matrix " + str() + " does not have determinant 1");
}

SL2ZMatrix SL2ZMatrix::inverse() const { return {d(), -b(), -c(), a()}; }

SL2ZMatrix SL2ZMatrix::pow(long k) const {
    SL2ZMatrix base = k < 0 ? inverse() : *this;
    SL2ZMatrix out = identity();
    for (long i = 0; i < (k < 0 ? -k : k); ++i) out = out * base;
    return out;
}

std::string SL2ZMatrix::str() const {
    return "[[" + m_[0].get_str() + "," + m_[1].get_str() + "],[" + m_[2].get_str() + "," +
           m_[3].get_str() + "]]";
}

SL2ZMatrix operator*(const SL2ZMatrix& x, const SL2ZMatrix& y) {
    return {x.a() * y.a() + x.b() * y.c(), x.a() * y.b() + x.b() * y.d(),
            x.c() * y.a() + x.d() * y.c(), x.c() * y.b() + x.d() * y.d()};
}

bool operator<(const SL2ZMatrix& x, const SL2ZMatrix& y) {
    return std::lexicographical_compare(x.m_.begin(), x.m_.end(), y.m_.begin(), y.m_.end());
}

std::optional<Integer> parabolic_class(const SL2ZMatrix& m) {
    if (m.trace() != 2 || m == SL2ZMatrix::identity()) return std::nullopt;
    // N = M - I is nilpotent; (r, s) spans its left kernel.
    Integer x = m.a() - 1, y = m.b(), z = m.c(), w = m.d() - 1;
    Integer r = z, s = -x;
    if (r == 0 && s == 0) {
        r = 0;
        s = 1;
    }
    Integer g;
    mpz_gcd(g.get_mpz_t(), r.get_mpz_t(), s.get_mpz_t());
    r /= g;
    s /= g;
    // Complete (r, s) to a matrix P = [[p, q], [r, s]] of determinant 1.
    Integer gg, p, q, minus_r = -r;
    mpz_gcdext(gg.get_mpz_t(), p.get_mpz_t(), q.get_mpz_t(), s.get_mpz_t(), minus_r.get_mpz_t());
    // (p, q) N = n (r, s)
    Integer v0 = p * x + q * z, v1 = p * y + q * w;
    return r != 0 ? Integer(v0 / r) : Integer(v1 / s);
}

bool is_conjugate_to_T(const SL2ZMatrix& m, long bound) {
    if (m.trace() != 2 || m == SL2ZMatrix::identity()) return false;
    // P M = T P: the bottom row of P is a fixed row vector of M and the top
    // row (p, q) satisfies (p, q) M = (p, q) + (r, s).
    for (long r = -bound; r <= bound; ++r)
        for (long s = -bound; s <= bound; ++s) {
            if (r == 0 && s == 0) continue;
            if (r * m.a() + s * m.c() != r || r * m.b() + s * m.d() != s) continue;
            for (long p = -bound; p <= bound; ++p)
                for (long q = -bound; q <= bound; ++q) {
                    if (p * s - q * r != 1) continue;
                    if (p * m.a() + q * m.c() == p + r && p * m.b() + q * m.d() == q + s) return true;
                }
        }
    return false;
}

bool node_relation_holds(const SL2ZMatrix& a, const SL2ZMatrix& b) { return a * b == b * a; }
bool cusp_relation_holds(const SL2ZMatrix& a, const SL2ZMatrix& b) { return a * b * a == b * a * b; }

namespace {

// Every trace-2 determinant-1 matrix other than I with entries bounded by `bound`.
std::vector<SL2ZMatrix> parabolic_candidates(long bound) {
    std::vector<SL2ZMatrix> out;
    for (long a = -bound; a <= bound; ++a) {
        long d = 2 - a;
        if (d < -bound || d > bound) continue;
        long bc = -(a - 1) * (a - 1);
        for (long b = -bound; b <= bound; ++b) {
            if (b == 0) {
                if (bc != 0) continue;
                for (long c = -bound; c <= bound; ++c)
                    if (c != 0) out.emplace_back(a, 0, c, d);
                continue;
            }
            if (bc % b != 0) continue;
            long c = bc / b;
            if (c < -bound || c > bound) continue;
            if (a == 1 && b == 0 && c == 0) continue;
            out.emplace_back(a, b, c, d);
        }
    }
    return out;
}

std::vector<SL2ZMatrix> solve(const SL2ZMatrix& a, long bound,
                              bool (*relation)(const SL2ZMatrix&, const SL2ZMatrix&), bool distinct) {
    if (parabolic_class(a) != Integer(1)) throw Error("A must be conjugate to T");
    std::set<SL2ZMatrix> found;
    for (auto& b : parabolic_candidates(bound)) {
        if (distinct && b == a) continue;
        if (parabolic_class(b) != Integer(1)) continue;
        if (relation(a, b)) found.insert(b);
    }
    return {found.begin(), found.end()};
}

}  // namespace

std::vector<SL2ZMatrix> solve_node_relation(const SL2ZMatrix& a, long bound) {
    return solve(a, bound, node_relation_holds, false);
}

std::vector<SL2ZMatrix> solve_cusp_relation(const SL2ZMatrix& a, long bound, bool distinct) {
    return solve(a, bound, cusp_relation_holds, distinct);
}

SL2ZMatrix normalize_pair(const SL2ZMatrix& a, const SL2ZMatrix& b) {
    if (a != SL2ZMatrix::T()) throw Error("normalize_pair expects A = T");
    if (b == a || !cusp_relation_holds(a, b) || parabolic_class(b) != Integer(1))
        throw Error("matrix " + b.str() + " is not in the cusp-solution family of T");
    // Conjugation by T^k keeps the (2,1) entry and shifts the (1,1) entry by k c.
    if (b.c() == 0) throw Error("matrix " + b.str() + " is not in the cusp-solution family of T");
    Integer num = 1 - b.a();
    if (num % b.c() != 0) throw Error("matrix " + b.str() + " cannot be normalized");
    long k = Integer(num / b.c()).get_si();
    SL2ZMatrix out = SL2ZMatrix::T().pow(k) * b * SL2ZMatrix::T().pow(-k);
    if (out != SL2ZMatrix(1, 0, -1, 1)) throw Error("normalization of " + b.str() + " failed");
    return out;
}

}  // namespace fibrant::monodromy
