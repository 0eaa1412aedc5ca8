#pragma once

#include "fibrant/exactpoly.hpp"

#include <optional>
#include <string>
#include <vector>

namespace fibrant::monodromy {

using poly::Integer;

class SL2ZMatrix {
public:
    SL2ZMatrix(Integer a, Integer b, Integer c, Integer d);
    static SL2ZMatrix identity() { return {1, 0, 0, 1}; }
    static SL2ZMatrix T() { return {1, 1, 0, 1}; }

    const Integer& a() const { return m_[0]; }
    const Integer& b() const { return m_[1]; }
    const Integer& c() const { return m_[2]; }
    const Integer& d() const { return m_[3]; }
    Integer trace() const { return m_[0] + m_[3]; }

    SL2ZMatrix inverse() const;
    SL2ZMatrix pow(long k) const;
    std::string str() const;

    friend SL2ZMatrix operator*(const SL2ZMatrix& x, const SL2ZMatrix& y);
    friend bool operator==(const SL2ZMatrix& x, const SL2ZMatrix& y) { return x.m_ == y.m_; }
    friend bool operator!=(const SL2ZMatrix& x, const SL2ZMatrix& y) { return !(x == y); }
    friend bool operator<(const SL2ZMatrix& x, const SL2ZMatrix& y);

private:
    std::vector<Integer> m_;
};

inline SL2ZMatrix sl2z_mul(const SL2ZMatrix& x, const SL2ZMatrix& y) { return x * y; }
inline SL2ZMatrix sl2z_inv(const SL2ZMatrix& x) { return x.inverse(); }
inline bool sl2z_eq(const SL2ZMatrix& x, const SL2ZMatrix& y) { return x == y; }

// For a parabolic M != I with trace 2 returns the unique n with M conjugate to T^n.
std::optional<Integer> parabolic_class(const SL2ZMatrix& m);

// Exhaustive search for P with |entries| <= bound, det P = 1 and P M P^-1 = T.
bool is_conjugate_to_T(const SL2ZMatrix& m, long bound);

// All B with |entries| <= bound, B conjugate to T, AB = BA.
std::vector<SL2ZMatrix> solve_node_relation(const SL2ZMatrix& a, long bound);
// All B with |entries| <= bound, B conjugate to T, ABA = BAB; B = A dropped when distinct.
std::vector<SL2ZMatrix> solve_cusp_relation(const SL2ZMatrix& a, long bound, bool distinct = false);

// Conjugates B by the centralizer of A = T into the representative [[1,0],[-1,1]].
SL2ZMatrix normalize_pair(const SL2ZMatrix& a, const SL2ZMatrix& b);

bool node_relation_holds(const SL2ZMatrix& a, const SL2ZMatrix& b);
bool cusp_relation_holds(const SL2ZMatrix& a, const SL2ZMatrix& b);

}  // namespace fibrant::monodromy
