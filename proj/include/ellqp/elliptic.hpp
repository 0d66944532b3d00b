#pragma once

#include <ellqp/roots.hpp>

namespace ellqp {

struct bad_reduction : std::domain_error {
    explicit bad_reduction(const std::string& what) : std::domain_error(what) {}
};

/// Isomorphism class Z/m x Z/mk (G_{1,1} is the trivial group).
struct TorsionGroup {
    long m = 1;
    long k = 1;

    long order() const { return m * m * k; }
    long exponent() const { return m * k; }
    bool operator==(const TorsionGroup& o) const { return m == o.m && k == o.k; }
    bool operator<(const TorsionGroup& o) const { return std::pair(m, k) < std::pair(o.m, o.k); }

    /// Z/a x Z/b with a | b.
    static TorsionGroup from_invariants(long a, long b);
    /// Group of order n and exponent e (rank <= 2).
    static TorsionGroup from_order_exponent(long n, long e);
    /// Z/(this) x Z/(other) for coprime orders, componentwise.
    TorsionGroup direct_sum_coprime(const TorsionGroup& o) const;

    /// #G[n] = gcd(n, m) * gcd(n, mk).
    long kernel_size(long n) const { return std::gcd(n, m) * std::gcd(n, m * k); }
    /// Subgroup test for products of two cyclic groups.
    bool embeds_in(const TorsionGroup& o) const { return o.m % m == 0 && (o.m * o.k) % (m * k) == 0; }

    std::string to_string() const;
};

/// Integral Weierstrass model over Q, long form.
class CurveModel {
public:
    CurveModel(Int a1, Int a2, Int a3, Int a4, Int a6);

    const Int& a1() const { return a1_; }
    const Int& a2() const { return a2_; }
    const Int& a3() const { return a3_; }
    const Int& a4() const { return a4_; }
    const Int& a6() const { return a6_; }
    const Int& b2() const { return b2_; }
    const Int& b4() const { return b4_; }
    const Int& b6() const { return b6_; }
    const Int& b8() const { return b8_; }
    const Int& c4() const { return c4_; }
    const Int& c6() const { return c6_; }
    const Int& discriminant() const { return disc_; }

    bool good_reduction_at(long p) const { return disc_ % p != 0; }

private:
    Int a1_, a2_, a3_, a4_, a6_;
    Int b2_, b4_, b6_, b8_, c4_, c6_, disc_;
};

/// Reduction mod p of a good-reduction model.
struct ReducedCurve {
    long p;
    long a1, a2, a3, a4, a6;
};

/// Coefficient-wise reduction; requires v_p(disc) = 0 (no minimalization here).
ReducedCurve reduce(const CurveModel& E, long p);

struct FpGroupData {
    TorsionGroup group;
    long count;
    long ap;
    bool supersingular;  // a_p = 0 mod p
};

/// Exhaustive point enumeration and group structure over F_p (guard p <= 10^4).
FpGroupData fp_group_structure(const ReducedCurve& Ebar);

/// A point of E(K): infinity or an affine pair satisfying the long
/// Weierstrass equation at working precision.
struct CurvePoint {
    bool infinity = true;
    FieldElement x, y;

    static CurvePoint at_infinity() { return CurvePoint{}; }
    static CurvePoint affine(FieldElement px, FieldElement py) {
        return CurvePoint{false, std::move(px), std::move(py)};
    }
    bool equals(const CurvePoint& o) const {
        if (infinity || o.infinity) return infinity == o.infinity;
        return x.equals(o.x) && y.equals(o.y);
    }
};

CurvePoint point_neg(const CurveModel& E, const CurvePoint& P);
CurvePoint point_add(const CurveModel& E, const CurvePoint& P, const CurvePoint& Q);
CurvePoint point_mul(const CurveModel& E, long n, const CurvePoint& P);
/// Order of a torsion point, or 0 when it exceeds the bound.
long point_order(const CurveModel& E, const CurvePoint& P, long bound);

/// Square-free integer polynomial whose roots are exactly the x-coordinates
/// of the nonzero points of E[n] (the square-free part of psi_n^2, with y^2
/// eliminated through the Weierstrass relation).
ZPoly division_polynomial_x(const CurveModel& E, long n);

/// x([n]P) = num(x(P)) / den(x(P)) on points with [n]P != O.
struct XMultiplication {
    ZPoly num;  // monic, degree n^2
    ZPoly den;  // psi_n^2 as a polynomial in x, degree n^2 - 1
};
XMultiplication x_multiplication_polys(const CurveModel& E, long n);

/// The 0, 1 or 2 points of E(K) with the given x-coordinate.
std::vector<CurvePoint> points_with_x(const CurveModel& E, const FieldPtr& K, const FieldElement& x0);

/// On-curve residual y^2 + a1 xy + a3 y - (x^3 + a2 x^2 + a4 x + a6).
FieldElement curve_residual(const CurveModel& E, const FieldPtr& K, const CurvePoint& P);

}  // namespace ellqp
