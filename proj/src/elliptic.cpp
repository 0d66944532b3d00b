#include <ellqp/elliptic.hpp>

#include <map>
#include <sstream>

namespace ellqp {

// ---------------------------------------------------------------- torsion group

TorsionGroup TorsionGroup::from_invariants(long a, long b) {
    if (a < 1 || b < 1 || b % a != 0) throw std::invalid_argument("TorsionGroup: need a | b");
    return TorsionGroup{a, b / a};
}

TorsionGroup TorsionGroup::from_order_exponent(long n, long e) {
    if (e < 1 || n % e != 0) throw std::invalid_argument("TorsionGroup: exponent must divide order");
    long m = n / e;
    if (e % m != 0) throw std::invalid_argument("TorsionGroup: not of rank <= 2");
    return TorsionGroup{m, e / m};
}

TorsionGroup TorsionGroup::direct_sum_coprime(const TorsionGroup& o) const {
    if (std::gcd(order(), o.order()) != 1)
        throw std::invalid_argument("direct_sum_coprime: orders not coprime");
    return from_invariants(m * o.m, m * k * o.m * o.k);
}

std::string TorsionGroup::to_string() const {
    std::ostringstream os;
    if (order() == 1) return "0";
    if (m == 1)
        os << "Z/" << k;
    else
        os << "Z/" << m << " x Z/" << m * k;
    return os.str();
}

// ---------------------------------------------------------------- curve model

CurveModel::CurveModel(Int a1, Int a2, Int a3, Int a4, Int a6)
    : a1_(std::move(a1)), a2_(std::move(a2)), a3_(std::move(a3)), a4_(std::move(a4)), a6_(std::move(a6)) {
    b2_ = a1_ * a1_ + 4 * a2_;
    b4_ = 2 * a4_ + a1_ * a3_;
    b6_ = a3_ * a3_ + 4 * a6_;
    b8_ = a1_ * a1_ * a6_ + 4 * a2_ * a6_ - a1_ * a3_ * a4_ + a2_ * a3_ * a3_ - a4_ * a4_;
    c4_ = b2_ * b2_ - 24 * b4_;
    c6_ = -b2_ * b2_ * b2_ + 36 * b2_ * b4_ - 216 * b6_;
    disc_ = -b2_ * b2_ * b8_ - 8 * b4_ * b4_ * b4_ - 27 * b6_ * b6_ + 9 * b2_ * b4_ * b6_;
    if (disc_ == 0) throw std::invalid_argument("CurveModel: singular model");
}

ReducedCurve reduce(const CurveModel& E, long p) {
    if (!E.good_reduction_at(p))
        throw bad_reduction("reduce: model not of good reduction at p (no minimalization performed)");
    auto m = [&](const Int& a) { return static_cast<long>(mod_pos(a, p)); };
    return ReducedCurve{p, m(E.a1()), m(E.a2()), m(E.a3()), m(E.a4()), m(E.a6())};
}

// ---------------------------------------------------------------- F_p structure

namespace {

struct FpPoint {
    bool inf = true;
    long x = 0, y = 0;
};

struct FpCurveOps {
    long p;
    long a1, a2, a3, a4, a6;

    long norm(long v) const { return ((v % p) + p) % p; }
    long inv(long v) const {
        long r = 1, b = norm(v), e = p - 2;
        while (e) {
            if (e & 1) r = r * b % p;
            b = b * b % p;
            e >>= 1;
        }
        return r;
    }
    FpPoint neg(const FpPoint& P) const {
        if (P.inf) return P;
        return {false, P.x, norm(-P.y - a1 * P.x - a3)};
    }
    FpPoint add(const FpPoint& P, const FpPoint& Q) const {
        if (P.inf) return Q;
        if (Q.inf) return P;
        if (P.x == Q.x && Q.y == norm(-P.y - a1 * P.x - a3)) return FpPoint{};
        long lam;
        if (P.x == Q.x)
            lam = norm((3 * P.x % p * P.x + 2 * a2 * P.x + a4 - a1 * P.y) % p) * inv(2 * P.y + a1 * P.x + a3) % p;
        else
            lam = norm(Q.y - P.y) * inv(Q.x - P.x) % p;
        long x3 = norm(lam * lam % p + a1 * lam - a2 - P.x - Q.x);
        long y3 = norm(lam * (P.x - x3) % p - P.y - a1 * x3 - a3);
        return {false, x3, y3};
    }
    FpPoint mul(long n, FpPoint P) const {
        FpPoint R{};
        while (n) {
            if (n & 1) R = add(R, P);
            P = add(P, P);
            n >>= 1;
        }
        return R;
    }
};

long point_order_fp(const FpCurveOps& ops, const FpPoint& P, long group_order) {
    std::vector<long> primes;
    long n = group_order;
    for (long q = 2; q * q <= n; ++q)
        if (n % q == 0) {
            primes.push_back(q);
            while (n % q == 0) n /= q;
        }
    if (n > 1) primes.push_back(n);
    long o = group_order;
    for (long q : primes)
        while (o % q == 0 && ops.mul(o / q, P).inf) o /= q;
    return o;
}

}  // namespace

FpGroupData fp_group_structure(const ReducedCurve& Ebar) {
    long p = Ebar.p;
    if (p > 10000) throw std::invalid_argument("fp_group_structure: p too large for enumeration");
    FpCurveOps ops{p, Ebar.a1, Ebar.a2, Ebar.a3, Ebar.a4, Ebar.a6};
    // nonsingularity
    long b2 = ops.norm(Ebar.a1 * Ebar.a1 + 4 * Ebar.a2);
    long b4 = ops.norm(2 * Ebar.a4 + Ebar.a1 * Ebar.a3);
    long b6 = ops.norm(Ebar.a3 * Ebar.a3 + 4 * Ebar.a6);
    long b8 = ops.norm(Ebar.a1 * Ebar.a1 % p * Ebar.a6 + 4 * Ebar.a2 * Ebar.a6 - Ebar.a1 * Ebar.a3 * Ebar.a4 +
                       Ebar.a2 * Ebar.a3 * Ebar.a3 - Ebar.a4 * Ebar.a4);
    long disc = ops.norm(-(b2 * b2 % p) * b8 - 8 * (b4 * b4 % p) * b4 - 27 * b6 * b6 + 9 * b2 * b4 % p * b6);
    if (disc == 0) throw bad_reduction("fp_group_structure: singular reduction");

    std::vector<FpPoint> pts;
    for (long x = 0; x < p; ++x) {
        long rhs = ops.norm(((x * x % p) * x + Ebar.a2 * x % p * x + Ebar.a4 * x + Ebar.a6) % p);
        long bco = ops.norm(Ebar.a1 * x + Ebar.a3);
        for (long y = 0; y < p; ++y)
            if ((y * y + bco * y) % p == rhs) pts.push_back({false, x, y});
    }
    long n = static_cast<long>(pts.size()) + 1;
    long expo = 1;
    for (const auto& P : pts) expo = lcm_long(expo, point_order_fp(ops, P, n));
    FpGroupData out;
    out.group = TorsionGroup::from_order_exponent(n, expo);
    out.count = n;
    out.ap = 1 + p - n;
    out.supersingular = (out.ap % p == 0);
    return out;
}

// ---------------------------------------------------------------- point arithmetic

CurvePoint point_neg(const CurveModel& E, const CurvePoint& P) {
    if (P.infinity) return P;
    const FieldPtr& K = P.x.field();
    FieldElement my = -(P.y) - P.x.mul_int(E.a1()) - K->integer(E.a3());
    return CurvePoint::affine(P.x, my);
}

CurvePoint point_add(const CurveModel& E, const CurvePoint& P, const CurvePoint& Q) {
    if (P.infinity) return Q;
    if (Q.infinity) return P;
    const FieldPtr& K = P.x.field();
    FieldElement a1 = K->integer(E.a1()), a2 = K->integer(E.a2()), a3 = K->integer(E.a3()),
                 a4 = K->integer(E.a4());
    if (P.x.equals(Q.x)) {
        FieldElement negy = -(P.y) - P.x * a1 - a3;
        if (Q.y.equals(negy)) return CurvePoint::at_infinity();
    }
    FieldElement lam = K->zero();
    if (P.x.equals(Q.x)) {
        FieldElement num = P.x * P.x;
        num = num.mul_int(3) + P.x * a2.mul_int(2) + a4 - P.y * a1;
        FieldElement den = P.y.mul_int(2) + P.x * a1 + a3;
        lam = num / den;
    } else {
        lam = (Q.y - P.y) / (Q.x - P.x);
    }
    FieldElement x3 = lam * lam + lam * a1 - a2 - P.x - Q.x;
    FieldElement y3 = lam * (P.x - x3) - P.y - x3 * a1 - a3;
    return CurvePoint::affine(x3, y3);
}

CurvePoint point_mul(const CurveModel& E, long n, const CurvePoint& P) {
    if (n < 0) return point_mul(E, -n, point_neg(E, P));
    CurvePoint R = CurvePoint::at_infinity();
    CurvePoint B = P;
    while (n) {
        if (n & 1) R = point_add(E, R, B);
        n >>= 1;
        if (n) B = point_add(E, B, B);
    }
    return R;
}

long point_order(const CurveModel& E, const CurvePoint& P, long bound) {
    CurvePoint Q = P;
    for (long k = 1; k <= bound; ++k) {
        if (Q.infinity) return k;
        Q = point_add(E, Q, P);
    }
    return 0;
}

// ---------------------------------------------------------------- division polynomials

namespace {

/// Odd psi_m (as A_m in Z[x]) and even psi_m / psi_2 (as B_m), with
/// psi_2^2 = S = 4x^3 + b2 x^2 + 2 b4 x + b6 eliminated recursively.
struct DivisionPolyTable {
    ZPoly S;
    std::map<long, ZPoly> A;  // odd indices
    std::map<long, ZPoly> B;  // even indices

    const ZPoly& getA(long m) {
        auto it = A.find(m);
        if (it != A.end()) return it->second;
        long k = (m - 1) / 2;
        ZPoly r;
        if (k % 2 == 0)
            r = S * S * getB(k + 2) * getB(k) * getB(k) * getB(k) - getA(k - 1) * getA(k + 1) * getA(k + 1) * getA(k + 1);
        else
            r = getA(k + 2) * getA(k) * getA(k) * getA(k) - S * S * getB(k - 1) * getB(k + 1) * getB(k + 1) * getB(k + 1);
        return A.emplace(m, std::move(r)).first->second;
    }

    const ZPoly& getB(long m) {
        auto it = B.find(m);
        if (it != B.end()) return it->second;
        long k = m / 2;
        ZPoly r;
        if (k % 2 == 0)
            r = getB(k) * (getB(k + 2) * getA(k - 1) * getA(k - 1) - getB(k - 2) * getA(k + 1) * getA(k + 1));
        else
            r = getA(k) * (getA(k + 2) * getB(k - 1) * getB(k - 1) - getA(k - 2) * getB(k + 1) * getB(k + 1));
        return B.emplace(m, std::move(r)).first->second;
    }
};

DivisionPolyTable make_table(const CurveModel& E) {
    DivisionPolyTable t;
    const Int &b2 = E.b2(), &b4 = E.b4(), &b6 = E.b6(), &b8 = E.b8();
    t.S = ZPoly(std::vector<Int>{b6, 2 * b4, b2, 4});
    t.A[1] = ZPoly{1};
    t.A[3] = ZPoly(std::vector<Int>{b8, 3 * b6, 3 * b4, b2, 3});
    t.B[0] = ZPoly();
    t.B[2] = ZPoly{1};
    t.B[4] = ZPoly(std::vector<Int>{b4 * b8 - b6 * b6, b2 * b8 - b4 * b6, 10 * b8, 10 * b6, 5 * b4, b2, 2});
    return t;
}

}  // namespace

ZPoly division_polynomial_x(const CurveModel& E, long n) {
    if (n < 2) throw std::invalid_argument("division_polynomial_x: n >= 2 required");
    DivisionPolyTable t = make_table(E);
    if (n % 2 == 1) return t.getA(n);
    return t.S * t.getB(n);
}

XMultiplication x_multiplication_polys(const CurveModel& E, long n) {
    if (n < 2) throw std::invalid_argument("x_multiplication_polys: n >= 2 required");
    DivisionPolyTable t = make_table(E);
    ZPoly x = ZPoly::monomial(1, 1);
    XMultiplication out;
    if (n % 2 == 1) {
        const ZPoly& An = t.getA(n);
        out.den = An * An;
        out.num = x * out.den - t.S * t.getB(n + 1) * t.getB(n - 1);
    } else {
        const ZPoly& Bn = t.getB(n);
        out.den = t.S * Bn * Bn;
        out.num = x * out.den - t.getA(n + 1) * t.getA(n - 1);
    }
    return out;
}

std::vector<CurvePoint> points_with_x(const CurveModel& E, const FieldPtr& K, const FieldElement& x0) {
    FieldElement b = x0.mul_int(E.a1()) + K->integer(E.a3());
    FieldElement c = -(x0 * x0 * x0 + (x0 * x0).mul_int(E.a2()) + x0.mul_int(E.a4()) + K->integer(E.a6()));
    std::vector<CurvePoint> out;
    for (const auto& y : quadratic_roots_in_y(b, c)) out.push_back(CurvePoint::affine(x0, y));
    return out;
}

FieldElement curve_residual(const CurveModel& E, const FieldPtr& K, const CurvePoint& P) {
    if (P.infinity) return K->zero();
    const FieldElement &x = P.x, &y = P.y;
    return y * y + (x * y).mul_int(E.a1()) + y.mul_int(E.a3()) -
           (x * x * x + (x * x).mul_int(E.a2()) + x.mul_int(E.a4()) + K->integer(E.a6()));
}

}  // namespace ellqp
