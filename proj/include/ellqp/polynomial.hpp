#pragma once

#include <ellqp/local_field.hpp>

#include <initializer_list>

namespace ellqp {

/// Integer-coefficient polynomial; coefficient i belongs to x^i. Rational
/// inputs are handled exactly by callers scaling to integers first.
class ZPoly {
public:
    ZPoly() = default;
    explicit ZPoly(std::vector<Int> c) : c_(std::move(c)) { trim(); }
    ZPoly(std::initializer_list<long> c) {
        for (long x : c) c_.emplace_back(x);
        trim();
    }

    static ZPoly monomial(const Int& a, long k) {
        std::vector<Int> c(k + 1, 0);
        c[k] = a;
        return ZPoly(std::move(c));
    }

    long degree() const { return static_cast<long>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    Int coeff(long i) const { return (i < 0 || i > degree()) ? Int(0) : c_[i]; }
    const std::vector<Int>& coeffs() const { return c_; }
    const Int& leading() const { return c_.back(); }

    friend ZPoly operator+(const ZPoly& a, const ZPoly& b);
    friend ZPoly operator-(const ZPoly& a, const ZPoly& b);
    friend ZPoly operator*(const ZPoly& a, const ZPoly& b);
    ZPoly operator-() const;
    ZPoly mul_int(const Int& n) const;

    bool operator==(const ZPoly& o) const { return c_ == o.c_; }

    ZPoly derivative() const;
    Int content() const;
    ZPoly primitive_part() const;  // content removed, leading coefficient positive
    Int evaluate(const Int& x) const;

    /// Exact quotient in Q[x] (throws if division is not exact), returned as
    /// the primitive integer polynomial.
    ZPoly divide_exact_primitive(const ZPoly& g) const;

    /// Primitive gcd over Q via the subresultant PRS.
    static ZPoly gcd(ZPoly a, ZPoly b);

    std::string to_string() const;

private:
    void trim() {
        while (!c_.empty() && c_.back() == 0) c_.pop_back();
    }
    std::vector<Int> c_;
};

/// f / gcd(f, f'), computed exactly over the rationals and content-normalized.
ZPoly squarefree_part(const ZPoly& f);

/// v_p(Res(f, g)) computed by p-adic elimination on the Sylvester matrix.
/// Throws std::domain_error when the resultant is zero.
long resultant_valuation_p(const ZPoly& f, const ZPoly& g, long p);

/// Polynomial with coefficients in a tower field.
class KPoly {
public:
    KPoly() = default;
    KPoly(FieldPtr field, std::vector<FieldElement> c) : fld_(std::move(field)), c_(std::move(c)) {}

    static KPoly from_zpoly(const ZPoly& f, const FieldPtr& K);

    const FieldPtr& field() const { return fld_; }
    long degree() const { return static_cast<long>(c_.size()) - 1; }
    const std::vector<FieldElement>& coeffs() const { return c_; }
    const FieldElement& coeff(long i) const { return c_[i]; }

    FieldElement evaluate(const FieldElement& x) const;
    KPoly derivative() const;

    /// Drop leading coefficients that are not provably nonzero.
    KPoly trimmed() const;

    /// Substitute x -> pi^s * x and divide by the minimal coefficient
    /// valuation; returns the normalized polynomial and the subtracted shift.
    KPoly scaled_by_uniformizer(long s, long* shift_out) const;

private:
    FieldPtr fld_;
    std::vector<FieldElement> c_;
};

/// pi-normalized v(Res(f, g)) over the coefficient field, via a Euclidean
/// remainder sequence. Throws precision_error when leading coefficients are
/// undecidable and std::domain_error when the resultant is zero to precision.
long resultant_valuation_K(KPoly a, KPoly b);

}  // namespace ellqp
