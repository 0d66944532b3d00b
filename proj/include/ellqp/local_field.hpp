#pragma once

#include <ellqp/padic.hpp>

#include <memory>
#include <vector>

namespace ellqp {

enum class FieldKind { qp, eisenstein, unramified };

class LocalField;
class FieldElement;
using FieldPtr = std::shared_ptr<const LocalField>;

/// Residue field F_{p^f} presented as F_p[t]/(m(t)); elements are coordinate
/// vectors of length f.
struct ResidueField {
    long p = 2;
    long f = 1;
    std::vector<long> modulus;  // monic of degree f: m_0..m_{f-1} (lead 1 implicit); empty for f = 1

    using Elem = std::vector<long>;

    Elem zero() const { return Elem(f, 0); }
    Elem one() const {
        Elem e(f, 0);
        e[0] = 1;
        return e;
    }
    bool is_zero(const Elem& a) const {
        for (long x : a)
            if (x % p != 0) return false;
        return true;
    }
    Elem add(const Elem& a, const Elem& b) const;
    Elem neg(const Elem& a) const;
    Elem mul(const Elem& a, const Elem& b) const;
    Elem pow(Elem a, long e) const;
    Elem inverse(const Elem& a) const;
    std::vector<Elem> all_elements() const;
    bool equal(const Elem& a, const Elem& b) const;
};

/// A finite extension of Q_p built as a stack of at most two quotient
/// constructions (Eisenstein or unramified) above the Q_p layer.
class LocalField : public std::enable_shared_from_this<LocalField> {
public:
    static FieldPtr qp(long p, long digits = Padic::kDefaultDigits);

    /// Q_p(mu_{p^n}): totally ramified of degree phi(p^n), defined by
    /// Phi_{p^n}(x+1); the generator is pi = zeta - 1. For phi(p^n) = 1 this
    /// is Q_p itself.
    static FieldPtr cyclotomic(long p, long n, long digits = Padic::kDefaultDigits);

    static FieldPtr extend(const FieldPtr& base, const std::vector<FieldElement>& monic_low_coeffs,
                           FieldKind kind);
    static FieldPtr extend_int(const FieldPtr& base, const std::vector<Int>& monic_low_coeffs,
                               FieldKind kind);

    long prime() const { return p_; }
    long digits() const { return digits_; }
    FieldKind kind() const { return kind_; }
    const FieldPtr& base() const { return base_; }
    const std::vector<FieldElement>& defining_low_coeffs() const { return def_; }
    long rel_degree() const { return rel_deg_; }
    long abs_e() const { return abs_e_; }
    long abs_f() const { return abs_f_; }
    long abs_degree() const { return abs_e_ * abs_f_; }
    const ResidueField& residue_field() const { return residue_; }

    /// Same tower rebuilt at a different base precision.
    FieldPtr with_digits(long digits) const;

    bool same_field(const LocalField& other) const;

    FieldElement zero() const;
    FieldElement one() const;
    FieldElement integer(const Int& n) const;
    FieldElement rational(const Int& num, const Int& den) const;
    FieldElement from_padic(const Padic& x) const;     // qp layer only
    FieldElement from_base(const FieldElement& x) const;
    FieldElement generator() const;                    // class of x; qp: error
    FieldElement uniformizer() const;
    FieldElement lift(const ResidueField::Elem& r) const;

    /// Tower serialization: one entry per layer from the bottom up.
    struct LayerInfo {
        std::string kind;
        std::vector<std::string> coeffs;
    };
    std::vector<LayerInfo> layers() const;

private:
    friend class FieldElement;
    LocalField() = default;

    long p_ = 2;
    long digits_ = Padic::kDefaultDigits;
    FieldKind kind_ = FieldKind::qp;
    FieldPtr base_;
    std::vector<FieldElement> def_;  // c0..c_{d-1} over base; monic lead implicit
    long rel_deg_ = 1;
    long abs_e_ = 1;
    long abs_f_ = 1;
    ResidueField residue_;
};

/// An element of a tower field: a coordinate vector over the base layer
/// (or a bare Padic on the Q_p layer). Immutable value semantics.
class FieldElement {
public:
    FieldElement() = default;

    const FieldPtr& field() const { return fld_; }

    bool is_provably_nonzero() const;

    /// Exact normalized valuation (v(uniformizer) = 1, v(p) = abs_e).
    /// Throws indeterminate_valuation if every coordinate is below precision,
    /// and precision_error if a below-precision coordinate could undercut the
    /// visible minimum.
    long valuation() const;

    /// Lower bound on the valuation, always available.
    long valuation_bound() const;

    /// pi-adic absolute precision capacity of this element.
    long abs_precision() const;

    FieldElement operator-() const;
    friend FieldElement operator+(const FieldElement& a, const FieldElement& b);
    friend FieldElement operator-(const FieldElement& a, const FieldElement& b);
    friend FieldElement operator*(const FieldElement& a, const FieldElement& b);
    FieldElement inverse() const;
    friend FieldElement operator/(const FieldElement& a, const FieldElement& b) {
        return a * b.inverse();
    }

    FieldElement mul_int(const Int& n) const;
    FieldElement pow(long e) const;

    /// Equality at shared precision.
    bool equals(const FieldElement& b) const;

    /// Image in the residue field (requires valuation >= 0).
    ResidueField::Elem residue() const;

    std::vector<Padic> flatten() const;
    static FieldElement unflatten(const FieldPtr& f, const std::vector<Padic>& v);

    std::string to_string() const;

    // Internal representation accessors (Q_p layer scalar / coords over base).
    const Padic& scalar() const { return scalar_; }
    const std::vector<FieldElement>& coords() const { return coords_; }

private:
    friend class LocalField;
    FieldPtr fld_;
    Padic scalar_;
    std::vector<FieldElement> coords_;

    static FieldElement make(const FieldPtr& f, std::vector<FieldElement> coords);
    static FieldElement make_qp(const FieldPtr& f, Padic x);
    void reduce_mod_defpoly(std::vector<FieldElement>& c) const;
};

}  // namespace ellqp
