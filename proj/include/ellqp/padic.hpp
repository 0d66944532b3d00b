#pragma once

#include <ellqp/numeric.hpp>

namespace ellqp {

/// An element of Q_p at fixed precision: p^v * u with u a unit known mod p^N.
///
/// The additive identity is a distinguished marker carrying only the bound
/// "valuation >= prec"; an exact zero uses an effectively infinite bound.
/// Equality means agreement at the shared precision. Nonzero elements always
/// keep u coprime to p, so valuations of represented values are exact.
class Padic {
public:
    static constexpr long kDefaultDigits = 64;
    static constexpr long kInfPrec = (1L << 40);

    static Padic zero(long p, long abs_prec = kInfPrec) {
        Padic x;
        x.p_ = p;
        x.zero_ = true;
        x.zprec_ = abs_prec;
        return x;
    }

    static Padic from_unit(long p, Int unit, long val, long digits) {
        Padic x;
        x.p_ = p;
        x.zero_ = false;
        x.v_ = val;
        x.n_ = digits;
        x.u_ = mod_pos(unit, pow_int(p, digits));
        if (x.u_ == 0 || x.u_ % p == 0)
            throw std::invalid_argument("Padic::from_unit: unit divisible by p");
        return x;
    }

    static Padic from_integer(const Int& n, long p, long digits = kDefaultDigits) {
        if (n == 0) return zero(p);
        long v = valuation_int(n, p);
        return from_unit(p, n / pow_int(p, v), v, digits);
    }

    static Padic from_rational(const Int& num, const Int& den, long p, long digits = kDefaultDigits) {
        if (den == 0) throw division_by_zero("Padic::from_rational: zero denominator");
        if (num == 0) return zero(p);
        long vn = valuation_int(num, p), vd = valuation_int(den, p);
        Int un = num / pow_int(p, vn), ud = den / pow_int(p, vd);
        Int m = pow_int(p, digits);
        Int u = mod_pos(un * mod_inverse(ud, m), m);
        return from_unit(p, u, vn - vd, digits);
    }

    long prime() const { return p_; }
    bool is_zero_marker() const { return zero_; }
    bool is_provably_nonzero() const { return !zero_; }

    /// Exact valuation; requires a provably nonzero element.
    long valuation() const {
        if (zero_) throw indeterminate_valuation("valuation of zero marker");
        return v_;
    }

    /// Known lower bound for the valuation (exact when nonzero).
    long valuation_bound() const { return zero_ ? zprec_ : v_; }

    /// Number of significant base-p digits.
    long precision_digits() const {
        if (zero_) throw indeterminate_valuation("precision_digits of zero marker");
        return n_;
    }

    /// Absolute precision: the element is known modulo p^abs_precision().
    long abs_precision() const { return zero_ ? zprec_ : v_ + n_; }

    const Int& unit() const {
        if (zero_) throw indeterminate_valuation("unit of zero marker");
        return u_;
    }

    Padic truncated(long abs_prec) const {
        if (zero_) return zero(p_, std::min(zprec_, abs_prec));
        if (abs_prec >= v_ + n_) return *this;
        if (abs_prec <= v_) return zero(p_, abs_prec);
        Padic x = *this;
        x.n_ = abs_prec - v_;
        x.u_ = mod_pos(u_, pow_int(p_, x.n_));
        if (x.u_ == 0) return zero(p_, abs_prec);  // cannot happen: u is a unit
        return x;
    }

    Padic operator-() const {
        if (zero_) return *this;
        Padic x = *this;
        x.u_ = pow_int(p_, n_) - u_;
        return x;
    }

    friend Padic operator+(const Padic& a, const Padic& b) {
        a.check_same_prime(b);
        if (a.zero_ && b.zero_) return zero(a.p_, std::min(a.zprec_, b.zprec_));
        if (a.zero_) return b.truncated(a.zprec_);
        if (b.zero_) return a.truncated(b.zprec_);
        long cap = std::min(a.v_ + a.n_, b.v_ + b.n_);
        long m = std::min(a.v_, b.v_);
        Int mod = pow_int(a.p_, cap - m);
        Int s = mod_pos(a.u_ * pow_int(a.p_, a.v_ - m) + b.u_ * pow_int(a.p_, b.v_ - m), mod);
        if (s == 0) return zero(a.p_, cap);
        long w = valuation_int(s, a.p_);
        if (m + w >= cap) return zero(a.p_, cap);
        return from_unit(a.p_, s / pow_int(a.p_, w), m + w, cap - m - w);
    }

    friend Padic operator-(const Padic& a, const Padic& b) { return a + (-b); }

    friend Padic operator*(const Padic& a, const Padic& b) {
        a.check_same_prime(b);
        if (a.zero_ || b.zero_) {
            // v(ab) >= v-bound(a) + v-bound(b)
            long bound = a.valuation_bound() + b.valuation_bound();
            return zero(a.p_, std::min(bound, kInfPrec));
        }
        long n = std::min(a.n_, b.n_);
        Int u = mod_pos(a.u_ * b.u_, pow_int(a.p_, n));
        return from_unit(a.p_, u, a.v_ + b.v_, n);
    }

    Padic invert() const {
        if (zero_) throw division_by_zero("Padic::invert: zero to precision");
        return from_unit(p_, mod_inverse(u_, pow_int(p_, n_)), -v_, n_);
    }

    friend Padic operator/(const Padic& a, const Padic& b) { return a * b.invert(); }

    /// Equal at the shared precision.
    bool equals(const Padic& b) const {
        check_same_prime(b);
        if (zero_ && b.zero_) return true;
        if (zero_) return b.v_ >= zprec_;
        if (b.zero_) return v_ >= b.zprec_;
        if (v_ != b.v_) return false;
        long n = std::min(n_, b.n_);
        Int mod = pow_int(p_, n);
        return mod_pos(u_, mod) == mod_pos(b.u_, mod);
    }

    /// Rendering: p^v * (d0 + d1*p + ...) + O(p^(v+N)).
    std::string to_string() const;

private:
    void check_same_prime(const Padic& b) const {
        if (p_ != b.p_) throw std::invalid_argument("Padic: mixed primes");
    }

    long p_ = 2;
    bool zero_ = true;
    long zprec_ = kInfPrec;  // zero marker: valuation >= zprec_
    long v_ = 0;
    long n_ = 0;
    Int u_ = 0;
};

}  // namespace ellqp
