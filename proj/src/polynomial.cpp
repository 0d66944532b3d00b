#include <ellqp/polynomial.hpp>

#include <numeric>
#include <sstream>

namespace ellqp {

ZPoly operator+(const ZPoly& a, const ZPoly& b) {
    std::vector<Int> c(std::max(a.c_.size(), b.c_.size()), 0);
    for (size_t i = 0; i < c.size(); ++i) c[i] = a.coeff(i) + b.coeff(i);
    return ZPoly(std::move(c));
}

ZPoly operator-(const ZPoly& a, const ZPoly& b) {
    std::vector<Int> c(std::max(a.c_.size(), b.c_.size()), 0);
    for (size_t i = 0; i < c.size(); ++i) c[i] = a.coeff(i) - b.coeff(i);
    return ZPoly(std::move(c));
}

ZPoly operator*(const ZPoly& a, const ZPoly& b) {
    if (a.is_zero() || b.is_zero()) return ZPoly();
    std::vector<Int> c(a.c_.size() + b.c_.size() - 1, 0);
    for (size_t i = 0; i < a.c_.size(); ++i) {
        if (a.c_[i] == 0) continue;
        for (size_t j = 0; j < b.c_.size(); ++j) c[i + j] += a.c_[i] * b.c_[j];
    }
    return ZPoly(std::move(c));
}

ZPoly ZPoly::operator-() const {
    std::vector<Int> c(c_);
    for (auto& x : c) x = -x;
    return ZPoly(std::move(c));
}

ZPoly ZPoly::mul_int(const Int& n) const {
    if (n == 0) return ZPoly();
    std::vector<Int> c(c_);
    for (auto& x : c) x *= n;
    return ZPoly(std::move(c));
}

ZPoly ZPoly::derivative() const {
    if (degree() < 1) return ZPoly();
    std::vector<Int> c(c_.size() - 1);
    for (size_t i = 1; i < c_.size(); ++i) c[i - 1] = Int(i) * c_[i];
    return ZPoly(std::move(c));
}

Int ZPoly::content() const {
    Int g = 0;
    for (const auto& x : c_) g = boost::multiprecision::gcd(g, x);
    return g;
}

ZPoly ZPoly::primitive_part() const {
    if (is_zero()) return *this;
    Int g = content();
    if (leading() < 0) g = -g;
    std::vector<Int> c(c_);
    for (auto& x : c) x /= g;
    return ZPoly(std::move(c));
}

Int ZPoly::evaluate(const Int& x) const {
    Int acc = 0;
    for (long i = degree(); i >= 0; --i) acc = acc * x + c_[i];
    return acc;
}

namespace {

// lc(b)^(deg a - deg b + 1) * a = q*b + r
ZPoly pseudo_rem(const ZPoly& a, const ZPoly& b) {
    ZPoly r = a;
    long db = b.degree();
    const Int& lb = b.leading();
    while (!r.is_zero() && r.degree() >= db) {
        long k = r.degree() - db;
        Int lr = r.leading();
        r = r.mul_int(lb) - (b * ZPoly::monomial(lr, k));
    }
    // scale remaining factor so the full pseudo-remainder relation holds
    return r;
}

}  // namespace

ZPoly ZPoly::gcd(ZPoly a, ZPoly b) {
    a = a.primitive_part();
    b = b.primitive_part();
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    if (a.degree() < b.degree()) std::swap(a, b);
    while (!b.is_zero() && b.degree() > 0) {
        ZPoly r = pseudo_rem(a, b);
        if (r.is_zero()) return b.primitive_part();
        a = b;
        b = r.primitive_part();
        if (a.degree() < b.degree()) std::swap(a, b);
    }
    if (!b.is_zero()) return ZPoly{1};  // nonzero constant: coprime over Q
    return a.primitive_part();
}

ZPoly ZPoly::divide_exact_primitive(const ZPoly& g) const {
    if (g.is_zero()) throw division_by_zero("divide_exact: zero divisor");
    // long division over Q, carried with a common denominator (powers of lc(g))
    ZPoly num = *this;
    const Int& lg = g.leading();
    long dg = g.degree();
    std::vector<Int> q(std::max<long>(degree() - dg + 1, 0), 0);
    Int den = 1;
    while (!num.is_zero() && num.degree() >= dg) {
        long k = num.degree() - dg;
        Int ln = num.leading();
        // num <- lc(g)*num - ln * x^k * g;  quotient accumulates ln/lc(g)^...
        for (auto& x : q) x *= lg;
        q[k] += ln;
        den *= lg;
        num = num.mul_int(lg) - (g * ZPoly::monomial(ln, k));
    }
    if (!num.is_zero()) throw std::domain_error("divide_exact: inexact division");
    return ZPoly(std::move(q)).primitive_part();
}

std::string ZPoly::to_string() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (long i = degree(); i >= 0; --i) {
        if (c_[i] == 0) continue;
        if (!first) os << (c_[i] > 0 ? " + " : " - ");
        else if (c_[i] < 0) os << "-";
        Int a = abs(c_[i]);
        if (a != 1 || i == 0) os << a.str();
        if (i >= 1) {
            if (a != 1) os << "*";
            os << "x";
            if (i > 1) os << "^" << i;
        }
        first = false;
    }
    return os.str();
}

ZPoly squarefree_part(const ZPoly& f) {
    if (f.is_zero()) throw std::domain_error("squarefree_part: zero polynomial");
    if (f.degree() == 0) return ZPoly{1};
    ZPoly g = ZPoly::gcd(f, f.derivative());
    if (g.degree() == 0) return f.primitive_part();
    return f.divide_exact_primitive(g);
}

// ---------------------------------------------------------------- resultants

long resultant_valuation_p(const ZPoly& f, const ZPoly& g, long p) {
    long m = f.degree(), n = g.degree();
    if (m < 0 || n < 0) throw std::domain_error("resultant: zero polynomial");
    if (m == 0 && n == 0) return 0;
    long N = m + n;
    long k = 96;
    while (true) {
        Int mod = pow_int(p, k);
        std::vector<std::vector<Int>> A(N, std::vector<Int>(N, 0));
        for (long r = 0; r < n; ++r)
            for (long j = 0; j <= m; ++j) A[r][r + j] = mod_pos(f.coeff(m - j), mod);
        for (long r = 0; r < m; ++r)
            for (long j = 0; j <= n; ++j) A[n + r][r + j] = mod_pos(g.coeff(n - j), mod);

        long total = 0;
        bool retry = false;
        for (long col = 0; col < N; ++col) {
            long piv = -1, pv = k;
            for (long r = col; r < N; ++r) {
                if (A[r][col] == 0) continue;
                long v = valuation_int(A[r][col], p);
                if (v < pv) {
                    pv = v;
                    piv = r;
                }
            }
            if (piv == -1) {
                retry = true;  // column vanishes mod p^k
                break;
            }
            std::swap(A[piv], A[col]);
            total += pv;
            Int unit = A[col][col] / pow_int(p, pv);
            Int inv = mod_inverse(unit, mod);
            for (long r = col + 1; r < N; ++r) {
                if (A[r][col] == 0) continue;
                Int factor = mod_pos((A[r][col] / pow_int(p, pv)) * inv, mod);
                for (long j = col; j < N; ++j)
                    A[r][j] = mod_pos(A[r][j] - factor * A[col][j], mod);
            }
        }
        if (!retry && total <= k - 8) return total;
        k *= 2;
        if (k > 8192) throw std::domain_error("resultant_valuation_p: resultant is zero (or precision exhausted)");
    }
}

// ---------------------------------------------------------------- K polynomials

KPoly KPoly::from_zpoly(const ZPoly& f, const FieldPtr& K) {
    std::vector<FieldElement> c;
    c.reserve(f.degree() + 1);
    for (long i = 0; i <= f.degree(); ++i) c.push_back(K->integer(f.coeff(i)));
    return KPoly(K, std::move(c));
}

FieldElement KPoly::evaluate(const FieldElement& x) const {
    if (c_.empty()) return fld_->zero();
    FieldElement acc = c_.back();
    for (long i = degree() - 1; i >= 0; --i) acc = acc * x + c_[i];
    return acc;
}

KPoly KPoly::derivative() const {
    if (degree() < 1) return KPoly(fld_, {});
    std::vector<FieldElement> c;
    c.reserve(degree());
    for (long i = 1; i <= degree(); ++i) c.push_back(c_[i].mul_int(i));
    return KPoly(fld_, std::move(c));
}

KPoly KPoly::trimmed() const {
    std::vector<FieldElement> c = c_;
    while (!c.empty() && !c.back().is_provably_nonzero()) c.pop_back();
    return KPoly(fld_, std::move(c));
}

KPoly KPoly::scaled_by_uniformizer(long s, long* shift_out) const {
    FieldElement pi = fld_->uniformizer();
    FieldElement piinv = pi.inverse();
    std::vector<FieldElement> c = c_;
    long minv = Padic::kInfPrec;
    for (long i = 0; i <= degree(); ++i) {
        long k = s * i;
        FieldElement factor = k >= 0 ? pi.pow(k) : piinv.pow(-k);
        c[i] = c_[i] * factor;
        if (c[i].is_provably_nonzero()) minv = std::min(minv, c[i].valuation());
    }
    if (minv == Padic::kInfPrec) throw precision_error("scaled_by_uniformizer: zero polynomial");
    FieldElement norm = minv >= 0 ? piinv.pow(minv) : pi.pow(-minv);
    for (auto& x : c) x = x * norm;
    if (shift_out) *shift_out = minv;
    return KPoly(fld_, std::move(c));
}

long resultant_valuation_K(KPoly a, KPoly b) {
    a = a.trimmed();
    b = b.trimmed();
    if (a.degree() < 0 || b.degree() < 0)
        throw std::domain_error("resultant_valuation_K: zero polynomial");
    long total = 0;
    while (true) {
        if (a.degree() < b.degree()) std::swap(a, b);
        if (b.degree() == 0) {
            total += a.degree() * b.coeff(0).valuation();
            return total;
        }
        // remainder of a by b
        long da = a.degree(), db = b.degree();
        FieldElement lb = b.coeff(db);
        FieldElement lbinv = lb.inverse();
        std::vector<FieldElement> r = a.coeffs();
        for (long i = da; i >= db; --i) {
            if (!r[i].is_provably_nonzero()) {
                if (r[i].valuation_bound() < r[i].abs_precision() - 1)
                    throw precision_error("resultant_valuation_K: ambiguous coefficient");
                continue;
            }
            FieldElement t = r[i] * lbinv;
            for (long j = 0; j <= db; ++j) {
                long idx = i - db + j;
                FieldElement sub = (j == db) ? t * lb : t * b.coeff(j);
                r[idx] = r[idx] - sub;
            }
        }
        r.resize(db);
        KPoly rem = KPoly(a.field(), std::move(r)).trimmed();
        if (rem.degree() < 0)
            throw std::domain_error("resultant_valuation_K: resultant zero to precision");
        total += (da - rem.degree()) * lb.valuation();
        a = b;
        b = rem;
    }
}

}  // namespace ellqp
