#include <ellqp/local_field.hpp>

#include <algorithm>
#include <sstream>

namespace ellqp {

// ---------------------------------------------------------------- residue field

ResidueField::Elem ResidueField::add(const Elem& a, const Elem& b) const {
    Elem r(f);
    for (long i = 0; i < f; ++i) r[i] = (a[i] + b[i]) % p;
    return r;
}

ResidueField::Elem ResidueField::neg(const Elem& a) const {
    Elem r(f);
    for (long i = 0; i < f; ++i) r[i] = (p - a[i] % p) % p;
    return r;
}

ResidueField::Elem ResidueField::mul(const Elem& a, const Elem& b) const {
    std::vector<long> c(2 * f - 1, 0);
    for (long i = 0; i < f; ++i)
        for (long j = 0; j < f; ++j) c[i + j] = (c[i + j] + a[i] * b[j]) % p;
    for (long i = 2 * f - 2; i >= f; --i) {
        long t = c[i] % p;
        if (t == 0) continue;
        for (long j = 0; j < f; ++j)
            c[i - f + j] = ((c[i - f + j] - t * modulus[j]) % p + p * p) % p;
        c[i] = 0;
    }
    c.resize(f);
    return c;
}

ResidueField::Elem ResidueField::pow(Elem a, long e) const {
    Elem r = one();
    while (e > 0) {
        if (e & 1) r = mul(r, a);
        a = mul(a, a);
        e >>= 1;
    }
    return r;
}

ResidueField::Elem ResidueField::inverse(const Elem& a) const {
    if (is_zero(a)) throw division_by_zero("residue inverse of 0");
    long q = 1;
    for (long i = 0; i < f; ++i) q *= p;
    return pow(a, q - 2);
}

std::vector<ResidueField::Elem> ResidueField::all_elements() const {
    std::vector<Elem> out;
    Elem cur(f, 0);
    while (true) {
        out.push_back(cur);
        long i = 0;
        while (i < f && ++cur[i] == p) cur[i++] = 0;
        if (i == f) break;
    }
    return out;
}

bool ResidueField::equal(const Elem& a, const Elem& b) const {
    for (long i = 0; i < f; ++i)
        if ((a[i] - b[i]) % p != 0) return false;
    return true;
}

// ---------------------------------------------------------------- factories

FieldPtr LocalField::qp(long p, long digits) {
    auto f = std::shared_ptr<LocalField>(new LocalField());
    f->p_ = p;
    f->digits_ = digits;
    f->kind_ = FieldKind::qp;
    f->residue_ = ResidueField{p, 1, {}};
    return f;
}

namespace {

std::vector<Int> cyclotomic_shifted_coeffs(long p, long n) {
    // Phi_{p^n}(x) = sum_{j<p} x^{j p^{n-1}}, then substitute x -> x + 1.
    long d = 1;
    for (long i = 0; i + 1 < n; ++i) d *= p;
    long deg = d * (p - 1);
    std::vector<Int> a(deg + 1, 0);
    for (long j = 0; j < p; ++j) a[j * d] = 1;
    for (long i = 0; i < deg; ++i)
        for (long j = deg - 1; j >= i; --j) a[j] += a[j + 1];
    return a;
}

bool residue_poly_irreducible(const ResidueField& rf, const std::vector<ResidueField::Elem>& low) {
    long d = static_cast<long>(low.size());
    auto eval = [&](const ResidueField::Elem& x) {
        ResidueField::Elem acc = rf.one();  // monic leading term
        for (long i = d - 1; i >= 0; --i) acc = rf.add(rf.mul(acc, x), low[i]);
        return acc;
    };
    for (const auto& x : rf.all_elements())
        if (rf.is_zero(eval(x))) return false;
    if (d <= 3) return true;
    // degree 4/5: exclude irreducible quadratic factors by trial division
    auto elems = rf.all_elements();
    for (const auto& q1 : elems)
        for (const auto& q0 : elems) {
            // divide x^d + ... by x^2 + q1 x + q0 over the residue field
            std::vector<ResidueField::Elem> r(low);
            r.push_back(rf.one());
            for (long i = d; i >= 2; --i) {
                ResidueField::Elem t = r[i];
                if (rf.is_zero(t)) continue;
                r[i - 1] = rf.add(r[i - 1], rf.neg(rf.mul(t, q1)));
                r[i - 2] = rf.add(r[i - 2], rf.neg(rf.mul(t, q0)));
                r[i] = rf.zero();
            }
            if (rf.is_zero(r[0]) && rf.is_zero(r[1])) {
                // a quadratic divides; irreducible only if that quadratic is reducible
                bool q_has_root = false;
                for (const auto& x : elems) {
                    auto v = rf.add(rf.add(rf.mul(x, x), rf.mul(q1, x)), q0);
                    if (rf.is_zero(v)) {
                        q_has_root = true;
                        break;
                    }
                }
                if (!q_has_root) return false;
            }
        }
    return true;
}

}  // namespace

FieldPtr LocalField::cyclotomic(long p, long n, long digits) {
    if (n < 1) throw std::invalid_argument("cyclotomic: n >= 1 required");
    auto coeffs = cyclotomic_shifted_coeffs(p, n);
    long deg = static_cast<long>(coeffs.size()) - 1;
    if (deg == 1) return qp(p, digits);
    auto base = qp(p, digits);
    std::vector<Int> low(coeffs.begin(), coeffs.begin() + deg);
    return extend_int(base, low, FieldKind::eisenstein);
}

FieldPtr LocalField::extend_int(const FieldPtr& base, const std::vector<Int>& low, FieldKind kind) {
    std::vector<FieldElement> c;
    c.reserve(low.size());
    for (const Int& x : low) c.push_back(base->integer(x));
    return extend(base, c, kind);
}

FieldPtr LocalField::extend(const FieldPtr& base, const std::vector<FieldElement>& low, FieldKind kind) {
    if (kind == FieldKind::qp) throw std::invalid_argument("extend: kind must name an extension");
    long d = static_cast<long>(low.size());
    if (d < 2) throw std::invalid_argument("extend: relative degree >= 2 required");
    long depth = 0;
    for (auto b = base; b && b->kind() != FieldKind::qp; b = b->base()) ++depth;
    if (depth >= 2) throw std::invalid_argument("extend: towers limited to two layers above Q_p");

    auto f = std::shared_ptr<LocalField>(new LocalField());
    f->p_ = base->prime();
    f->digits_ = base->digits();
    f->kind_ = kind;
    f->base_ = base;
    f->def_ = low;
    f->rel_deg_ = d;

    if (kind == FieldKind::eisenstein) {
        for (long i = 0; i < d; ++i) {
            if (low[i].valuation_bound() < 1)
                throw std::invalid_argument("extend: polynomial is not Eisenstein");
        }
        if (!low[0].is_provably_nonzero() || low[0].valuation() != 1)
            throw std::invalid_argument("extend: Eisenstein constant term must have valuation 1");
        f->abs_e_ = base->abs_e() * d;
        f->abs_f_ = base->abs_f();
        f->residue_ = base->residue_field();
    } else {
        if (base->kind() != FieldKind::qp)
            throw std::invalid_argument("extend: unramified layer only supported directly over Q_p");
        std::vector<ResidueField::Elem> rlow;
        rlow.reserve(d);
        for (const auto& c : low) rlow.push_back(c.residue());
        if (!residue_poly_irreducible(base->residue_field(), rlow))
            throw std::invalid_argument("extend: polynomial not irreducible over the residue field");
        f->abs_e_ = base->abs_e();
        f->abs_f_ = base->abs_f() * d;
        std::vector<long> m(d);
        for (long i = 0; i < d; ++i) m[i] = rlow[i].empty() ? 0 : rlow[i][0];
        f->residue_ = ResidueField{f->p_, d, m};
    }
    return f;
}

FieldPtr LocalField::with_digits(long digits) const {
    if (kind_ == FieldKind::qp) return qp(p_, digits);
    auto b = base_->with_digits(digits);
    std::vector<FieldElement> low;
    low.reserve(def_.size());
    for (const auto& c : def_) {
        // coefficients of our defining polynomials are integers by construction
        std::vector<Padic> flat = c.flatten();
        std::vector<Padic> lifted;
        lifted.reserve(flat.size());
        for (const auto& x : flat) {
            if (!x.is_provably_nonzero())
                lifted.push_back(Padic::zero(p_));
            else
                lifted.push_back(Padic::from_unit(p_, x.unit(), x.valuation(), digits));
        }
        low.push_back(FieldElement::unflatten(b, lifted));
    }
    return extend(b, low, kind_);
}

bool LocalField::same_field(const LocalField& o) const {
    if (this == &o) return true;
    if (p_ != o.p_ || kind_ != o.kind_ || rel_deg_ != o.rel_deg_) return false;
    if (kind_ == FieldKind::qp) return true;
    if (!base_->same_field(*o.base_)) return false;
    for (size_t i = 0; i < def_.size(); ++i)
        if (!def_[i].equals(o.def_[i])) return false;
    return true;
}

std::vector<LocalField::LayerInfo> LocalField::layers() const {
    std::vector<LayerInfo> out;
    if (kind_ == FieldKind::qp) return out;
    out = base_->layers();
    LayerInfo info;
    info.kind = kind_ == FieldKind::eisenstein ? "eisenstein" : "unramified";
    for (const auto& c : def_) info.coeffs.push_back(c.to_string());
    info.coeffs.push_back("1");
    out.push_back(info);
    return out;
}

// ---------------------------------------------------------------- element factories

FieldElement FieldElement::make(const FieldPtr& f, std::vector<FieldElement> coords) {
    FieldElement e;
    e.fld_ = f;
    e.coords_ = std::move(coords);
    return e;
}

FieldElement FieldElement::make_qp(const FieldPtr& f, Padic x) {
    FieldElement e;
    e.fld_ = f;
    e.scalar_ = std::move(x);
    return e;
}

FieldElement LocalField::zero() const {
    auto self = shared_from_this();
    if (kind_ == FieldKind::qp) return FieldElement::make_qp(self, Padic::zero(p_));
    std::vector<FieldElement> c(rel_deg_, base_->zero());
    return FieldElement::make(self, std::move(c));
}

FieldElement LocalField::one() const { return integer(1); }

FieldElement LocalField::integer(const Int& n) const {
    auto self = shared_from_this();
    if (kind_ == FieldKind::qp) return FieldElement::make_qp(self, Padic::from_integer(n, p_, digits_));
    std::vector<FieldElement> c(rel_deg_, base_->zero());
    c[0] = base_->integer(n);
    return FieldElement::make(self, std::move(c));
}

FieldElement LocalField::rational(const Int& num, const Int& den) const {
    auto self = shared_from_this();
    if (kind_ == FieldKind::qp)
        return FieldElement::make_qp(self, Padic::from_rational(num, den, p_, digits_));
    std::vector<FieldElement> c(rel_deg_, base_->zero());
    c[0] = base_->rational(num, den);
    return FieldElement::make(self, std::move(c));
}

FieldElement LocalField::from_padic(const Padic& x) const {
    if (kind_ != FieldKind::qp) throw std::invalid_argument("from_padic: not the Q_p layer");
    return FieldElement::make_qp(shared_from_this(), x);
}

FieldElement LocalField::from_base(const FieldElement& x) const {
    if (kind_ == FieldKind::qp) throw std::invalid_argument("from_base: Q_p has no base");
    if (!x.field()->same_field(*base_)) throw std::invalid_argument("from_base: wrong field");
    std::vector<FieldElement> c(rel_deg_, base_->zero());
    c[0] = x;
    return FieldElement::make(shared_from_this(), std::move(c));
}

FieldElement LocalField::generator() const {
    if (kind_ == FieldKind::qp) throw std::invalid_argument("generator: Q_p has none");
    std::vector<FieldElement> c(rel_deg_, base_->zero());
    c[1] = base_->one();
    return FieldElement::make(shared_from_this(), std::move(c));
}

FieldElement LocalField::uniformizer() const {
    if (kind_ == FieldKind::qp) return integer(p_);
    if (kind_ == FieldKind::eisenstein) return generator();
    return from_base(base_->uniformizer());
}

FieldElement LocalField::lift(const ResidueField::Elem& r) const {
    auto self = shared_from_this();
    if (kind_ == FieldKind::qp) return integer(r.empty() ? 0 : r[0]);
    if (kind_ == FieldKind::eisenstein) return from_base(base_->lift(r));
    // unramified over Q_p: sum r_i * gen^i with integer representatives
    std::vector<FieldElement> c(rel_deg_, base_->zero());
    for (long i = 0; i < rel_deg_ && i < static_cast<long>(r.size()); ++i)
        c[i] = base_->integer(r[i]);
    return FieldElement::make(self, std::move(c));
}

// ---------------------------------------------------------------- element arithmetic

namespace {
void check_fields(const FieldElement& a, const FieldElement& b) {
    if (!a.field() || !b.field() || !a.field()->same_field(*b.field()))
        throw std::invalid_argument("FieldElement: mixed fields");
}
}  // namespace

bool FieldElement::is_provably_nonzero() const {
    if (fld_->kind() == FieldKind::qp) return scalar_.is_provably_nonzero();
    return std::any_of(coords_.begin(), coords_.end(),
                       [](const FieldElement& c) { return c.is_provably_nonzero(); });
}

long FieldElement::valuation() const {
    if (fld_->kind() == FieldKind::qp) return scalar_.valuation();
    bool eis = fld_->kind() == FieldKind::eisenstein;
    long d = fld_->rel_degree();
    long best = Padic::kInfPrec;
    bool have = false;
    for (long i = 0; i < d; ++i) {
        if (!coords_[i].is_provably_nonzero()) continue;
        long cand = eis ? d * coords_[i].valuation() + i : coords_[i].valuation();
        best = std::min(best, cand);
        have = true;
    }
    long marker_floor = Padic::kInfPrec;
    for (long i = 0; i < d; ++i) {
        if (coords_[i].is_provably_nonzero()) continue;
        long b = eis ? d * coords_[i].valuation_bound() + i : coords_[i].valuation_bound();
        marker_floor = std::min(marker_floor, b);
    }
    if (!have) throw indeterminate_valuation("valuation: all coordinates below precision");
    if (marker_floor < best)
        throw precision_error("valuation: below-precision coordinate could undercut minimum");
    return best;
}

long FieldElement::valuation_bound() const {
    if (fld_->kind() == FieldKind::qp) return scalar_.valuation_bound();
    bool eis = fld_->kind() == FieldKind::eisenstein;
    long d = fld_->rel_degree();
    long best = Padic::kInfPrec;
    for (long i = 0; i < d; ++i) {
        long b = eis ? d * coords_[i].valuation_bound() + i : coords_[i].valuation_bound();
        best = std::min(best, b);
    }
    return best;
}

long FieldElement::abs_precision() const {
    if (fld_->kind() == FieldKind::qp) return scalar_.abs_precision();
    bool eis = fld_->kind() == FieldKind::eisenstein;
    long d = fld_->rel_degree();
    long cap = Padic::kInfPrec;
    for (long i = 0; i < d; ++i) {
        long c = eis ? d * coords_[i].abs_precision() + i : coords_[i].abs_precision();
        cap = std::min(cap, c);
    }
    return cap;
}

FieldElement FieldElement::operator-() const {
    if (fld_->kind() == FieldKind::qp) return make_qp(fld_, -scalar_);
    std::vector<FieldElement> c;
    c.reserve(coords_.size());
    for (const auto& x : coords_) c.push_back(-x);
    return make(fld_, std::move(c));
}

FieldElement operator+(const FieldElement& a, const FieldElement& b) {
    check_fields(a, b);
    if (a.fld_->kind() == FieldKind::qp) return FieldElement::make_qp(a.fld_, a.scalar_ + b.scalar_);
    std::vector<FieldElement> c;
    c.reserve(a.coords_.size());
    for (size_t i = 0; i < a.coords_.size(); ++i) c.push_back(a.coords_[i] + b.coords_[i]);
    return FieldElement::make(a.fld_, std::move(c));
}

FieldElement operator-(const FieldElement& a, const FieldElement& b) { return a + (-b); }

void FieldElement::reduce_mod_defpoly(std::vector<FieldElement>& c) const {
    long d = fld_->rel_degree();
    const auto& def = fld_->defining_low_coeffs();
    for (long i = static_cast<long>(c.size()) - 1; i >= d; --i) {
        FieldElement t = c[i];
        for (long j = 0; j < d; ++j) c[i - d + j] = c[i - d + j] - t * def[j];
        c[i] = t.field()->zero();
    }
    c.resize(d);
}

FieldElement operator*(const FieldElement& a, const FieldElement& b) {
    check_fields(a, b);
    if (a.fld_->kind() == FieldKind::qp) return FieldElement::make_qp(a.fld_, a.scalar_ * b.scalar_);
    long d = a.fld_->rel_degree();
    auto base = a.fld_->base();
    std::vector<FieldElement> c(2 * d - 1, base->zero());
    for (long i = 0; i < d; ++i) {
        if (!a.coords_[i].is_provably_nonzero() && a.coords_[i].valuation_bound() >= Padic::kInfPrec)
            continue;  // exact zero
        for (long j = 0; j < d; ++j) c[i + j] = c[i + j] + a.coords_[i] * b.coords_[j];
    }
    a.reduce_mod_defpoly(c);
    return FieldElement::make(a.fld_, std::move(c));
}

FieldElement FieldElement::mul_int(const Int& n) const {
    if (fld_->kind() == FieldKind::qp)
        return make_qp(fld_, scalar_ * Padic::from_integer(n, fld_->prime(), fld_->digits()));
    std::vector<FieldElement> c;
    c.reserve(coords_.size());
    for (const auto& x : coords_) c.push_back(x.mul_int(n));
    return make(fld_, std::move(c));
}

FieldElement FieldElement::pow(long e) const {
    FieldElement r = fld_->one(), x = *this;
    for (long k = e; k > 0; k >>= 1) {
        if (k & 1) r = r * x;
        if (k > 1) x = x * x;
    }
    return r;
}

bool FieldElement::equals(const FieldElement& b) const {
    check_fields(*this, b);
    FieldElement d = *this - b;
    return !d.is_provably_nonzero();
}

std::vector<Padic> FieldElement::flatten() const {
    if (fld_->kind() == FieldKind::qp) return {scalar_};
    std::vector<Padic> out;
    out.reserve(fld_->abs_degree());
    for (const auto& c : coords_) {
        auto sub = c.flatten();
        out.insert(out.end(), sub.begin(), sub.end());
    }
    return out;
}

FieldElement FieldElement::unflatten(const FieldPtr& f, const std::vector<Padic>& v) {
    if (f->kind() == FieldKind::qp) {
        if (v.size() != 1) throw std::invalid_argument("unflatten: size mismatch");
        return make_qp(f, v[0]);
    }
    long d = f->rel_degree();
    long sub = f->base()->abs_degree();
    if (static_cast<long>(v.size()) != d * sub) throw std::invalid_argument("unflatten: size mismatch");
    std::vector<FieldElement> c;
    c.reserve(d);
    for (long i = 0; i < d; ++i)
        c.push_back(unflatten(f->base(), std::vector<Padic>(v.begin() + i * sub, v.begin() + (i + 1) * sub)));
    return make(f, std::move(c));
}

FieldElement FieldElement::inverse() const {
    long D = fld_->abs_degree();
    if (D == 1) return make_qp(fld_, scalar_.invert());
    long p = fld_->prime();
    // Solve A x = e_1 where column j of A is flatten(a * basis_j).
    std::vector<std::vector<Padic>> A(D, std::vector<Padic>(D, Padic::zero(p)));
    for (long j = 0; j < D; ++j) {
        std::vector<Padic> ej(D, Padic::zero(p));
        ej[j] = Padic::from_integer(1, p, fld_->digits());
        auto col = (*this * unflatten(fld_, ej)).flatten();
        for (long i = 0; i < D; ++i) A[i][j] = col[i];
    }
    std::vector<Padic> rhs(D, Padic::zero(p));
    rhs[0] = Padic::from_integer(1, p, fld_->digits());

    // Gauss-Jordan with min-valuation pivoting.
    std::vector<long> row_of_col(D, -1);
    std::vector<bool> row_used(D, false);
    for (long j = 0; j < D; ++j) {
        long best = -1, bv = 0;
        for (long i = 0; i < D; ++i) {
            if (row_used[i] || !A[i][j].is_provably_nonzero()) continue;
            long v = A[i][j].valuation();
            if (best == -1 || v < bv) {
                best = i;
                bv = v;
            }
        }
        if (best == -1) throw precision_error("inverse: elimination lost all pivots");
        row_used[best] = true;
        row_of_col[j] = best;
        const Padic piv = A[best][j];
        for (long i = 0; i < D; ++i) {
            if (i == best || !A[i][j].is_provably_nonzero()) continue;
            Padic f = A[i][j] / piv;
            for (long k = j; k < D; ++k) A[i][k] = A[i][k] - f * A[best][k];
            rhs[i] = rhs[i] - f * rhs[best];
        }
    }
    std::vector<Padic> x(D, Padic::zero(p));
    for (long j = 0; j < D; ++j) x[j] = rhs[row_of_col[j]] / A[row_of_col[j]][j];
    return unflatten(fld_, x);
}

ResidueField::Elem FieldElement::residue() const {
    const auto& rf = fld_->residue_field();
    long vb = valuation_bound();
    if (vb < 0) {
        if (is_provably_nonzero() && valuation() < 0)
            throw std::domain_error("residue: negative valuation");
        throw precision_error("residue: valuation not provably >= 0");
    }
    if (fld_->kind() == FieldKind::qp) {
        ResidueField::Elem e(1, 0);
        if (scalar_.is_provably_nonzero() && scalar_.valuation() == 0)
            e[0] = static_cast<long>(scalar_.unit() % fld_->prime());
        return e;
    }
    if (fld_->kind() == FieldKind::eisenstein) return coords_[0].residue();
    ResidueField::Elem e(rf.f, 0);
    for (long i = 0; i < rf.f; ++i) {
        auto ci = coords_[i].residue();
        e[i] = ci.empty() ? 0 : ci[0];
    }
    return e;
}

std::string FieldElement::to_string() const {
    if (fld_->kind() == FieldKind::qp) return scalar_.to_string();
    std::ostringstream os;
    os << "[";
    for (size_t i = 0; i < coords_.size(); ++i) {
        if (i) os << ", ";
        os << coords_[i].to_string();
    }
    os << "]";
    return os.str();
}

}  // namespace ellqp
