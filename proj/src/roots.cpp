#include <ellqp/roots.hpp>
#include <cstdio>
#include <cstdlib>

#include <algorithm>
#include <optional>

namespace ellqp {

namespace {

constexpr long kVerifyMarginDigits = 4;

struct SlopeSegment {
    long valuation;  // common valuation of the roots on this segment
    long length;     // number of such roots (with multiplicity)
};

/// Integer slopes of the lower Newton polygon of (i, v_i).
std::vector<SlopeSegment> integer_slopes(const std::vector<long>& idx, const std::vector<long>& val) {
    std::vector<SlopeSegment> out;
    size_t n = idx.size();
    if (n < 2) return out;
    // lower convex hull, left to right
    std::vector<size_t> hull;
    for (size_t i = 0; i < n; ++i) {
        while (hull.size() >= 2) {
            size_t a = hull[hull.size() - 2], b = hull[hull.size() - 1];
            // keep turn convex: slope(a,b) <= slope(b,i)
            long lhs = (val[b] - val[a]) * (idx[i] - idx[b]);
            long rhs = (val[i] - val[b]) * (idx[b] - idx[a]);
            if (lhs <= rhs) break;
            hull.pop_back();
        }
        hull.push_back(i);
    }
    for (size_t h = 0; h + 1 < hull.size(); ++h) {
        size_t a = hull[h], b = hull[h + 1];
        long di = idx[b] - idx[a], dv = val[b] - val[a];
        if (dv % di != 0) continue;  // non-integer slope: no K-rational roots here
        out.push_back({-(dv / di), di});
    }
    return out;
}

struct RootAccumulator {
    std::vector<FieldElement> roots;

    void add(const FieldElement& r) {
        for (const auto& x : roots)
            if (x.equals(r)) return;
        roots.push_back(r);
    }
};

/// Newton iteration from a node already satisfying v(g(a)) > 2 v(g'(a)).
std::optional<FieldElement> newton_lift(const KPoly& g, const KPoly& dg, FieldElement x, long target) {
    for (int iter = 0; iter < 200; ++iter) {
        FieldElement fx = g.evaluate(x);
        if (getenv("ELLQP_TRACE"))
            fprintf(stderr, "  [newton] it=%d floor=%ld xprec=%ld target=%ld\n", iter,
                    fx.valuation_bound(), x.abs_precision(), target);
        if (fx.valuation_bound() >= target) return x;
        FieldElement dfx = dg.evaluate(x);
        if (!dfx.is_provably_nonzero()) return std::nullopt;
        x = x - fx / dfx;
    }
    return std::nullopt;
}

/// DFS for unit roots (first digit nonzero) of a normalized polynomial.
void unit_root_dfs(const KPoly& g, long depth, RootAccumulator& acc) {
    const FieldPtr& K = g.field();
    KPoly dg = g.derivative();
    const auto& rf = K->residue_field();
    auto digit_lifts = [&]() {
        std::vector<FieldElement> lifts;
        for (const auto& r : rf.all_elements()) lifts.push_back(K->lift(r));
        return lifts;
    }();
    FieldElement pi = K->uniformizer();
    long capacity = std::min<long>(K->abs_e() * K->digits(), Padic::kInfPrec);
    long target = capacity - K->abs_e() * kVerifyMarginDigits;

    struct Node {
        FieldElement a;
        long level;  // a is fixed through pi-digit positions < level
    };
    std::vector<Node> stack;
    std::vector<FieldElement> pi_pows{K->one()};
    auto pi_pow = [&](long k) {
        while (static_cast<long>(pi_pows.size()) <= k) pi_pows.push_back(pi_pows.back() * pi);
        return pi_pows[k];
    };

    // try a node: prune / record root / keep. A branch whose disc contains a
    // root must stay open until the level passes v(g'(a)): distinct roots can
    // share the disc up to exactly that depth.
    auto consider = [&](const FieldElement& a, long level) -> bool {
        FieldElement fa = g.evaluate(a);
        long fa_floor = fa.valuation_bound();
        bool fa_nonzero = fa.is_provably_nonzero();
        if (fa_nonzero && fa.valuation() < level) return false;  // not a root mod pi^level
        if (!fa_nonzero && fa_floor < level)
            throw precision_error("roots: branch undecidable at current precision");
        FieldElement dfa = dg.evaluate(a);
        bool dfa_known = dfa.is_provably_nonzero();
        bool resolved = false;
        if (fa_floor >= target) {
            acc.add(a);
            resolved = true;
        } else if (dfa_known && fa_floor > 2 * dfa.valuation()) {
            auto lifted = newton_lift(g, dg, a, target);
            if (!lifted) {
                if (getenv("ELLQP_TRACE")) fprintf(stderr, "[stall] level=%ld fa_floor=%ld vdf=%ld target=%ld cap=%ld\n", level, fa_floor, dfa.valuation(), target, capacity);
                throw precision_error("roots: Newton iteration stalled");
            }
            FieldElement r = *lifted;
            if (g.evaluate(r).valuation_bound() >= target) acc.add(r);
            resolved = true;
        }
        if (resolved) {
            // unique root in this disc once level > v(g'(a))
            if (dfa_known && level > dfa.valuation()) return false;
            if (!dfa_known && dfa.valuation_bound() >= target) return false;  // g' ~ 0: give up branch
            return true;
        }
        return true;
    };

    for (const auto& d0 : digit_lifts) {
        if (!d0.is_provably_nonzero()) continue;  // unit first digit
        if (consider(d0, 1)) stack.push_back({d0, 1});
    }
    while (!stack.empty()) {
        Node node = stack.back();
        stack.pop_back();
        if (node.level > depth)
            throw precision_error("roots: certified depth exceeded without resolution");
        FieldElement step = pi_pow(node.level);
        for (const auto& d : digit_lifts) {
            FieldElement a2 = node.a + d * step;
            if (consider(a2, node.level + 1)) stack.push_back({a2, node.level + 1});
        }
    }
}

std::vector<FieldElement> roots_with_slopes(const KPoly& g0, std::optional<long> zres_valuation,
                                            std::optional<long> caller_depth) {
    KPoly g = g0.trimmed();
    const FieldPtr& K = g.field();
    long d = g.degree();
    RootAccumulator acc;
    if (d <= 0) return acc.roots;

    // factor out roots at 0
    long nzero = 0;
    while (nzero <= d && !g.coeff(nzero).is_provably_nonzero()) ++nzero;
    if (nzero > 0) {
        bool exact_zero = true;
        for (long i = 0; i < nzero; ++i)
            if (g.coeff(i).valuation_bound() < Padic::kInfPrec) exact_zero = false;
        if (!exact_zero) throw precision_error("roots: constant term zero only to precision");
        acc.add(K->zero());
        std::vector<FieldElement> c(g.coeffs().begin() + nzero, g.coeffs().end());
        g = KPoly(K, std::move(c));
        d = g.degree();
        if (d == 0) return acc.roots;
    }

    // Newton polygon over the provably nonzero coefficients
    std::vector<long> idx, val;
    for (long i = 0; i <= d; ++i) {
        if (g.coeff(i).is_provably_nonzero()) {
            idx.push_back(i);
            val.push_back(g.coeff(i).valuation());
        }
    }
    for (auto seg : integer_slopes(idx, val)) {
        long s = seg.valuation;
        long shift = 0;
        KPoly h = g.scaled_by_uniformizer(s, &shift);
        long depth;
        if (caller_depth) {
            depth = *caller_depth;
        } else {
            // v(Res(h, h')) from v(Res(g, g')) under x -> pi^s x and division by pi^shift
            long vres = *zres_valuation + (d - 1) * (s * d - shift) + d * (s - shift);
            depth = 2 * std::max<long>(vres, 0) + 1;
        }
        RootAccumulator sub;
        unit_root_dfs(h, depth, sub);
        FieldElement pis = s >= 0 ? K->uniformizer().pow(s) : K->uniformizer().inverse().pow(-s);
        for (const auto& u : sub.roots) acc.add(u * pis);
    }
    return acc.roots;
}

}  // namespace

long separability_depth(const ZPoly& g, const LocalField& K) {
    if (g.degree() < 1) return 1;
    ZPoly dg = g.derivative();
    long v = resultant_valuation_p(g, dg, K.prime());
    return 2 * K.abs_e() * v + 1;
}

std::vector<FieldElement> roots_in_field(const ZPoly& g, const FieldPtr& K) {
    if (g.is_zero()) throw std::domain_error("roots_in_field: zero polynomial");
    if (g.degree() == 0) return {};
    if (g.degree() == 1) {
        FieldElement c0 = K->integer(g.coeff(0)), c1 = K->integer(g.coeff(1));
        return {-(c0 / c1)};
    }
    long vres = resultant_valuation_p(g, g.derivative(), K->prime());
    auto attempt = [&](const FieldPtr& F) {
        KPoly gk = KPoly::from_zpoly(g, F);
        return roots_with_slopes(gk, F->abs_e() * vres, std::nullopt);
    };
    try {
        return attempt(K);
    } catch (const precision_error&) {
        // retry once at doubled precision, then fail loudly
        auto K2 = K->with_digits(2 * K->digits());
        auto lifted = attempt(K2);
        // map the roots back into K by re-running Newton at original precision:
        // elements of K2 restrict to K by truncating coordinates
        std::vector<FieldElement> out;
        for (const auto& r2 : lifted) {
            auto flat = r2.flatten();
            std::vector<Padic> cut;
            cut.reserve(flat.size());
            for (const auto& x : flat) {
                if (!x.is_provably_nonzero())
                    cut.push_back(Padic::zero(K->prime(), x.valuation_bound()));
                else
                    cut.push_back(x.truncated(x.valuation() + K->digits()));
            }
            out.push_back(FieldElement::unflatten(K, cut));
        }
        return out;
    }
}

std::vector<FieldElement> roots_in_field(const KPoly& g, long depth) {
    return roots_with_slopes(g, std::nullopt, depth);
}

std::vector<FieldElement> quadratic_roots_in_y(const FieldElement& b, const FieldElement& c) {
    const FieldPtr& K = b.field();
    FieldElement disc = b * b - c.mul_int(4);
    if (!disc.is_provably_nonzero()) {
        // double root -b/2
        return {-(b / K->integer(2))};
    }
    long depth = disc.valuation() + 8 * K->abs_e();
    KPoly g(K, {c, b, K->one()});
    auto roots = roots_in_field(g, depth);
    return roots;
}

}  // namespace ellqp
