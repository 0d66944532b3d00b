#include <ellqp/torsion.hpp>

#include <map>
#include <mutex>
#include <sstream>

namespace ellqp {

FieldPtr cyclotomic_level_field(long p, long m, long digits) {
    if (m <= 0) return LocalField::qp(p, digits);
    return LocalField::cyclotomic(p, m, digits);
}

std::vector<CurvePoint> torsion_points(const CurveModel& E, const FieldPtr& K, long n) {
    if (n < 2) return {};
    ZPoly f = division_polynomial_x(E, n);
    std::vector<CurvePoint> pts;
    for (const auto& x0 : roots_in_field(f, K))
        for (auto& P : points_with_x(E, K, x0)) pts.push_back(std::move(P));
    return pts;
}

long torsion_count(const CurveModel& E, const FieldPtr& K, long n) {
    if (n < 1) throw std::invalid_argument("torsion_count: n >= 1");
    if (n == 1) return 1;
    ZPoly f = division_polynomial_x(E, n);
    long t = 1;
    for (const auto& x0 : roots_in_field(f, K)) t += static_cast<long>(points_with_x(E, K, x0).size());
    return t;
}

namespace {

long ipow(long b, long e) {
    long r = 1;
    while (e-- > 0) r *= b;
    return r;
}

long log_base(long v, long q) {
    long e = 0;
    while (v % q == 0 && v > 1) {
        v /= q;
        ++e;
    }
    if (v != 1) throw std::logic_error("count is not a power of the candidate prime");
    return e;
}

/// Count #E(K)[q^{i+1}] given the explicit points of E(K)[q^i] by testing
/// q-divisibility of one generator per cyclic subgroup of order q^i.
long count_by_division(const CurveModel& E, const FieldPtr& K, long q, long i,
                       const std::vector<CurvePoint>& pts_qi, long s_i, long s_1) {
    long qi = ipow(q, i);
    // one representative per cyclic subgroup of order q^i
    std::vector<CurvePoint> reps;
    for (const auto& P : pts_qi) {
        if (!point_mul(E, qi / q, P).infinity) {  // exact order q^i
            bool seen = false;
            for (const auto& R : reps) {
                CurvePoint M = R;
                for (long k = 1; k < qi && !seen; ++k) {
                    if (M.equals(P)) seen = true;
                    M = point_add(E, M, R);
                }
                if (seen) break;
            }
            if (!seen) reps.push_back(P);
        }
    }
    XMultiplication xm = x_multiplication_polys(E, q);
    long divisible = 0;
    for (const auto& P : reps) {
        std::vector<FieldElement> c;
        long d = xm.num.degree();
        c.reserve(d + 1);
        for (long j = 0; j <= d; ++j)
            c.push_back(K->integer(xm.num.coeff(j)) - P.x * K->integer(xm.den.coeff(j)));
        KPoly gP = KPoly(K, std::move(c)).trimmed();
        long depth = 2 * resultant_valuation_K(gP, gP.derivative()) + 1 + 2 * K->abs_e();
        bool found = false;
        for (const auto& x0 : roots_in_field(gP, depth)) {
            for (const auto& Q : points_with_x(E, K, x0)) {
                CurvePoint qQ = point_mul(E, q, Q);
                if (qQ.equals(P) || qQ.equals(point_neg(E, P))) {
                    found = true;
                    break;
                }
            }
            if (found) break;
        }
        if (found) ++divisible;
    }
    // each divisible cyclic subgroup contributes phi(q^i) divisible points,
    // each with s_1 preimages
    return s_i + divisible * (qi - qi / q) * s_1;
}

}  // namespace

TorsionGroup q_primary_structure(const CurveModel& E, const FieldPtr& K, long q, long exponent_cap) {
    std::vector<long> s{1};
    s.push_back(torsion_count(E, K, q));
    long s1 = s[1];
    if (log_base(s1, q) == 0) return TorsionGroup{1, 1};
    for (long i = 1;; ++i) {
        if (exponent_cap >= 0 && i >= exponent_cap) break;
        if (i > 8) throw std::runtime_error("q_primary_structure: runaway escalation");
        long next;
        long target = ipow(q, i + 1);
        if (target <= 27) {
            next = torsion_count(E, K, target);
        } else {
            auto pts = torsion_points(E, K, ipow(q, i));
            next = count_by_division(E, K, q, i, pts, s[i], s1);
        }
        s.push_back(next);
        if (next == s[i]) break;
    }
    // increments determine Z/q^a x Z/q^b
    long a = 0, b = 0, prev_d = 2;
    for (size_t i = 1; i < s.size(); ++i) {
        long d = log_base(s[i], q) - log_base(s[i - 1], q);
        if (d > prev_d || d < 0 || d > 2)
            throw std::logic_error("q_primary_structure: inconsistent count sequence");
        prev_d = d;
        if (d >= 1) ++a;
        if (d == 2) ++b;
    }
    return TorsionGroup{ipow(q, b), ipow(q, a - b)};
}

namespace {

TorsionGroup prime_to_p_part(const TorsionGroup& g, long p) {
    long m = g.m, e = g.m * g.k;
    while (m % p == 0) m /= p;
    while (e % p == 0) e /= p;
    return TorsionGroup::from_invariants(m, e);
}

TorsionGroup slow_oracle_structure(const CurveModel& E, const FieldPtr& K, long bound) {
    std::vector<long> counts(bound + 1, 1);
    for (long n = 2; n <= bound; ++n) counts[n] = torsion_count(E, K, n);
    std::optional<TorsionGroup> found;
    for (long m = 1; m * m <= bound; ++m)
        for (long k = 1; m * m * k <= bound; ++k) {
            TorsionGroup g{m, k};
            bool ok = true;
            for (long n = 1; n <= bound && ok; ++n)
                if (g.kernel_size(n) != counts[n]) ok = false;
            if (ok) {
                if (found && !(*found == g))
                    throw std::logic_error("slow oracle: ambiguous count profile");
                found = g;
            }
        }
    if (!found) throw std::logic_error("slow oracle: no group matches the count profile");
    return *found;
}

template <typename Fn>
auto with_precision_retry(const TorsionOptions& opts, Fn&& fn) {
    try {
        return fn(opts.digits);
    } catch (const precision_error&) {
        return fn(2 * opts.digits);
    }
}

}  // namespace

TorsionReport torsion_structure(const CurveModel& E, long p, long level_m, const TorsionOptions& opts) {
    FpGroupData fp = fp_group_structure(reduce(E, p));
    TorsionReport rep;
    rep.p = p;
    rep.level = level_m;
    rep.kind = fp.supersingular ? ReductionKind::supersingular : ReductionKind::ordinary;

    auto run = [&](long digits) {
        FieldPtr K = cyclotomic_level_field(p, level_m, digits);
        if (opts.slow_oracle) {
            long bound = max_torsion_bound(p, ReductionKind::good,
                                           level_m == 0 ? FieldLevel::qp : FieldLevel::mu_infty);
            return slow_oracle_structure(E, K, bound);
        }
        // candidate primes: p and the primes dividing #E(F_p)
        std::vector<long> qs{p};
        long n = fp.count;
        for (long q = 2; q * q <= n; ++q)
            if (n % q == 0) {
                if (q != p) qs.push_back(q);
                while (n % q == 0) n /= q;
            }
        if (n > 1 && n != p) qs.push_back(n);
        TorsionGroup total{1, 1};
        for (long q : qs) total = total.direct_sum_coprime(q_primary_structure(E, K, q));
        return total;
    };
    rep.group = with_precision_retry(opts, run);
    std::ostringstream cert;
    cert << "counts stabilized over Q_" << p << (level_m > 0 ? "(mu_" : "")
         << (level_m > 0 ? std::to_string(ipow(p, level_m)) + ")" : "");
    rep.certificate = cert.str();
    return rep;
}

TorsionReport cyclotomic_torsion_infty(const CurveModel& E, long p, const TorsionOptions& opts) {
    FpGroupData fp = fp_group_structure(reduce(E, p));
    TorsionReport rep;
    rep.p = p;
    rep.level = -1;
    rep.level_infinity = true;
    rep.kind = fp.supersingular ? ReductionKind::supersingular : ReductionKind::ordinary;

    // prime-to-p part: unchanged along the totally ramified tower
    TorsionGroup away = prime_to_p_part(fp.group, p);

    std::ostringstream cert;
    cert << "prime-to-" << p << " part from E(F_" << p << ");";

    auto run = [&](long digits) {
        TorsionGroup prev{1, 1};
        for (long n = 1;; ++n) {
            long level = n + (p == 2 ? 1 : 0);
            if (level > 6) throw std::runtime_error("cyclotomic_torsion_infty: level cap exceeded");
            FieldPtr K = cyclotomic_level_field(p, level, digits);
            TorsionGroup un = q_primary_structure(E, K, p, n);
            if (n == 1 && un.order() == 1) {
                cert << " no " << p << "-torsion over mu_" << ipow(p, level)
                     << " (ramification bound: [" << p << "^n]-part is rational at level "
                     << (p == 2 ? "n+1" : "n") << ")";
                return un;
            }
            if (un.order() == prev.order()) {
                cert << " " << p << "-part stabilized at level " << level << ": [" << p << "^" << n
                     << "]-part equals [" << p << "^" << n - 1
                     << "]-part (ramification bound closes the escalation)";
                return un;
            }
            prev = un;
        }
    };
    TorsionGroup ppart = with_precision_retry(opts, run);
    rep.group = away.direct_sum_coprime(ppart);
    rep.certificate = cert.str();
    return rep;
}

long theorem_descent_level(long p, ReductionKind kind) {
    if (kind == ReductionKind::supersingular) return 0;
    if (kind == ReductionKind::ordinary) return p == 2 ? 3 : 1;
    throw std::invalid_argument("theorem_descent_level: kind must be ordinary or supersingular");
}

}  // namespace ellqp
