#include <ellqp/classify.hpp>

#include <algorithm>

namespace ellqp {

bool in_hasse_window(long n, long p) {
    long d = n - (p + 1);
    return d * d < 4 * p;
}

namespace {

long window_cap(long p) {
    long n = p + 1;
    while (in_hasse_window(n + 1, p)) ++n;
    return n;
}

std::vector<long> divisors(long n) {
    std::vector<long> out;
    for (long d = 1; d <= n; ++d)
        if (n % d == 0) out.push_back(d);
    return out;
}

}  // namespace

std::set<ClassPair> set_I(long p) {
    std::set<ClassPair> out;
    for (long m : divisors(p - 1 > 0 ? p - 1 : 1))
        for (long k = 1; k * m * m <= window_cap(p); ++k)
            if (in_hasse_window(k * m * m, p)) out.insert({m, k});
    return out;
}

std::set<ClassPair> set_I_ord(long p) {
    std::set<ClassPair> out;
    for (const auto& mk : set_I(p))
        if ((mk.k * mk.m * mk.m) % p != 1 % p) out.insert(mk);
    return out;
}

std::set<ClassPair> set_I_ss(long p) {
    std::set<ClassPair> out;
    for (const auto& mk : set_I(p))
        if ((mk.k * mk.m * mk.m) % p == 1 % p) out.insert(mk);
    return out;
}

ReductionKind parse_kind(const std::string& s) {
    if (s == "good") return ReductionKind::good;
    if (s == "ordinary") return ReductionKind::ordinary;
    if (s == "supersingular") return ReductionKind::supersingular;
    throw std::invalid_argument("unknown reduction kind: " + s);
}

FieldLevel parse_level(const std::string& s) {
    if (s == "qp") return FieldLevel::qp;
    if (s == "mu4") return FieldLevel::mu4;
    if (s == "inf" || s == "mu_infty") return FieldLevel::mu_infty;
    throw std::invalid_argument("unknown level: " + s);
}

std::string kind_name(ReductionKind k) {
    switch (k) {
        case ReductionKind::good: return "good";
        case ReductionKind::ordinary: return "ordinary";
        default: return "supersingular";
    }
}

std::string level_name(FieldLevel l) {
    switch (l) {
        case FieldLevel::qp: return "qp";
        case FieldLevel::mu4: return "mu4";
        default: return "inf";
    }
}

long GroupList::max_order() const {
    long best = 0;
    for (const auto& g : groups) best = std::max(best, g.order());
    return best;
}

namespace {

std::set<TorsionGroup> from_pairs(const std::set<ClassPair>& s) {
    std::set<TorsionGroup> out;
    for (const auto& mk : s) out.insert(TorsionGroup{mk.m, mk.k});
    return out;
}

/// Printed three-way case split for the supersingular list over Q_p (p odd);
/// checked against the generated index set.
std::set<TorsionGroup> ss_list_odd(long p) {
    std::set<TorsionGroup> printed;
    if (p == 3) {
        printed = {TorsionGroup{1, 1}, TorsionGroup{1, 4}, TorsionGroup{1, 7}, TorsionGroup{2, 1}};
    } else if (p % 4 == 1) {
        printed = {TorsionGroup{1, 1 + p}};
    } else {
        printed = {TorsionGroup{1, 1 + p}, TorsionGroup{2, (1 + p) / 4}};
    }
    if (printed != from_pairs(set_I_ss(p)))
        throw std::logic_error("supersingular case split disagrees with the index set at p = " +
                               std::to_string(p));
    return printed;
}

}  // namespace

GroupList theorem_group_list(long p, ReductionKind kind, FieldLevel level) {
    GroupList out;
    out.provenance = kind_name(kind) + "/" + level_name(level) + "/p=" + std::to_string(p);
    if (level == FieldLevel::mu4) {
        if (p != 2 || kind != ReductionKind::ordinary)
            throw std::invalid_argument("not covered: mu4 level is classified only for p=2 ordinary");
        out.groups = {TorsionGroup{1, 4}, TorsionGroup{2, 1}, TorsionGroup{2, 2}, TorsionGroup{2, 4},
                      TorsionGroup{4, 1}};
        return out;
    }
    if (p == 2) {
        std::set<TorsionGroup> ord_qp = {TorsionGroup{1, 2}, TorsionGroup{1, 4}, TorsionGroup{1, 8},
                                         TorsionGroup{2, 1}, TorsionGroup{2, 2}};
        std::set<TorsionGroup> ss = {TorsionGroup{1, 1}, TorsionGroup{1, 3}, TorsionGroup{1, 5}};
        std::set<TorsionGroup> ord_inf = {TorsionGroup{1, 4}, TorsionGroup{1, 8}, TorsionGroup{2, 1},
                                          TorsionGroup{2, 4}, TorsionGroup{4, 1}};
        if (kind == ReductionKind::supersingular) {
            out.groups = ss;
        } else if (kind == ReductionKind::ordinary) {
            out.groups = level == FieldLevel::qp ? ord_qp : ord_inf;
        } else {
            out.groups = level == FieldLevel::qp ? ord_qp : ord_inf;
            out.groups.insert(ss.begin(), ss.end());
        }
        return out;
    }
    // p odd
    std::set<TorsionGroup> ss = ss_list_odd(p);
    if (kind == ReductionKind::supersingular) {
        out.groups = ss;  // identical at every cyclotomic level
        return out;
    }
    std::set<TorsionGroup> ord;
    if (level == FieldLevel::qp) {
        ord = from_pairs(set_I_ord(p));
        ord.insert(TorsionGroup{1, 1});
    } else {
        ord = from_pairs(set_I_ord(p));
        ord.insert(TorsionGroup{p, 1});
        if (p <= 5) ord.insert(TorsionGroup{p, 2});
    }
    if (kind == ReductionKind::ordinary) {
        out.groups = ord;
    } else {
        out.groups = ord;
        out.groups.insert(ss.begin(), ss.end());
        if (level == FieldLevel::qp) {
            // good = E(F_p) census list plus 0
            out.groups = from_pairs(set_I(p));
            out.groups.insert(TorsionGroup{1, 1});
        }
    }
    return out;
}

CensusResult census_Fp(long p) {
    if (p > 13) throw std::invalid_argument("census_Fp: guarded to p <= 13");
    CensusResult res;
    for (long a1 = 0; a1 < p; ++a1)
        for (long a2 = 0; a2 < p; ++a2)
            for (long a3 = 0; a3 < p; ++a3)
                for (long a4 = 0; a4 < p; ++a4)
                    for (long a6 = 0; a6 < p; ++a6) {
                        ReducedCurve rc{p, a1, a2, a3, a4, a6};
                        try {
                            FpGroupData d = fp_group_structure(rc);
                            res.all.insert(d.group);
                            if (d.supersingular)
                                res.supersingular.insert(d.group);
                            else
                                res.ordinary.insert(d.group);
                        } catch (const bad_reduction&) {
                            continue;
                        }
                    }
    return res;
}

long max_torsion_bound(long p, ReductionKind kind, FieldLevel level) {
    if (kind == ReductionKind::supersingular) {
        if (p == 2) return 5;
        if (p == 3) return 7;
        return p + 1;
    }
    if (level == FieldLevel::mu4) {
        if (p == 2) return 16;
        throw std::invalid_argument("max_torsion_bound: mu4 covered only for p = 2");
    }
    if (level == FieldLevel::qp) {
        if (p == 2) return 8;
        if (p == 3 && kind == ReductionKind::ordinary) return 6;
        return window_cap(p);
    }
    // mu_infty, ordinary or good
    if (p == 2) return 16;
    if (p <= 5) return 2 * p * p;
    return p * p;
}

}  // namespace ellqp
