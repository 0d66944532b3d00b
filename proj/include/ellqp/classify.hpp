#pragma once

#include <ellqp/elliptic.hpp>

#include <set>

namespace ellqp {

/// Pair (m, k) indexing the group Z/m x Z/mk; membership in the index set I
/// means m | p-1 and (sqrt(p)-1)^2 < k m^2 < (sqrt(p)+1)^2.
struct ClassPair {
    long m;
    long k;
    bool operator<(const ClassPair& o) const { return std::pair(m, k) < std::pair(o.m, o.k); }
    bool operator==(const ClassPair& o) const { return m == o.m && k == o.k; }
};

/// Strict Hasse window test in exact integer arithmetic: (n - (p+1))^2 < 4p.
bool in_hasse_window(long n, long p);

std::set<ClassPair> set_I(long p);
std::set<ClassPair> set_I_ord(long p);  // k m^2 != 1 mod p
std::set<ClassPair> set_I_ss(long p);   // k m^2 == 1 mod p

enum class ReductionKind { good, ordinary, supersingular };
enum class FieldLevel { qp, mu4, mu_infty };

ReductionKind parse_kind(const std::string& s);
FieldLevel parse_level(const std::string& s);
std::string kind_name(ReductionKind k);
std::string level_name(FieldLevel l);

struct GroupList {
    std::set<TorsionGroup> groups;
    std::string provenance;

    bool contains(const TorsionGroup& g) const { return groups.count(g) != 0; }
    long max_order() const;
};

/// The exact finite list asserted by the classification for the given
/// combination; throws std::invalid_argument for combinations the
/// classification does not cover (e.g. mu4 outside p = 2 ordinary).
GroupList theorem_group_list(long p, ReductionKind kind, FieldLevel level);

struct CensusResult {
    std::set<TorsionGroup> all;
    std::set<TorsionGroup> ordinary;
    std::set<TorsionGroup> supersingular;
};

/// Group structures over F_p of all nonsingular long Weierstrass models
/// (exhaustive over the p^5 coefficient tuples; guarded to p <= 13).
CensusResult census_Fp(long p);

/// Sharp order bound for the covered combinations.
long max_torsion_bound(long p, ReductionKind kind, FieldLevel level);

}  // namespace ellqp
