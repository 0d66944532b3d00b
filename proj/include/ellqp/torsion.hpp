#pragma once

#include <ellqp/classify.hpp>

#include <optional>

namespace ellqp {

struct TorsionOptions {
    long digits = Padic::kDefaultDigits;
    bool slow_oracle = false;  // scan every n up to the order bound instead of pruning candidates
};

struct TorsionReport {
    std::string label;
    long p = 2;
    long level = 0;             // m for Q_p(mu_{p^m}); 0 means Q_p
    bool level_infinity = false;
    TorsionGroup group;
    ReductionKind kind = ReductionKind::good;
    std::string certificate;
};

/// #E(K)[n] by Algorithm-1 style counting: division polynomial roots in K,
/// then the points above each root.
long torsion_count(const CurveModel& E, const FieldPtr& K, long n);

/// The nonzero points of E(K)[n], explicitly.
std::vector<CurvePoint> torsion_points(const CurveModel& E, const FieldPtr& K, long n);

/// Structure of the q-primary part of E(K)_tor from the count sequence
/// #E(K)[q^i]; `exponent_cap` (if >= 0) stops at the [q^cap]-part.
TorsionGroup q_primary_structure(const CurveModel& E, const FieldPtr& K, long q,
                                 long exponent_cap = -1);

/// Full torsion structure over Q_p(mu_{p^m}) (m = 0: Q_p).
TorsionReport torsion_structure(const CurveModel& E, long p, long level_m,
                                const TorsionOptions& opts = {});

/// Torsion over Q_p(mu_{p^infty}), certified by ramification-bound escalation:
/// the [p^n]-part of the limit equals the [p^n]-part at level n (n+1 for
/// p = 2); escalation stops when consecutive parts agree and is capped at
/// level 6 (failure is loud).
TorsionReport cyclotomic_torsion_infty(const CurveModel& E, long p, const TorsionOptions& opts = {});

/// Finite level asserted by the descent theorems: supersingular -> 0,
/// ordinary odd p -> 1, ordinary p = 2 -> 3. Used as a cross-check only.
long theorem_descent_level(long p, ReductionKind kind);

/// Q_p(mu_{p^m}) at the given precision; m = 0 (or degree 1) gives Q_p.
FieldPtr cyclotomic_level_field(long p, long m, long digits);

}  // namespace ellqp
