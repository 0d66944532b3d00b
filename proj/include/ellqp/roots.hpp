#pragma once

#include <ellqp/polynomial.hpp>

namespace ellqp {

/// Certified search-depth bound for finding roots of a squarefree integer
/// polynomial in K: beyond 2 * e_K * v_p(Res(g, g')) + 1 pi-adic digits,
/// every surviving branch around a true root satisfies the Newton criterion
/// v(g(a)) > 2 v(g'(a)). Throws std::domain_error when Res(g, g') = 0.
long separability_depth(const ZPoly& g, const LocalField& K);

/// All roots of g in K, certified: digit DFS over pi-adic digits with
/// Newton-polygon slope splitting, switching to Newton iteration once
/// v(g(a)) > 2 v(g'(a)). Rational inputs use the certified separability
/// depth per slope. Precision ambiguities raise precision_error after one
/// internal retry at doubled precision.
std::vector<FieldElement> roots_in_field(const ZPoly& g, const FieldPtr& K);

/// K-coefficient variant; the caller supplies the pi-adic depth bound.
std::vector<FieldElement> roots_in_field(const KPoly& g, long depth);

/// Roots of T^2 + b T + c in the field of b and c; depth derived from
/// v(b^2 - 4c). A provably-zero discriminant yields the single double root.
std::vector<FieldElement> quadratic_roots_in_y(const FieldElement& b, const FieldElement& c);

}  // namespace ellqp
