#pragma once

#include <vector>

#include "polypos/poly.hpp"
#include "polypos/report.hpp"

namespace polypos {

// Exact determinant of a square rational matrix (Gaussian elimination with
// pivoting, all arithmetic in Q).
Rat exact_determinant(std::vector<std::vector<Rat>> m);

// Hurwitz stability: every root in the open left half-plane, decided by the
// leading-principal-minor criterion on the Hurwitz matrix. Requires a nonzero
// polynomial with positive leading coefficient (throws otherwise). Degree 0
// passes vacuously. For degree >= 1 any coefficient <= 0 fails immediately;
// otherwise all n leading principal minors must be strictly positive.
PropertyReport hurwitz_stable(const Poly& f);

// Stability outside the origin: strips the q^m factor (m = index of the first
// nonzero coefficient) and requires hurwitz_stable of the cofactor. The
// stripped power is recorded in the report.
PropertyReport generalized_stable(const Poly& f);

}  // namespace polypos
