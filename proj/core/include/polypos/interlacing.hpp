#pragma once

#include <span>

#include "polypos/poly.hpp"
#include "polypos/report.hpp"

namespace polypos {

// Standard polynomial: identically zero, or positive leading coefficient.
bool is_standard(const Poly& f);

// Weak interlacing g <= f for standard real-rooted polynomials with
// deg f = deg g + 1 (roots r_n <= s_{n-1} <= ... <= s_1 <= r_1, possibly with
// ties). Conventions: constants interlace linear polynomials, and the zero
// polynomial interlaces and is interlaced by everything. Never throws; bad
// inputs yield FAIL with a reason.
PropertyReport interlaces(const Poly& g, const Poly& f);

// PASS iff every member is standard and real-rooted and each consecutive pair
// interlaces (member i interlaced by member i+1 in degree order f_i <= f_{i+1}).
PropertyReport is_generalized_sturm_sequence(std::span<const Poly> polys);

}  // namespace polypos
