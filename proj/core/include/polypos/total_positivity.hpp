#pragma once

#include <vector>

#include "polypos/rat.hpp"
#include "polypos/report.hpp"

namespace polypos {

// TP_r check for a rectangular rational matrix: every j x j minor with
// j <= order must be >= 0. Minors are enumerated in lexicographic order of
// (j, row set, column set), so a FAIL carries the lexicographically smallest
// violation. Sizes 1..3 use expanded closed forms, larger sizes exact
// elimination.
PropertyReport is_matrix_tp(const std::vector<std::vector<Rat>>& m, int order);

}  // namespace polypos
