#pragma once

#include <span>

#include "polypos/poly.hpp"
#include "polypos/report.hpp"
#include "polypos/triangle.hpp"

namespace polypos {

// f >=_q g: every coefficient of f - g is nonnegative. A FAIL carries the
// smallest power whose difference coefficient is negative.
PropertyReport coeffwise_geq(const Poly& f, const Poly& g);

// a_{k-1} a_{k+1} >= a_k^2 for all interior k. Zeros are allowed by default;
// with require_strictly_positive they fail the check. Negative entries always
// fail (the notion is about nonnegative sequences).
PropertyReport is_log_convex(std::span<const Rat> seq,
                             bool require_strictly_positive = false);

// Strong q-log-convexity of f_0..f_last: f_{n+1} f_{m-1} - f_n f_m >=_q 0 for
// all 1 <= m <= n <= last-1. The plain q-log-convex check is the m = n
// restriction. Witnesses are (n, m, power) with the lexicographically
// smallest (n, m).
PropertyReport is_strongly_q_log_convex(std::span<const Poly> polys);
PropertyReport is_q_log_convex(std::span<const Poly> polys);

// TP_r of the triangle's leading rectangle: rows first_row..n_max, columns
// 0..n_max. n_max must not exceed the generated depth.
PropertyReport is_tp_r(const Triangle& t, int order, int n_max);

}  // namespace polypos
