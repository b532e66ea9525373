#pragma once

#include <gmpxx.h>

#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace polypos {

// Exact rational scalar. mpq_class keeps values canonical (reduced, positive
// denominator) as long as they are built through arithmetic or canonicalize().
using Rat = mpq_class;

inline Rat rat_from_long(long n) { return Rat(n); }

int sign(const Rat& x);

// Text form: "p" for integers, "p/r" otherwise, r > 1. Rejects anything else
// (in particular decimal points and exponents).
std::string rat_to_string(const Rat& x);
Rat rat_from_string(std::string_view text);

// Evaluates both sides of the exchange identity
//   (sum a_i c_i)(sum b_i d_i) - (sum a_i d_i)(sum b_i c_i)
//     = sum_{i<j} (a_i b_j - a_j b_i)(c_i d_j - c_j d_i)
// computed by independent routes, and returns {lhs, rhs}. The four lists must
// have equal length.
std::pair<Rat, Rat> four_sequence_identity(std::span<const Rat> a,
                                           std::span<const Rat> b,
                                           std::span<const Rat> c,
                                           std::span<const Rat> d);

}  // namespace polypos
