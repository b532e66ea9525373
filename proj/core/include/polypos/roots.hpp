#pragma once

#include <optional>
#include <vector>

#include "polypos/poly.hpp"
#include "polypos/report.hpp"

namespace polypos {

// Canonical Sturm chain: p0 = f, p1 = f', p_{i+1} = -rem(p_{i-1}, p_i),
// stopping before the zero remainder.
struct SturmChain {
  std::vector<Poly> members;
};

SturmChain sturm_chain(const Poly& f);

// Number of sign variations of the chain at x (zeros skipped); nullopt means
// -infinity / +infinity depending on `at_minus_infinity`.
int sign_variations(const SturmChain& chain, const std::optional<Rat>& x,
                    bool at_minus_infinity);

// Distinct real roots of f in the half-open interval (lo, hi]; an absent
// endpoint means -infinity (lo) or +infinity (hi). Intended for squarefree f
// (pass squarefree_part first); with root endpoints the half-open convention
// is honored exactly in that case. Errors on the zero polynomial.
int count_real_roots(const Poly& f, const std::optional<Rat>& lo = std::nullopt,
                     const std::optional<Rat>& hi = std::nullopt);

// Strict bound B with every real root of f inside (-B, B).
Rat cauchy_root_bound(const Poly& f);

// Disjoint open isolating intervals for the distinct real roots of f, sorted
// by position; endpoints are never roots. `multiplicity` is the root's
// multiplicity in f itself.
struct RootIsolation {
  struct Interval {
    Rat lo;
    Rat hi;
    int multiplicity = 1;
  };
  std::vector<Interval> intervals;
};

RootIsolation isolate_roots(const Poly& f);

// Shrinks every interval until hi - lo <= max_width, still isolating the same
// roots, endpoints still never roots.
RootIsolation refine_to_width(const Poly& f, const RootIsolation& isolation,
                              const Rat& max_width);

// PASS iff all roots of f are real (counted on the squarefree part, so
// multiple roots are fine). Nonzero f required; constants pass vacuously.
PropertyReport is_real_rooted(const Poly& f);

}  // namespace polypos
