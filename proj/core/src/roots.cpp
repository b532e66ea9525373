#include "polypos/roots.hpp"

#include <algorithm>
#include <stdexcept>

namespace polypos {

SturmChain sturm_chain(const Poly& f) {
  if (f.is_zero()) throw std::domain_error("sturm_chain of zero polynomial");
  SturmChain chain;
  chain.members.push_back(f);
  if (f.degree() == 0) return chain;
  Poly d = derivative(f);
  chain.members.push_back(d);
  Poly a = f, b = d;
  while (true) {
    Poly r = detail::divmod(a, b).second;
    if (r.is_zero()) break;
    r = -r;
    chain.members.push_back(r);
    a = b;
    b = r;
  }
  return chain;
}

namespace {

int sign_at(const Poly& p, const std::optional<Rat>& x, bool minus_inf) {
  if (p.is_zero()) return 0;
  if (!x) {
    int s = sign(p.leading_coeff());
    if (minus_inf && p.degree() % 2 == 1) s = -s;
    return s;
  }
  return sign(eval(p, *x));
}

}  // namespace

int sign_variations(const SturmChain& chain, const std::optional<Rat>& x,
                    bool at_minus_infinity) {
  int variations = 0;
  int prev = 0;
  for (const Poly& p : chain.members) {
    int s = sign_at(p, x, at_minus_infinity);
    if (s == 0) continue;
    if (prev != 0 && s != prev) ++variations;
    prev = s;
  }
  return variations;
}

int count_real_roots(const Poly& f, const std::optional<Rat>& lo,
                     const std::optional<Rat>& hi) {
  if (f.is_zero()) throw std::domain_error("count_real_roots of zero polynomial");
  if (f.degree() == 0) return 0;
  if (lo && hi && *lo >= *hi) return 0;
  SturmChain chain = sturm_chain(f);
  int at_lo = sign_variations(chain, lo, true);
  int at_hi = sign_variations(chain, hi, false);
  return at_lo - at_hi;
}

Rat cauchy_root_bound(const Poly& f) {
  if (f.is_zero()) throw std::domain_error("cauchy_root_bound of zero polynomial");
  Rat lead = abs(f.leading_coeff());
  Rat biggest(0);
  for (int k = 0; k < f.degree(); ++k) {
    Rat magnitude = abs(f.coeff(k));
    if (magnitude > biggest) biggest = magnitude;
  }
  return Rat(1) + biggest / lead;
}

namespace {

// Point in (lo, hi) that is not a root of g: start at the midpoint and walk a
// deterministic sequence of offsets until g is nonzero there.
Rat nonroot_split_point(const Poly& g, const Rat& lo, const Rat& hi) {
  Rat width = hi - lo;
  Rat mid = lo + width / 2;
  if (eval(g, mid) != 0) return mid;
  Rat offset = width / 4;
  while (offset != 0) {
    Rat candidate = mid + offset;
    if (eval(g, candidate) != 0) return candidate;
    offset /= 2;
  }
  throw std::logic_error("no root-free split point found");
}

struct Segment {
  Rat lo;
  Rat hi;
  int count;
};

// Isolating intervals for the (all simple) roots of squarefree g.
std::vector<RootIsolation::Interval> isolate_squarefree(const Poly& g) {
  std::vector<RootIsolation::Interval> result;
  if (g.degree() < 1) return result;
  SturmChain chain = sturm_chain(g);
  Rat bound = cauchy_root_bound(g);
  auto count_open_closed = [&](const Rat& lo, const Rat& hi) {
    return sign_variations(chain, lo, false) - sign_variations(chain, hi, false);
  };
  std::vector<Segment> stack;
  stack.push_back({-bound, bound, count_open_closed(-bound, bound)});
  while (!stack.empty()) {
    Segment seg = stack.back();
    stack.pop_back();
    if (seg.count == 0) continue;
    if (seg.count == 1) {
      result.push_back({seg.lo, seg.hi, 1});
      continue;
    }
    Rat mid = nonroot_split_point(g, seg.lo, seg.hi);
    int left = count_open_closed(seg.lo, mid);
    stack.push_back({seg.lo, mid, left});
    stack.push_back({mid, seg.hi, seg.count - left});
  }
  std::sort(result.begin(), result.end(),
            [](const auto& a, const auto& b) { return a.lo < b.lo; });
  return result;
}

}  // namespace

RootIsolation isolate_roots(const Poly& f) {
  if (f.is_zero()) throw std::domain_error("isolate_roots of zero polynomial");
  RootIsolation isolation;
  if (f.degree() < 1) return isolation;
  Poly g = squarefree_part(f);
  isolation.intervals = isolate_squarefree(g);
  std::vector<Poly> factors = squarefree_decomposition(f);
  std::vector<SturmChain> factor_chains;
  factor_chains.reserve(factors.size());
  for (const Poly& a : factors) factor_chains.push_back(sturm_chain(a));
  for (auto& interval : isolation.intervals) {
    for (size_t i = 0; i < factors.size(); ++i) {
      if (factors[i].degree() < 1) continue;
      int inside = sign_variations(factor_chains[i], interval.lo, false) -
                   sign_variations(factor_chains[i], interval.hi, false);
      if (inside == 1) {
        interval.multiplicity = static_cast<int>(i) + 1;
        break;
      }
    }
  }
  return isolation;
}

RootIsolation refine_to_width(const Poly& f, const RootIsolation& isolation,
                              const Rat& max_width) {
  if (max_width <= 0) throw std::invalid_argument("refine_to_width: width must be positive");
  Poly g = squarefree_part(f);
  SturmChain chain = sturm_chain(g);
  auto count_open_closed = [&](const Rat& lo, const Rat& hi) {
    return sign_variations(chain, lo, false) - sign_variations(chain, hi, false);
  };
  RootIsolation refined = isolation;
  for (auto& interval : refined.intervals) {
    while (interval.hi - interval.lo > max_width) {
      Rat mid = nonroot_split_point(g, interval.lo, interval.hi);
      if (count_open_closed(interval.lo, mid) == 1)
        interval.hi = mid;
      else
        interval.lo = mid;
    }
  }
  return refined;
}

PropertyReport is_real_rooted(const Poly& f) {
  if (f.is_zero()) throw std::domain_error("is_real_rooted of zero polynomial");
  std::map<std::string, std::string> range{{"degree", std::to_string(f.degree())}};
  if (f.degree() == 0) return pass_report("real-rooted", std::move(range));
  Poly g = squarefree_part(f);
  int real = count_real_roots(g);
  if (real == g.degree()) return pass_report("real-rooted", std::move(range));
  return fail_report("real-rooted",
                     {{"distinct_roots", std::to_string(g.degree())},
                      {"real_distinct_roots", std::to_string(real)}},
                     std::move(range));
}

}  // namespace polypos
