#include "polypos/interlacing.hpp"

#include <string>

#include "polypos/roots.hpp"

namespace polypos {

bool is_standard(const Poly& f) {
  return f.is_zero() || sign(f.leading_coeff()) > 0;
}

namespace {

PropertyReport interlace_fail(std::map<std::string, std::string> witness) {
  return fail_report("interlaces", std::move(witness));
}

}  // namespace

PropertyReport interlaces(const Poly& g, const Poly& f) {
  if (g.is_zero() || f.is_zero()) return pass_report("interlaces");
  if (!is_standard(g)) return interlace_fail({{"reason", "not-standard"}, {"which", "g"}});
  if (!is_standard(f)) return interlace_fail({{"reason", "not-standard"}, {"which", "f"}});
  if (!is_real_rooted(g).passed())
    return interlace_fail({{"reason", "not-real-rooted"}, {"which", "g"}});
  if (!is_real_rooted(f).passed())
    return interlace_fail({{"reason", "not-real-rooted"}, {"which", "f"}});
  if (g.degree() <= 0 && f.degree() <= 1) return pass_report("interlaces");
  if (f.degree() != g.degree() + 1)
    return interlace_fail({{"reason", "degree-gap"},
                           {"deg_f", std::to_string(f.degree())},
                           {"deg_g", std::to_string(g.degree())}});

  // Reduce by the common part; weak interlacing of (g, f) is equivalent to
  // strict interleaving of the reduced pair, which must come out squarefree
  // and coprime.
  Poly d = poly_gcd(f, g);
  Poly f1 = d.degree() > 0 ? div_exact(f, d) : f;
  Poly g1 = d.degree() > 0 ? div_exact(g, d) : g;
  if (poly_gcd(f1, derivative(f1)).degree() > 0)
    return interlace_fail({{"reason", "reduced-pair-not-squarefree"}, {"which", "f"}});
  if (g1.degree() > 0 && poly_gcd(g1, derivative(g1)).degree() > 0)
    return interlace_fail({{"reason", "reduced-pair-not-squarefree"}, {"which", "g"}});
  if (poly_gcd(f1, g1).degree() > 0)
    return interlace_fail({{"reason", "reduced-pair-not-coprime"}});
  if (g1.degree() == 0) return pass_report("interlaces");

  // f1*g1 is squarefree, so isolating its roots separates the roots of f1
  // from those of g1; ownership along the line must alternate f,g,f,...,g,f.
  RootIsolation merged = isolate_roots(f1 * g1);
  std::string pattern;
  for (const auto& interval : merged.intervals) {
    int from_f = count_real_roots(f1, interval.lo, interval.hi);
    pattern += (from_f == 1) ? 'f' : 'g';
  }
  bool ok = static_cast<int>(pattern.size()) == f1.degree() + g1.degree();
  for (size_t i = 0; ok && i < pattern.size(); ++i)
    if (pattern[i] != (i % 2 == 0 ? 'f' : 'g')) ok = false;
  if (!ok || pattern.empty() || pattern.back() != 'f')
    return interlace_fail({{"reason", "root-ordering"}, {"pattern", pattern}});
  return pass_report("interlaces");
}

PropertyReport is_generalized_sturm_sequence(std::span<const Poly> polys) {
  std::map<std::string, std::string> range{
      {"members", std::to_string(polys.size())}};
  for (size_t i = 0; i < polys.size(); ++i) {
    if (!is_standard(polys[i]))
      return fail_report("generalized-sturm-sequence",
                         {{"index", std::to_string(i)}, {"reason", "not-standard"}},
                         std::move(range));
    if (!polys[i].is_zero() && !is_real_rooted(polys[i]).passed())
      return fail_report("generalized-sturm-sequence",
                         {{"index", std::to_string(i)}, {"reason", "not-real-rooted"}},
                         std::move(range));
  }
  for (size_t i = 0; i + 1 < polys.size(); ++i) {
    PropertyReport pair = interlaces(polys[i], polys[i + 1]);
    if (!pair.passed()) {
      std::map<std::string, std::string> witness = pair.witness;
      witness["index"] = std::to_string(i);
      return fail_report("generalized-sturm-sequence", std::move(witness),
                         std::move(range));
    }
  }
  return pass_report("generalized-sturm-sequence", std::move(range));
}

}  // namespace polypos
