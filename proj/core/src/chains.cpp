#include "polypos/chains.hpp"

#include <stdexcept>

namespace polypos {

Poly poly_step(const PolyStepCoeffs& c, const Poly& prev, long n) {
  Rat nn(n);
  Poly multiplier(std::vector<Rat>{c.u1 * nn + c.u0, c.v1 * nn + c.v0, c.w1 * nn + c.w0});
  Poly derivative_part(std::vector<Rat>{Rat(0), c.d0, c.d1, c.d2});
  return multiplier * prev + derivative_part * derivative(prev);
}

const std::vector<ChainDef>& chain_catalog() {
  static const std::vector<ChainDef> defs = {
      {"eulerianA", 0, false, "Eulerian polynomials of type A"},
      {"eulerianB", 0, false, "Eulerian polynomials of type B"},
      {"q-eulerianA", 0, true, "cycle-counting q-analog of the type A Eulerian polynomials"},
      {"q-eulerianB", 0, true, "flag q-analog of the type B Eulerian polynomials"},
      {"ramanujan", 1, false, "Ramanujan polynomials"},
      {"runsA", 1, false, "alternating-runs polynomials of type A"},
      {"runsB", 1, false, "alternating-runs polynomials of type B"},
      {"alt-subsequence", 0, false, "longest-alternating-subsequence polynomials"},
      {"updown-runs", 1, false, "up-down-runs (peak-based) polynomials"},
  };
  return defs;
}

namespace {

struct ChainRecipe {
  int start;
  Poly base;
  PolyStepCoeffs coeffs;
};

ChainRecipe chain_recipe(const std::string& id, const std::optional<Rat>& fixed_q) {
  const Rat zero(0), one(1);
  auto need_q = [&]() -> Rat {
    if (!fixed_q) throw std::invalid_argument("chain " + id + " needs fixed_q");
    return *fixed_q;
  };
  if (id == "eulerianA")
    return {0, Poly(one), {zero, zero, one, zero, zero, zero, one, Rat(-1), zero}};
  if (id == "eulerianB")
    return {0, Poly(one), {zero, one, Rat(2), Rat(-1), zero, zero, Rat(2), Rat(-2), zero}};
  if (id == "q-eulerianA") {
    Rat q0 = need_q();
    return {0, Poly::variable(), {zero, q0 - 1, one, zero, zero, zero, one, Rat(-1), zero}};
  }
  if (id == "q-eulerianB") {
    Rat q0 = need_q();
    return {0, Poly(one),
            {zero, one, one + q0, Rat(-1), zero, zero, one + q0, -(one + q0), zero}};
  }
  if (id == "ramanujan")
    return {1, Poly(one), {one, Rat(-1), one, Rat(-1), zero, zero, zero, one, zero}};
  if (id == "runsA")
    return {1, Poly(one), {zero, zero, zero, Rat(2), one, Rat(-2), one, zero, Rat(-1)}};
  if (id == "runsB")
    return {1, Poly::variable(),
            {zero, Rat(-1), zero, Rat(3), Rat(2), Rat(-2), Rat(2), zero, Rat(-2)}};
  if (id == "alt-subsequence")
    return {0, Poly(one), {zero, zero, zero, one, one, Rat(-1), one, zero, Rat(-1)}};
  if (id == "updown-runs") {
    Poly base(std::vector<Rat>{one, one});
    return {1, base, {zero, one, zero, zero, one, Rat(-1), one, zero, Rat(-1)}};
  }
  throw std::invalid_argument("unknown polynomial chain: " + id);
}

}  // namespace

Poly poly_recurrence_step(const std::string& id, const Poly& prev, long n,
                          const std::optional<Rat>& fixed_q) {
  ChainRecipe recipe = chain_recipe(id, fixed_q);
  if (n <= recipe.start)
    throw std::invalid_argument("poly_recurrence_step: index must exceed the chain start");
  return poly_step(recipe.coeffs, prev, n);
}

PolyChain build_chain(const std::string& id, int n_max,
                      const std::optional<Rat>& fixed_q) {
  ChainRecipe recipe = chain_recipe(id, fixed_q);
  if (n_max < recipe.start)
    throw std::invalid_argument("build_chain: n_max below the chain start");
  PolyChain chain;
  chain.start = recipe.start;
  chain.polys.push_back(recipe.base);
  for (int n = recipe.start + 1; n <= n_max; ++n)
    chain.polys.push_back(poly_step(recipe.coeffs, chain.polys.back(), n));
  return chain;
}

}  // namespace polypos
