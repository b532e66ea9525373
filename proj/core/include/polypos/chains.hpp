#pragma once

#include <optional>
#include <string>
#include <vector>

#include "polypos/poly.hpp"

namespace polypos {

// One step of the derivative-coupled recurrence
//   f_n = [(u1*n + u0) + (v1*n + v0) q + (w1*n + w0) q^2] f_{n-1}
//       + q (d0 + d1 q + d2 q^2) f'_{n-1}
struct PolyStepCoeffs {
  Rat u1, u0;
  Rat v1, v0;
  Rat w1, w0;
  Rat d0, d1, d2;
};

Poly poly_step(const PolyStepCoeffs& c, const Poly& prev, long n);

// Named polynomial chain: base member at index `start`, later members built
// by poly_step with the per-family coefficients.
struct ChainDef {
  std::string id;
  int start = 0;
  bool needs_fixed_q = false;
  std::string description;
};

const std::vector<ChainDef>& chain_catalog();

// Per-family step at index n (i.e. computes f_n from f_{n-1}). Chains whose
// coefficients depend on a fixed q parameter require fixed_q.
Poly poly_recurrence_step(const std::string& id, const Poly& prev, long n,
                          const std::optional<Rat>& fixed_q = std::nullopt);

struct PolyChain {
  int start = 0;
  std::vector<Poly> polys;  // polys[i] is member start + i

  const Poly& at(int n) const { return polys.at(n - start); }
  int last() const { return start + static_cast<int>(polys.size()) - 1; }
};

PolyChain build_chain(const std::string& id, int n_max,
                      const std::optional<Rat>& fixed_q = std::nullopt);

}  // namespace polypos
