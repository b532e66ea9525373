#pragma once

#include <optional>
#include <string>
#include <vector>

#include "polypos/triangle.hpp"

namespace polypos {

struct CatalogEntry {
  std::string id;
  std::string family;  // family tag of the underlying recurrence
  bool needs_z = false;
  bool needs_m = false;
  std::string description;
};

// Complete list of builtin triangles, in a fixed order.
const std::vector<CatalogEntry>& catalog();

// Spec for a builtin by id; z / m default to 1 when the family needs them and
// none is given. Unknown ids are an error.
TriangleSpec builtin_spec(const std::string& id, std::optional<Rat> z = std::nullopt,
                          std::optional<Rat> m = std::nullopt);

// Expands a builtin reference into its concrete family params and boundary.
TriangleSpec builtin_spec_expanded(const BuiltinRef& ref);

// Alternating-sum closed form for the m-associated Lah numbers:
//   L_m(n,k) = (n!/k!) * sum_{i=1..k} (-1)^(k-i) C(k,i) C(n+m*i-1, n)
// with L_m(0,0) = 1 and column k = 0 equal to [n == 0].
Rat lah_closed_form(const Rat& m, int n, int k);

}  // namespace polypos
