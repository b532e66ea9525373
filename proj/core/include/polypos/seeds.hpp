#pragma once

#include <string>
#include <vector>

#include "polypos/poly.hpp"

namespace polypos {

struct SeedInfo {
  std::string id;
  std::string description;
};

const std::vector<SeedInfo>& seed_catalog();

struct SeedSequence {
  std::string name;
  std::vector<Poly> values;  // x_0 .. x_n_max
};

// Materializes a named seed for indices 0..n_max. Unknown names are an error.
SeedSequence make_seed(const std::string& id, int n_max);

// Explicit polynomial list (canonical text forms), e.g. loaded from a file.
SeedSequence seed_from_polys(std::vector<Poly> polys);

// Exact integer sequences used by the numeric seeds; also handy as oracles.
std::vector<Rat> motzkin_numbers(int n_max);
std::vector<Rat> catalan_numbers(int n_max);
std::vector<Rat> bell_numbers(int n_max);

}  // namespace polypos
