#include "polypos/seeds.hpp"

#include <stdexcept>

namespace polypos {

const std::vector<SeedInfo>& seed_catalog() {
  static const std::vector<SeedInfo> seeds = {
      {"monomials", "x_k = q^k; strongly q-log-convex"},
      {"constant-one", "x_k = 1; log-convex with equality throughout"},
      {"geometric-monomials",
       "x_0 = 1, x_k = 2^(k-1) q^k; strongly q-log-convex witness seed"},
      {"motzkin-numbers", "x_k = number of Motzkin paths of length k"},
      {"catalan-numbers", "x_k = k-th Catalan number"},
      {"bell-numbers", "x_k = number of set partitions of [k]"},
  };
  return seeds;
}

std::vector<Rat> motzkin_numbers(int n_max) {
  std::vector<Rat> m;
  m.reserve(n_max + 1);
  for (int n = 0; n <= n_max; ++n) {
    if (n <= 1) {
      m.push_back(Rat(1));
      continue;
    }
    Rat next = m[n - 1];
    for (int k = 0; k <= n - 2; ++k) next += m[k] * m[n - 2 - k];
    m.push_back(next);
  }
  return m;
}

std::vector<Rat> catalan_numbers(int n_max) {
  std::vector<Rat> c{Rat(1)};
  for (int n = 0; n < n_max; ++n) c.push_back(c.back() * Rat(4 * n + 2) / Rat(n + 2));
  c.resize(n_max + 1);
  return c;
}

std::vector<Rat> bell_numbers(int n_max) {
  // Bell triangle: each row starts with the previous row's last entry.
  std::vector<Rat> bells{Rat(1)};
  std::vector<Rat> row{Rat(1)};
  for (int n = 1; n <= n_max; ++n) {
    std::vector<Rat> next{row.back()};
    for (const Rat& v : row) next.push_back(next.back() + v);
    bells.push_back(next.front());
    row = std::move(next);
  }
  return bells;
}

namespace {

SeedSequence constants_to_seed(std::string name, std::vector<Rat> values) {
  SeedSequence seed;
  seed.name = std::move(name);
  seed.values.reserve(values.size());
  for (Rat& v : values) seed.values.emplace_back(std::move(v));
  return seed;
}

}  // namespace

SeedSequence make_seed(const std::string& id, int n_max) {
  if (n_max < 0) throw std::invalid_argument("make_seed: n_max must be >= 0");
  if (id == "monomials") {
    SeedSequence seed;
    seed.name = id;
    for (int k = 0; k <= n_max; ++k) seed.values.push_back(Poly::monomial(k));
    return seed;
  }
  if (id == "constant-one") {
    SeedSequence seed;
    seed.name = id;
    seed.values.assign(n_max + 1, Poly(Rat(1)));
    return seed;
  }
  if (id == "geometric-monomials") {
    SeedSequence seed;
    seed.name = id;
    seed.values.push_back(Poly(Rat(1)));
    Rat scale(1);
    for (int k = 1; k <= n_max; ++k) {
      seed.values.push_back(Poly::monomial(k, scale));
      scale *= 2;
    }
    return seed;
  }
  if (id == "motzkin-numbers") return constants_to_seed(id, motzkin_numbers(n_max));
  if (id == "catalan-numbers") return constants_to_seed(id, catalan_numbers(n_max));
  if (id == "bell-numbers") return constants_to_seed(id, bell_numbers(n_max));
  throw std::invalid_argument("unknown seed sequence: " + id);
}

SeedSequence seed_from_polys(std::vector<Poly> polys) {
  SeedSequence seed;
  seed.name = "explicit";
  seed.values = std::move(polys);
  return seed;
}

}  // namespace polypos
