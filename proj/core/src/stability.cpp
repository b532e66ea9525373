#include "polypos/stability.hpp"

#include <stdexcept>
#include <utility>

namespace polypos {

Rat exact_determinant(std::vector<std::vector<Rat>> m) {
  const size_t n = m.size();
  for (const auto& row : m)
    if (row.size() != n) throw std::invalid_argument("determinant of non-square matrix");
  Rat det(1);
  for (size_t col = 0; col < n; ++col) {
    size_t pivot = col;
    while (pivot < n && m[pivot][col] == 0) ++pivot;
    if (pivot == n) return Rat(0);
    if (pivot != col) {
      std::swap(m[pivot], m[col]);
      det = -det;
    }
    det *= m[col][col];
    for (size_t row = col + 1; row < n; ++row) {
      if (m[row][col] == 0) continue;
      Rat factor = m[row][col] / m[col][col];
      for (size_t j = col; j < n; ++j) m[row][j] -= factor * m[col][j];
    }
  }
  return det;
}

namespace {

// Hurwitz matrix entry H(i, j) = a_{n - 2j + i} with out-of-range indices zero
// (0-based i, j; coefficients a_0..a_n, a_n the leading one).
std::vector<std::vector<Rat>> hurwitz_matrix(const Poly& f) {
  const int n = f.degree();
  std::vector<std::vector<Rat>> h(n, std::vector<Rat>(n, Rat(0)));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      int idx = n - 2 * (j + 1) + (i + 1);
      if (idx >= 0 && idx <= n) h[i][j] = f.coeff(idx);
    }
  return h;
}

std::vector<std::vector<Rat>> leading_block(const std::vector<std::vector<Rat>>& m,
                                            int size) {
  std::vector<std::vector<Rat>> block(size, std::vector<Rat>(size));
  for (int i = 0; i < size; ++i)
    for (int j = 0; j < size; ++j) block[i][j] = m[i][j];
  return block;
}

}  // namespace

PropertyReport hurwitz_stable(const Poly& f) {
  if (f.is_zero()) throw std::invalid_argument("hurwitz_stable: zero polynomial");
  if (sign(f.leading_coeff()) <= 0)
    throw std::invalid_argument("hurwitz_stable: leading coefficient must be positive");
  std::map<std::string, std::string> range{{"degree", std::to_string(f.degree())}};
  if (f.degree() == 0) return pass_report("hurwitz-stable", std::move(range));
  for (int k = 0; k <= f.degree(); ++k) {
    if (sign(f.coeff(k)) <= 0)
      return fail_report("hurwitz-stable",
                         {{"reason", "nonpositive-coefficient"},
                          {"power", std::to_string(k)},
                          {"coefficient", rat_to_string(f.coeff(k))}},
                         std::move(range));
  }
  auto h = hurwitz_matrix(f);
  for (int k = 1; k <= f.degree(); ++k) {
    Rat minor = exact_determinant(leading_block(h, k));
    if (sign(minor) <= 0)
      return fail_report("hurwitz-stable",
                         {{"reason", "nonpositive-hurwitz-minor"},
                          {"minor_order", std::to_string(k)},
                          {"minor", rat_to_string(minor)}},
                         std::move(range));
  }
  return pass_report("hurwitz-stable", std::move(range));
}

PropertyReport generalized_stable(const Poly& f) {
  if (f.is_zero()) throw std::invalid_argument("generalized_stable: zero polynomial");
  int strip = 0;
  while (f.coeff(strip) == 0) ++strip;
  std::vector<Rat> cofactor(f.coeffs().begin() + strip, f.coeffs().end());
  PropertyReport inner = hurwitz_stable(Poly(std::move(cofactor)));
  PropertyReport report = inner;
  report.property = "generalized-stable";
  report.range["stripped_power"] = std::to_string(strip);
  return report;
}

}  // namespace polypos
