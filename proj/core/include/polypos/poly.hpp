#pragma once

#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "polypos/rat.hpp"

namespace polypos {

// Dense univariate polynomial over the rationals, coefficients stored in
// ascending power order. Always normalized: no trailing zero coefficients,
// the zero polynomial is the empty list. Instances are immutable values;
// all operations return fresh polynomials.
class Poly {
 public:
  Poly() = default;
  explicit Poly(Rat constant);
  explicit Poly(long constant) : Poly(Rat(constant)) {}
  explicit Poly(std::vector<Rat> coeffs);

  static Poly monomial(int power, const Rat& coeff = Rat(1));
  static Poly variable() { return monomial(1); }

  bool is_zero() const { return coeffs_.empty(); }
  // Degree of the zero polynomial is -1 by convention.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  // Coefficient of q^k; zero outside the stored range.
  Rat coeff(int k) const;
  const std::vector<Rat>& coeffs() const { return coeffs_; }
  Rat leading_coeff() const;

  Poly operator-() const;
  Poly& operator+=(const Poly& rhs);
  Poly& operator-=(const Poly& rhs);

  friend Poly operator+(const Poly& a, const Poly& b);
  friend Poly operator-(const Poly& a, const Poly& b);
  friend Poly operator*(const Poly& a, const Poly& b);
  friend Poly operator*(const Rat& s, const Poly& p);
  friend bool operator==(const Poly& a, const Poly& b) = default;

  // Multiplies by q^k.
  Poly shifted(int k) const;

 private:
  void normalize();
  std::vector<Rat> coeffs_;
};

Poly derivative(const Poly& f);
Rat eval(const Poly& f, const Rat& x);

// Monic polynomial gcd via the Euclidean algorithm. gcd(0, 0) is an error.
Poly poly_gcd(const Poly& a, const Poly& b);

// f / gcd(f, f'), made monic: same distinct roots, all simple.
Poly squarefree_part(const Poly& f);

// Exact quotient; throws if b does not divide a.
Poly div_exact(const Poly& a, const Poly& b);

// Yun decomposition: returns [a1, a2, ...] with f = lc * prod a_i^i and each
// a_i monic squarefree, pairwise coprime (entries may be 1).
std::vector<Poly> squarefree_decomposition(const Poly& f);

namespace detail {
// Euclidean division: returns {quotient, remainder}, deg r < deg b.
// Not part of the public surface; callers outside the library get only
// div_exact, which enforces exactness.
std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b);
}  // namespace detail

// Canonical text form: every coefficient from power 0 through the degree is
// printed, e.g. "0 + 1*q - 1*q^2 + 2*q^3"; the zero polynomial is "0".
std::string poly_to_string(const Poly& f, char var = 'q');
// Accepts the canonical form plus forgiving variants (any single-letter
// variable, reordered or repeated powers, optional '*'). Exact round-trip:
// parse(poly_to_string(f)) == f.
Poly poly_from_string(std::string_view text);

}  // namespace polypos
