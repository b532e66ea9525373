#pragma once

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "polypos/poly.hpp"
#include "polypos/rat.hpp"

namespace polypos {

// T(n,k) = (a0*n + a2*k + a3) T(n-1,k) + (b0*n + b2*k + b3) T(n-1,k-1)
struct AffineTwoTermParams {
  Rat a0, a2, a3;
  Rat b0, b2, b3;
  friend bool operator==(const AffineTwoTermParams&, const AffineTwoTermParams&) = default;
};

// T(n,k) = (a0*n + a1*k^2 + a2*k + a3) T(n-1,k)
//        + (b0*n + b1*k^2 + b2*k + b3) T(n-1,k-1)
struct QuadraticTwoTermParams {
  Rat a0, a1, a2, a3;
  Rat b0, b1, b2, b3;
  friend bool operator==(const QuadraticTwoTermParams&, const QuadraticTwoTermParams&) = default;
};

// T(n,k) = [r(n) + f(k)] T(n-1,k) + [s(n) + g(k)] T(n-1,k-1)
//        + [t(n) + h(k)] T(n-1,k-2)
struct GeneralThreeTermLeftParams {
  Poly r, s, t;  // in n
  Poly f, g, h;  // in k
  friend bool operator==(const GeneralThreeTermLeftParams&, const GeneralThreeTermLeftParams&) = default;
};

// T(n,k) = f(k) T(n-1,k-1) + g(k) T(n-1,k) + h(k) T(n-1,k+1)
struct ThreeTermRightParams {
  Poly f, g, h;  // in k
  friend bool operator==(const ThreeTermRightParams&, const ThreeTermRightParams&) = default;
};

struct BuiltinRef {
  std::string id;
  std::optional<Rat> z;
  std::optional<Rat> m;
  std::optional<Rat> fixed_q;
  friend bool operator==(const BuiltinRef&, const BuiltinRef&) = default;
};

// Boundary convention: the triangle starts at `first_row` with the given base
// row; row n has n + 1 - width_deficit entries (k = 0 .. width-1) and is zero
// outside. The default is the standard T(0,0) = 1 start.
struct Boundary {
  int first_row = 0;
  std::vector<Rat> base_row = {Rat(1)};
  int width_deficit = 0;
  friend bool operator==(const Boundary&, const Boundary&) = default;
};

using FamilyParams = std::variant<AffineTwoTermParams, QuadraticTwoTermParams,
                                  GeneralThreeTermLeftParams, ThreeTermRightParams,
                                  BuiltinRef>;

struct TriangleSpec {
  FamilyParams family;
  // Explicit boundary override; builtins supply their own when absent.
  std::optional<Boundary> initial;
  friend bool operator==(const TriangleSpec&, const TriangleSpec&) = default;
};

// Builtin-free form: recurrence coefficients plus the boundary actually used.
struct ResolvedFamily {
  std::variant<GeneralThreeTermLeftParams, ThreeTermRightParams> recurrence;
  Boundary boundary;
};

// Expands builtin references and folds the two-term families into the general
// left form (n-constants kept in r/s/t, pure k-dependence in f/g/h).
ResolvedFamily resolve(const TriangleSpec& spec);

std::string family_tag(const TriangleSpec& spec);

// Serialization. The writer emits a canonical form (fixed key order, exact
// rational/polynomial text); parse(write(spec)) == spec and writing is a
// fixpoint on parsed files.
std::string triangle_spec_to_json(const TriangleSpec& spec);
TriangleSpec triangle_spec_from_json(const std::string& text);

class Triangle {
 public:
  static Triangle generate(const TriangleSpec& spec, int n_max);

  const TriangleSpec& spec() const { return spec_; }
  int first_row() const { return boundary_.first_row; }
  int depth() const { return first_row() + static_cast<int>(rows_.size()) - 1; }
  int row_width(int n) const;
  const std::vector<Rat>& row(int n) const;
  // Zero outside the stored triangle; rows beyond depth() are an error.
  Rat entry(int n, int k) const;
  Poly row_gf(int n) const;
  // Rows first_row..depth as a zero-padded rectangle with depth+1 columns.
  std::vector<std::vector<Rat>> as_matrix() const;

  std::string to_csv() const;
  std::string to_json() const;

 private:
  Triangle(TriangleSpec spec, Boundary boundary) : spec_(std::move(spec)), boundary_(std::move(boundary)) {}
  TriangleSpec spec_;
  Boundary boundary_;
  std::vector<std::vector<Rat>> rows_;
};

Poly row_gf(const Triangle& t, int n);

}  // namespace polypos
