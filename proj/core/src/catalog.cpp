#include "polypos/catalog.hpp"

#include <stdexcept>

namespace polypos {

namespace {

Poly npoly(std::vector<Rat> coeffs) { return Poly(std::move(coeffs)); }

AffineTwoTermParams affine(long a0, long a2, long a3, long b0, long b2, long b3) {
  return {Rat(a0), Rat(a2), Rat(a3), Rat(b0), Rat(b2), Rat(b3)};
}

}  // namespace

const std::vector<CatalogEntry>& catalog() {
  static const std::vector<CatalogEntry> entries = {
      {"stirling2", "AffineTwoTerm", false, false,
       "Stirling numbers of the second kind (set partitions by block count)"},
      {"stirling1-signless", "AffineTwoTerm", false, false,
       "Signless Stirling numbers of the first kind (permutations by cycle count)"},
      {"jacobi-stirling-2", "QuadraticTwoTerm", true, false,
       "Jacobi-Stirling numbers of the second kind, parameter z"},
      {"jacobi-stirling-1", "GeneralThreeTermLeft", true, false,
       "Jacobi-Stirling numbers of the first kind, parameter z"},
      {"legendre-stirling-2", "QuadraticTwoTerm", false, false,
       "Legendre-Stirling numbers of the second kind (Jacobi-Stirling at z = 1)"},
      {"legendre-stirling-1", "GeneralThreeTermLeft", false, false,
       "Legendre-Stirling numbers of the first kind (Jacobi-Stirling at z = 1)"},
      {"central-factorial-U", "QuadraticTwoTerm", false, false,
       "Central factorial numbers U(n,k) (even-index subsequence)"},
      {"central-factorial-V", "QuadraticTwoTerm", false, false,
       "Central factorial numbers of odd indices V(n,k)"},
      {"ramanujan", "AffineTwoTerm", false, false,
       "Coefficients of the polynomials from Ramanujan's expansion of e^x truncations"},
      {"lah-associated", "AffineTwoTerm", false, true,
       "m-associated Lah numbers (partitions into ordered blocks of size >= m)"},
      {"eulerianA", "AffineTwoTerm", false, false,
       "Eulerian numbers of type A (permutations by descent count)"},
      {"eulerianB", "AffineTwoTerm", false, false,
       "Eulerian numbers of type B (signed permutations by type-B descents)"},
      {"runsA", "GeneralThreeTermLeft", false, false,
       "Permutations of [n] by number of alternating runs"},
      {"runsB", "GeneralThreeTermLeft", false, false,
       "Signed permutations by number of alternating runs"},
      {"pascal", "AffineTwoTerm", false, false, "Binomial coefficients"},
      {"motzkin", "ThreeTermRight", false, false,
       "Motzkin triangle (lattice paths by final height)"},
  };
  return entries;
}

TriangleSpec builtin_spec(const std::string& id, std::optional<Rat> z,
                          std::optional<Rat> m) {
  for (const CatalogEntry& entry : catalog()) {
    if (entry.id != id) continue;
    BuiltinRef ref;
    ref.id = id;
    if (entry.needs_z) ref.z = z.value_or(Rat(1));
    if (entry.needs_m) ref.m = m.value_or(Rat(1));
    return TriangleSpec{ref, std::nullopt};
  }
  throw std::invalid_argument("unknown builtin triangle: " + id);
}

TriangleSpec builtin_spec_expanded(const BuiltinRef& ref) {
  const std::string& id = ref.id;
  TriangleSpec spec;
  if (id == "stirling2") {
    spec.family = affine(0, 1, 0, 0, 0, 1);
  } else if (id == "stirling1-signless") {
    spec.family = affine(1, 0, -1, 0, 0, 1);
  } else if (id == "jacobi-stirling-2" || id == "legendre-stirling-2") {
    Rat z = id == "legendre-stirling-2" ? Rat(1) : ref.z.value_or(Rat(1));
    // coefficient on T(n-1,k) is k(k+z) = k^2 + z*k
    spec.family = QuadraticTwoTermParams{Rat(0), Rat(1), z,      Rat(0),
                                         Rat(0), Rat(0), Rat(0), Rat(1)};
  } else if (id == "jacobi-stirling-1" || id == "legendre-stirling-1") {
    Rat z = id == "legendre-stirling-1" ? Rat(1) : ref.z.value_or(Rat(1));
    // coefficient on T(n-1,k) is (n-1)(n-1+z) = n^2 + (z-2)n + (1-z)
    GeneralThreeTermLeftParams p;
    p.r = npoly({Rat(1) - z, z - Rat(2), Rat(1)});
    p.s = Poly(Rat(1));
    spec.family = std::move(p);
  } else if (id == "central-factorial-U") {
    // T(n,k) = k^2 T(n-1,k) + T(n-1,k-1)
    spec.family = QuadraticTwoTermParams{Rat(0), Rat(1), Rat(0), Rat(0),
                                         Rat(0), Rat(0), Rat(0), Rat(1)};
  } else if (id == "central-factorial-V") {
    // T(n,k) = (2k+1)^2 T(n-1,k) + T(n-1,k-1)
    spec.family = QuadraticTwoTermParams{Rat(0), Rat(4), Rat(4), Rat(1),
                                         Rat(0), Rat(0), Rat(0), Rat(1)};
  } else if (id == "ramanujan") {
    // T(n,k) = (n-1) T(n-1,k) + (n+k-2) T(n-1,k-1), rows start at n = 1
    spec.family = affine(1, 0, -1, 1, 1, -2);
    spec.initial = Boundary{1, {Rat(1)}, 1};
  } else if (id == "lah-associated") {
    Rat m = ref.m.value_or(Rat(1));
    // T(n,k) = (mk + n - 1) T(n-1,k) + m T(n-1,k-1)
    spec.family = AffineTwoTermParams{Rat(1), m, Rat(-1), Rat(0), Rat(0), m};
  } else if (id == "eulerianA") {
    // T(n,k) = k T(n-1,k) + (n-k+1) T(n-1,k-1)
    spec.family = affine(0, 1, 0, 1, -1, 1);
  } else if (id == "eulerianB") {
    // T(n,k) = (2k+1) T(n-1,k) + (2n-2k+1) T(n-1,k-1)
    spec.family = affine(0, 2, 1, 2, -2, 1);
  } else if (id == "runsA") {
    // T(n,k) = k T(n-1,k) + 2 T(n-1,k-1) + (n-k) T(n-1,k-2), rows start at n = 1
    GeneralThreeTermLeftParams p;
    p.f = npoly({Rat(0), Rat(1)});
    p.s = Poly(Rat(2));
    p.t = npoly({Rat(0), Rat(1)});
    p.h = npoly({Rat(0), Rat(-1)});
    spec.family = std::move(p);
    spec.initial = Boundary{1, {Rat(1)}, 1};
  } else if (id == "runsB") {
    // T(n,k) = (2k-1) T(n-1,k) + 3 T(n-1,k-1) + (2n-2k+2) T(n-1,k-2),
    // rows start at n = 1 with T(1,0) = 0, T(1,1) = 1
    GeneralThreeTermLeftParams p;
    p.f = npoly({Rat(-1), Rat(2)});
    p.s = Poly(Rat(3));
    p.t = npoly({Rat(2), Rat(2)});
    p.h = npoly({Rat(0), Rat(-2)});
    spec.family = std::move(p);
    spec.initial = Boundary{1, {Rat(0), Rat(1)}, 0};
  } else if (id == "pascal") {
    spec.family = affine(0, 0, 1, 0, 0, 1);
  } else if (id == "motzkin") {
    spec.family = ThreeTermRightParams{Poly(Rat(1)), Poly(Rat(1)), Poly(Rat(1))};
  } else {
    throw std::invalid_argument("unknown builtin triangle: " + id);
  }
  return spec;
}

namespace {

Rat falling_binomial(const Rat& x, int n) {
  // C(x, n) for rational x, integer n >= 0
  Rat numerator(1);
  for (int i = 0; i < n; ++i) numerator *= x - Rat(i);
  Rat factorial(1);
  for (int i = 2; i <= n; ++i) factorial *= Rat(i);
  return numerator / factorial;
}

Rat integer_binomial(int n, int k) {
  if (k < 0 || k > n) return Rat(0);
  return falling_binomial(Rat(n), k);
}

}  // namespace

Rat lah_closed_form(const Rat& m, int n, int k) {
  if (n < 0 || k < 0 || k > n) return Rat(0);
  if (k == 0) return Rat(n == 0 ? 1 : 0);
  Rat ratio(1);  // n! / k!
  for (int i = k + 1; i <= n; ++i) ratio *= Rat(i);
  Rat sum(0);
  for (int i = 1; i <= k; ++i) {
    Rat term = integer_binomial(k, i) * falling_binomial(Rat(n) + m * Rat(i) - 1, n);
    sum += (k - i) % 2 == 0 ? term : -term;
  }
  return ratio * sum;
}

}  // namespace polypos
