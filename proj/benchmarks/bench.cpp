// Microbenchmarks for the hot paths: triangle generation, polynomial
// arithmetic, the positivity checks, and root isolation. Inputs are fixed
// and deterministic so runs are comparable.

#include <benchmark/benchmark.h>

#include <vector>

#include "polypos/catalog.hpp"
#include "polypos/poly.hpp"
#include "polypos/properties.hpp"
#include "polypos/rat.hpp"
#include "polypos/roots.hpp"
#include "polypos/stability.hpp"
#include "polypos/transform.hpp"
#include "polypos/triangle.hpp"

using namespace polypos;

namespace {

Poly dense_poly(int degree, int salt) {
  std::vector<Rat> coeffs(degree + 1);
  for (int i = 0; i <= degree; ++i) {
    coeffs[i] = Rat((i * salt) % 17 + 1, i % 5 + 1);
    coeffs[i].canonicalize();
  }
  return Poly(std::move(coeffs));
}

Poly distinct_linear_product(int degree) {
  Poly f(Rat(1));
  for (int i = 0; i < degree; ++i) {
    Rat root(2 * i - degree, i % 3 + 1);
    root.canonicalize();
    f = f * Poly({-root, Rat(1)});
  }
  return f;
}

void BM_TriangleGenerate(benchmark::State& state) {
  TriangleSpec spec = builtin_spec("stirling2");
  for (auto _ : state) {
    Triangle t = Triangle::generate(spec, static_cast<int>(state.range(0)));
    benchmark::DoNotOptimize(t);
  }
}
BENCHMARK(BM_TriangleGenerate)->Arg(16)->Arg(32)->Arg(64);

void BM_TriangleGenerateJacobiStirling(benchmark::State& state) {
  TriangleSpec spec = builtin_spec("jacobi-stirling-2", Rat(3, 2));
  for (auto _ : state) {
    Triangle t = Triangle::generate(spec, static_cast<int>(state.range(0)));
    benchmark::DoNotOptimize(t);
  }
}
BENCHMARK(BM_TriangleGenerateJacobiStirling)->Arg(16)->Arg(32)->Arg(64);

void BM_PolyMultiply(benchmark::State& state) {
  const int degree = static_cast<int>(state.range(0));
  Poly a = dense_poly(degree, 3);
  Poly b = dense_poly(degree, 7);
  for (auto _ : state) {
    Poly p = a * b;
    benchmark::DoNotOptimize(p);
  }
}
BENCHMARK(BM_PolyMultiply)->Arg(16)->Arg(64)->Arg(256);

void BM_PolyGcd(benchmark::State& state) {
  const int degree = static_cast<int>(state.range(0));
  Poly common = dense_poly(degree, 5);
  Poly a = common * dense_poly(degree, 3);
  Poly b = common * dense_poly(degree, 11);
  for (auto _ : state) {
    Poly g = poly_gcd(a, b);
    benchmark::DoNotOptimize(g);
  }
}
BENCHMARK(BM_PolyGcd)->Arg(8)->Arg(16)->Arg(32);

void BM_StrongQLogConvex(benchmark::State& state) {
  const int depth = static_cast<int>(state.range(0));
  Triangle t = Triangle::generate(builtin_spec("stirling2"), depth);
  std::vector<Poly> rows;
  for (int n = 0; n <= depth; ++n) rows.push_back(t.row_gf(n));
  for (auto _ : state) {
    PropertyReport r = is_strongly_q_log_convex(rows);
    benchmark::DoNotOptimize(r);
  }
}
BENCHMARK(BM_StrongQLogConvex)->Arg(8)->Arg(12)->Arg(16);

void BM_TotalPositivityMinors(benchmark::State& state) {
  const int depth = static_cast<int>(state.range(0));
  Triangle t = Triangle::generate(builtin_spec("pascal"), depth);
  for (auto _ : state) {
    PropertyReport r = is_tp_r(t, 2, depth);
    benchmark::DoNotOptimize(r);
  }
}
BENCHMARK(BM_TotalPositivityMinors)->Arg(8)->Arg(16)->Arg(24);

void BM_RootIsolation(benchmark::State& state) {
  Poly f = distinct_linear_product(static_cast<int>(state.range(0)));
  for (auto _ : state) {
    RootIsolation iso = isolate_roots(f);
    benchmark::DoNotOptimize(iso);
  }
}
BENCHMARK(BM_RootIsolation)->Arg(4)->Arg(8);

void BM_StabilityFamily(benchmark::State& state) {
  const int n_max = static_cast<int>(state.range(0));
  for (auto _ : state) {
    PropertyReport r = verify_stability_family("eulerianB", n_max);
    benchmark::DoNotOptimize(r);
  }
}
BENCHMARK(BM_StabilityFamily)->Arg(6)->Arg(10);

}  // namespace

BENCHMARK_MAIN();
