#include <doctest.h>

#include <set>
#include <vector>

#include "oracles.hpp"
#include "polypos/chains.hpp"
#include "polypos/interlacing.hpp"

using namespace polypos;

namespace {

Poly linear_root(const Rat& r) { return Poly(std::vector<Rat>{-r, Rat(1)}); }

Poly poly_from_roots(const std::vector<Rat>& roots) {
  Poly f(Rat(1));
  for (const Rat& r : roots) f = f * linear_root(r);
  return f;
}

}  // namespace

TEST_CASE("standard polynomials") {
  CHECK(is_standard(Poly()));
  CHECK(is_standard(Poly(Rat(3))));
  CHECK(is_standard(poly_from_roots({Rat(-5)})));
  CHECK_FALSE(is_standard(Rat(-1) * Poly::variable()));
}

TEST_CASE("interlacing conventions") {
  Poly f = poly_from_roots({Rat(1), Rat(3)});
  CHECK(interlaces(Poly(), f).passed());
  CHECK(interlaces(f, Poly()).passed());
  CHECK(interlaces(Poly(Rat(2)), linear_root(Rat(1))).passed());
  CHECK(interlaces(Poly(Rat(2)), Poly(Rat(5))).passed());
}

TEST_CASE("basic interlacing verdicts") {
  Poly f = poly_from_roots({Rat(1), Rat(3)});
  CHECK(interlaces(linear_root(Rat(2)), f).passed());
  CHECK(interlaces(linear_root(Rat(1)), f).passed());  // tie at a shared root
  CHECK(interlaces(linear_root(Rat(3)), f).passed());

  PropertyReport outside = interlaces(linear_root(Rat(5)), f);
  CHECK(outside.verdict == Verdict::Fail);
  CHECK(outside.witness.at("reason") == "root-ordering");

  PropertyReport gap = interlaces(Poly(Rat(1)), poly_from_roots({Rat(0), Rat(1), Rat(2)}));
  CHECK(gap.verdict == Verdict::Fail);
  CHECK(gap.witness.at("reason") == "degree-gap");

  PropertyReport nonstd = interlaces(Rat(-1) * linear_root(Rat(2)), f);
  CHECK(nonstd.verdict == Verdict::Fail);
  CHECK(nonstd.witness.at("reason") == "not-standard");
  CHECK(nonstd.witness.at("which") == "g");

  Poly complex_pair(std::vector<Rat>{Rat(1), Rat(0), Rat(1)});
  PropertyReport unreal = interlaces(linear_root(Rat(0)), complex_pair);
  CHECK(unreal.verdict == Verdict::Fail);
  CHECK(unreal.witness.at("reason") == "not-real-rooted");
  CHECK(unreal.witness.at("which") == "f");
}

TEST_CASE("interlacing with shared factors reduces correctly") {
  // f = (q-1)(q-2), g = (q-1): 1 <= 1 <= 2 holds with a tie
  CHECK(interlaces(linear_root(Rat(1)), poly_from_roots({Rat(1), Rat(2)})).passed());

  // f = (q-1)^2 (q-2), g = (q-1)(q-3/2): forced tie at the double root
  Poly f = poly_from_roots({Rat(1), Rat(1), Rat(2)});
  Poly g = linear_root(Rat(1)) * linear_root(Rat(3, 2));
  CHECK(interlaces(g, f).passed());

  // f = (q-1)^3, g = (q-1)(q-2): the top root of g escapes past f's roots
  Poly triple = poly_from_roots({Rat(1), Rat(1), Rat(1)});
  CHECK_FALSE(interlaces(linear_root(Rat(1)) * linear_root(Rat(2)), triple).passed());
}

TEST_CASE("derivative interlaces any distinct-root polynomial") {
  oracles::RatGen gen(0x5eed0301);
  for (int trial = 0; trial < 60; ++trial) {
    std::set<Rat> roots;
    int count = static_cast<int>(gen.integer(2, 6));
    while (static_cast<int>(roots.size()) < count) roots.insert(gen.rat(15, 4));
    Poly f = poly_from_roots({roots.begin(), roots.end()});
    CHECK(interlaces(derivative(f), f).passed());
  }
}

TEST_CASE("planted interleaved roots pass, swapped roots fail") {
  oracles::RatGen gen(0x5eed0302);
  int passes = 0, fails = 0;
  for (int trial = 0; trial < 60; ++trial) {
    int deg = static_cast<int>(gen.integer(2, 5));
    std::set<Rat> pool;
    while (static_cast<int>(pool.size()) < 2 * deg - 1) pool.insert(gen.rat(30, 3));
    std::vector<Rat> sorted(pool.begin(), pool.end());
    std::vector<Rat> f_roots, g_roots;
    for (size_t i = 0; i < sorted.size(); ++i)
      (i % 2 == 0 ? f_roots : g_roots).push_back(sorted[i]);
    CHECK(interlaces(poly_from_roots(g_roots), poly_from_roots(f_roots)).passed());
    ++passes;
    // move g's top root beyond f's top root: ordering breaks
    if (g_roots.size() >= 1) {
      g_roots.back() = sorted.back() + 1;
      CHECK_FALSE(interlaces(poly_from_roots(g_roots), poly_from_roots(f_roots)).passed());
      ++fails;
    }
  }
  CHECK(passes > 0);
  CHECK(fails > 0);
}

TEST_CASE("generalized sturm sequences: derivative towers and chain families") {
  Poly f = poly_from_roots({Rat(1), Rat(2), Rat(4), Rat(7)});
  std::vector<Poly> tower{derivative(derivative(f)), derivative(f), f};
  CHECK(is_generalized_sturm_sequence(tower).passed());

  // type A Eulerian polynomials interlace consecutively
  PolyChain chain = build_chain("eulerianA", 7);
  std::vector<Poly> members(chain.polys.begin(), chain.polys.end());
  CHECK(is_generalized_sturm_sequence(members).passed());

  std::vector<Poly> broken{poly_from_roots({Rat(0), Rat(5)}),
                           poly_from_roots({Rat(1), Rat(2), Rat(3)})};
  PropertyReport bad = is_generalized_sturm_sequence(broken);
  CHECK(bad.verdict == Verdict::Fail);
  CHECK(bad.witness.at("index") == "0");

  std::vector<Poly> unreal{Poly(std::vector<Rat>{Rat(1), Rat(0), Rat(1)})};
  PropertyReport r = is_generalized_sturm_sequence(unreal);
  CHECK(r.verdict == Verdict::Fail);
  CHECK(r.witness.at("reason") == "not-real-rooted");

  CHECK(is_generalized_sturm_sequence(std::vector<Poly>{}).passed());
  CHECK(is_generalized_sturm_sequence(std::vector<Poly>{f}).passed());
}
