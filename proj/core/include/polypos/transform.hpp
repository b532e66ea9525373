#pragma once

#include <optional>
#include <string>
#include <vector>

#include "polypos/chains.hpp"
#include "polypos/report.hpp"
#include "polypos/seeds.hpp"
#include "polypos/triangle.hpp"

namespace polypos {

// y_n = sum_k T(n,k) x_k for every generated row; the result chain starts at
// the triangle's first row. The seed must cover indices 0..depth.
PolyChain apply_transform(const Triangle& t, const SeedSequence& seed);

// Hypotheses under which a left-family transform preserves (strong)
// q-log-convexity: all six coefficient functions nonnegative and
// nondecreasing on 0..max(n_max, k_max), and the triangle TP_2 up to n_max.
// Right-family specs FAIL with reason "not-left-family". The witness lists
// every violated clause.
PropertyReport check_preservation_hypotheses(const TriangleSpec& spec, int n_max,
                                             int k_max);

// Row-criteria for the right-hand three-term family: f, g, h nonnegative and
// nondecreasing on 0..k_max, and g_k g_{k+1} - h_k f_{k+1} >= 0 for k < k_max.
PropertyReport check_right_family_criteria(const ThreeTermRightParams& params,
                                           int k_max);

// C_k table for a right-family product difference at indices (m, n, t):
//   C_k = T(n-1,k) T(m+1,t-k) + T(m+1,k) T(n-1,t-k)
//       - T(m,k) T(n,t-k) - T(n,k) T(m,t-k)           for 0 <= k < t/2,
// and for even t the halved midpoint term
//   C_{t/2} = T(n-1,t/2) T(m+1,t/2) - T(m,t/2) T(n,t/2).
// Preconditions: m >= n >= 1, 0 <= t <= m + n, depth >= m+1, first_row == 0.
struct CkTable {
  int m = 0, n = 0, t = 0;
  std::vector<Rat> values;  // k = 0 .. floor(t/2)
};

CkTable compute_ck_table(const Triangle& tri, int m, int n, int t);

// PASS iff the table is a nonnegative prefix followed by a negative suffix
// (either may be empty); the report carries the last nonnegative index.
PropertyReport check_ck_sign_pattern(const CkTable& table);

enum class PreservationMode { StrongQ, Q, NumericLogConvex };

PreservationMode preservation_mode_from_string(const std::string& s);
std::string preservation_mode_to_string(PreservationMode mode);

// Checks the seed first (INPUT-FAIL when it lacks the property), then the
// transformed sequence y_n over the generated rows.
PropertyReport verify_preservation(const Triangle& t, const SeedSequence& seed,
                                   PreservationMode mode);

// Stability of consecutive products: for every chain index n with both
// neighbors in range, f_{n+1} f_{n-1} - f_n^2 must pass generalized_stable
// (strict hurwitz_stable for the lah-associated family, whose claim is
// stronger). Families: eulerianA, eulerianB, q-eulerianA, q-eulerianB
// (fixed_q required), lah-associated (m parameter). Identically zero
// differences are vacuously stable.
PropertyReport verify_stability_family(const std::string& family, int n_max,
                                       const std::optional<Rat>& fixed_q = std::nullopt,
                                       const std::optional<Rat>& m = std::nullopt);

// q-log-convexity of the four run-statistics chains (runsA, alt-subsequence,
// updown-runs, runsB) up to n_max, aggregated into one report.
PropertyReport verify_qlogconvex_runs(int n_max);

}  // namespace polypos
