#include "polypos/transform.hpp"

#include <stdexcept>

#include "polypos/catalog.hpp"
#include "polypos/properties.hpp"
#include "polypos/stability.hpp"

namespace polypos {

PolyChain apply_transform(const Triangle& t, const SeedSequence& seed) {
  PolyChain out;
  out.start = t.first_row();
  for (int n = t.first_row(); n <= t.depth(); ++n) {
    Poly y;
    for (int k = 0; k < t.row_width(n); ++k) {
      if (k >= static_cast<int>(seed.values.size()))
        throw std::out_of_range("apply_transform: seed shorter than row width");
      y += t.entry(n, k) * seed.values[k];
    }
    out.polys.push_back(std::move(y));
  }
  return out;
}

namespace {

// Violations of "nonnegative and nondecreasing on 0..limit" for one
// coefficient function, appended to the clause list as "<name>:negative@i"
// or "<name>:decreasing@i".
void monotonicity_clauses(const Poly& func, const char* name, int limit,
                          std::string& clauses) {
  std::optional<int> first_negative, first_decreasing;
  Rat prev;
  for (int i = 0; i <= limit; ++i) {
    Rat value = eval(func, Rat(i));
    if (!first_negative && sign(value) < 0) first_negative = i;
    if (!first_decreasing && i > 0 && value < prev) first_decreasing = i;
    prev = value;
  }
  if (first_negative) {
    if (!clauses.empty()) clauses += "; ";
    clauses += std::string(name) + ":negative@" + std::to_string(*first_negative);
  }
  if (first_decreasing) {
    if (!clauses.empty()) clauses += "; ";
    clauses += std::string(name) + ":decreasing@" + std::to_string(*first_decreasing);
  }
}

}  // namespace

PropertyReport check_preservation_hypotheses(const TriangleSpec& spec, int n_max,
                                             int k_max) {
  std::map<std::string, std::string> range{{"n_max", std::to_string(n_max)},
                                           {"k_max", std::to_string(k_max)}};
  ResolvedFamily resolved = resolve(spec);
  if (!std::holds_alternative<GeneralThreeTermLeftParams>(resolved.recurrence))
    return fail_report("preservation-hypotheses", {{"reason", "not-left-family"}},
                       std::move(range));
  const auto& p = std::get<GeneralThreeTermLeftParams>(resolved.recurrence);
  const int limit = std::max(n_max, k_max);
  std::string clauses;
  monotonicity_clauses(p.r, "r", limit, clauses);
  monotonicity_clauses(p.s, "s", limit, clauses);
  monotonicity_clauses(p.t, "t", limit, clauses);
  monotonicity_clauses(p.f, "f", limit, clauses);
  monotonicity_clauses(p.g, "g", limit, clauses);
  monotonicity_clauses(p.h, "h", limit, clauses);

  Triangle tri = Triangle::generate(spec, n_max);
  PropertyReport tp = is_tp_r(tri, 2, n_max);
  std::map<std::string, std::string> witness;
  if (!clauses.empty()) witness["clauses"] = clauses;
  if (!tp.passed()) {
    witness["tp2"] = "violated";
    for (const auto& [k, v] : tp.witness) witness["tp2_" + k] = v;
  }
  if (!witness.empty())
    return fail_report("preservation-hypotheses", std::move(witness), std::move(range));
  return pass_report("preservation-hypotheses", std::move(range));
}

PropertyReport check_right_family_criteria(const ThreeTermRightParams& params,
                                           int k_max) {
  std::map<std::string, std::string> range{{"k_max", std::to_string(k_max)}};
  std::string clauses;
  monotonicity_clauses(params.f, "f", k_max, clauses);
  monotonicity_clauses(params.g, "g", k_max, clauses);
  monotonicity_clauses(params.h, "h", k_max, clauses);
  std::optional<int> cross_failure;
  Rat cross_value;
  for (int k = 0; k < k_max && !cross_failure; ++k) {
    Rat value = eval(params.g, Rat(k)) * eval(params.g, Rat(k + 1)) -
                eval(params.h, Rat(k)) * eval(params.f, Rat(k + 1));
    if (sign(value) < 0) {
      cross_failure = k;
      cross_value = value;
    }
  }
  std::map<std::string, std::string> witness;
  if (!clauses.empty()) witness["clauses"] = clauses;
  if (cross_failure) {
    witness["cross_k"] = std::to_string(*cross_failure);
    witness["cross_value"] = rat_to_string(cross_value);
  }
  if (!witness.empty())
    return fail_report("right-family-criteria", std::move(witness), std::move(range));
  return pass_report("right-family-criteria", std::move(range));
}

CkTable compute_ck_table(const Triangle& tri, int m, int n, int t) {
  if (tri.first_row() != 0)
    throw std::invalid_argument("compute_ck_table: triangle must start at row 0");
  if (!(m >= n && n >= 1)) throw std::invalid_argument("compute_ck_table: need m >= n >= 1");
  if (t < 0 || t > m + n) throw std::invalid_argument("compute_ck_table: need 0 <= t <= m+n");
  if (tri.depth() < m + 1)
    throw std::out_of_range("compute_ck_table: triangle depth must reach m+1");
  CkTable table{m, n, t, {}};
  for (int k = 0; 2 * k <= t; ++k) {
    if (2 * k == t) {
      table.values.push_back(tri.entry(n - 1, k) * tri.entry(m + 1, k) -
                             tri.entry(m, k) * tri.entry(n, k));
    } else {
      table.values.push_back(
          tri.entry(n - 1, k) * tri.entry(m + 1, t - k) +
          tri.entry(m + 1, k) * tri.entry(n - 1, t - k) -
          tri.entry(m, k) * tri.entry(n, t - k) - tri.entry(n, k) * tri.entry(m, t - k));
    }
  }
  return table;
}

PropertyReport check_ck_sign_pattern(const CkTable& table) {
  std::map<std::string, std::string> range{{"m", std::to_string(table.m)},
                                           {"n", std::to_string(table.n)},
                                           {"t", std::to_string(table.t)}};
  int prefix_end = -1;
  bool seen_negative = false;
  for (size_t k = 0; k < table.values.size(); ++k) {
    if (sign(table.values[k]) < 0) {
      seen_negative = true;
    } else if (seen_negative) {
      return fail_report("ck-single-sign-change",
                         {{"k", std::to_string(k)},
                          {"value", rat_to_string(table.values[k])},
                          {"first_negative", std::to_string(prefix_end + 1)}},
                         std::move(range));
    } else {
      prefix_end = static_cast<int>(k);
    }
  }
  PropertyReport report = pass_report("ck-single-sign-change", std::move(range));
  report.witness["prefix_end"] = std::to_string(prefix_end);
  return report;
}

PreservationMode preservation_mode_from_string(const std::string& s) {
  if (s == "strong-q") return PreservationMode::StrongQ;
  if (s == "q") return PreservationMode::Q;
  if (s == "numeric-log-convex") return PreservationMode::NumericLogConvex;
  throw std::invalid_argument("unknown preservation mode: " + s);
}

std::string preservation_mode_to_string(PreservationMode mode) {
  switch (mode) {
    case PreservationMode::StrongQ: return "strong-q";
    case PreservationMode::Q: return "q";
    case PreservationMode::NumericLogConvex: return "numeric-log-convex";
  }
  return "strong-q";
}

namespace {

std::vector<Rat> constant_terms(std::span<const Poly> polys) {
  std::vector<Rat> values;
  values.reserve(polys.size());
  for (const Poly& p : polys) {
    if (p.degree() > 0)
      throw std::invalid_argument("numeric mode requires constant polynomials");
    values.push_back(p.coeff(0));
  }
  return values;
}

PropertyReport check_mode(std::span<const Poly> polys, PreservationMode mode) {
  switch (mode) {
    case PreservationMode::StrongQ: return is_strongly_q_log_convex(polys);
    case PreservationMode::Q: return is_q_log_convex(polys);
    case PreservationMode::NumericLogConvex: {
      std::vector<Rat> values = constant_terms(polys);
      return is_log_convex(values);
    }
  }
  throw std::logic_error("unreachable");
}

std::string preserved_property_name(PreservationMode mode) {
  switch (mode) {
    case PreservationMode::StrongQ: return "preserves-strong-q-log-convexity";
    case PreservationMode::Q: return "preserves-q-log-convexity";
    case PreservationMode::NumericLogConvex: return "preserves-log-convexity";
  }
  return "preserves-strong-q-log-convexity";
}

std::string triangle_label(const TriangleSpec& spec) {
  if (const auto* b = std::get_if<BuiltinRef>(&spec.family)) {
    std::string label = b->id;
    if (b->z) label += "(z=" + rat_to_string(*b->z) + ")";
    if (b->m) label += "(m=" + rat_to_string(*b->m) + ")";
    return label;
  }
  return family_tag(spec);
}

}  // namespace

PropertyReport verify_preservation(const Triangle& t, const SeedSequence& seed,
                                   PreservationMode mode) {
  std::map<std::string, std::string> range{
      {"triangle", triangle_label(t.spec())},
      {"seed", seed.name},
      {"mode", preservation_mode_to_string(mode)},
      {"n_max", std::to_string(t.depth())}};
  const std::string property = preserved_property_name(mode);

  size_t needed = static_cast<size_t>(t.row_width(t.depth()));
  if (seed.values.size() < needed)
    throw std::invalid_argument("verify_preservation: seed too short for the triangle");
  std::span<const Poly> inputs(seed.values.data(), needed);
  PropertyReport input_check = check_mode(inputs, mode);
  if (!input_check.passed()) {
    PropertyReport report;
    report.property = property;
    report.verdict = Verdict::InputFail;
    report.witness = input_check.witness;
    report.witness["stage"] = "input";
    report.range = std::move(range);
    return report;
  }

  PolyChain transformed = apply_transform(t, seed);
  PropertyReport output_check = check_mode(transformed.polys, mode);
  if (!output_check.passed()) {
    std::map<std::string, std::string> witness = output_check.witness;
    witness["stage"] = "output";
    witness["index_base"] = std::to_string(transformed.start);
    return fail_report(property, std::move(witness), std::move(range));
  }
  return pass_report(property, std::move(range));
}

PropertyReport verify_stability_family(const std::string& family, int n_max,
                                       const std::optional<Rat>& fixed_q,
                                       const std::optional<Rat>& m) {
  const bool lah = family == "lah-associated";
  PolyChain chain;
  if (lah) {
    Triangle tri = Triangle::generate(builtin_spec(family, std::nullopt, m), n_max);
    chain.start = 0;
    for (int n = 0; n <= n_max; ++n) chain.polys.push_back(tri.row_gf(n));
  } else if (family == "eulerianA" || family == "eulerianB" ||
             family == "q-eulerianA" || family == "q-eulerianB") {
    chain = build_chain(family, n_max, fixed_q);
  } else {
    throw std::invalid_argument("verify_stability_family: unknown family " + family);
  }

  std::map<std::string, std::string> range{
      {"family", family},
      {"checker", lah ? "hurwitz" : "generalized"},
      {"n", std::to_string(chain.start + 1) + ".." + std::to_string(chain.last() - 1)}};
  if (fixed_q) range["fixed_q"] = rat_to_string(*fixed_q);
  if (m) range["m"] = rat_to_string(*m);

  const std::string property = lah ? "consecutive-products-hurwitz-stable"
                                   : "consecutive-products-generalized-stable";
  for (int n = chain.start + 1; n <= chain.last() - 1; ++n) {
    Poly diff = chain.at(n + 1) * chain.at(n - 1) - chain.at(n) * chain.at(n);
    if (diff.is_zero()) continue;  // no zeros at all, vacuously stable
    PropertyReport check = lah ? hurwitz_stable(diff) : generalized_stable(diff);
    if (!check.passed()) {
      std::map<std::string, std::string> witness = check.witness;
      witness["n"] = std::to_string(n);
      return fail_report(property, std::move(witness), std::move(range));
    }
  }
  return pass_report(property, std::move(range));
}

PropertyReport verify_qlogconvex_runs(int n_max) {
  static const char* kChains[] = {"runsA", "alt-subsequence", "updown-runs", "runsB"};
  std::map<std::string, std::string> range{
      {"chains", "runsA, alt-subsequence, updown-runs, runsB"},
      {"n_max", std::to_string(n_max)}};
  for (const char* id : kChains) {
    PolyChain chain = build_chain(id, n_max);
    PropertyReport check = is_q_log_convex(chain.polys);
    if (!check.passed()) {
      std::map<std::string, std::string> witness = check.witness;
      witness["chain"] = id;
      witness["index_base"] = std::to_string(chain.start);
      return fail_report("runs-q-log-convex", std::move(witness), std::move(range));
    }
  }
  return pass_report("runs-q-log-convex", std::move(range));
}

}  // namespace polypos
