#include "polypos/properties.hpp"

#include <stdexcept>
#include <string>

#include "polypos/total_positivity.hpp"

namespace polypos {

PropertyReport coeffwise_geq(const Poly& f, const Poly& g) {
  Poly diff = f - g;
  for (int k = 0; k <= diff.degree(); ++k) {
    if (sign(diff.coeff(k)) < 0)
      return fail_report("coefficientwise-geq",
                         {{"power", std::to_string(k)},
                          {"coefficient", rat_to_string(diff.coeff(k))}});
  }
  return pass_report("coefficientwise-geq");
}

PropertyReport is_log_convex(std::span<const Rat> seq,
                             bool require_strictly_positive) {
  std::map<std::string, std::string> range{{"length", std::to_string(seq.size())}};
  for (size_t k = 0; k < seq.size(); ++k) {
    if (sign(seq[k]) < 0)
      return fail_report("log-convex",
                         {{"reason", "negative-entry"},
                          {"k", std::to_string(k)},
                          {"value", rat_to_string(seq[k])}},
                         std::move(range));
    if (require_strictly_positive && seq[k] == 0)
      return fail_report("log-convex",
                         {{"reason", "zero-entry"}, {"k", std::to_string(k)}},
                         std::move(range));
  }
  for (size_t k = 1; k + 1 < seq.size(); ++k) {
    Rat lhs = seq[k - 1] * seq[k + 1];
    Rat rhs = seq[k] * seq[k];
    if (lhs < rhs)
      return fail_report("log-convex",
                         {{"k", std::to_string(k)},
                          {"neighbor_product", rat_to_string(lhs)},
                          {"square", rat_to_string(rhs)}},
                         std::move(range));
  }
  return pass_report("log-convex", std::move(range));
}

namespace {

PropertyReport q_log_convex_impl(std::span<const Poly> polys, bool strong) {
  const char* property = strong ? "strongly-q-log-convex" : "q-log-convex";
  const int last = static_cast<int>(polys.size()) - 1;
  std::map<std::string, std::string> range{{"indices", "0.." + std::to_string(last)}};
  for (int n = 1; n <= last - 1; ++n) {
    for (int m = strong ? 1 : n; m <= n; ++m) {
      Poly diff = polys[n + 1] * polys[m - 1] - polys[n] * polys[m];
      PropertyReport cw = coeffwise_geq(diff, Poly());
      if (!cw.passed()) {
        std::map<std::string, std::string> witness = cw.witness;
        witness["n"] = std::to_string(n);
        witness["m"] = std::to_string(m);
        return fail_report(property, std::move(witness), std::move(range));
      }
    }
  }
  return pass_report(property, std::move(range));
}

}  // namespace

PropertyReport is_strongly_q_log_convex(std::span<const Poly> polys) {
  return q_log_convex_impl(polys, true);
}

PropertyReport is_q_log_convex(std::span<const Poly> polys) {
  return q_log_convex_impl(polys, false);
}

PropertyReport is_tp_r(const Triangle& t, int order, int n_max) {
  if (n_max > t.depth())
    throw std::out_of_range("is_tp_r: n_max exceeds the generated depth");
  if (n_max < t.first_row())
    throw std::invalid_argument("is_tp_r: n_max below the first row");
  std::vector<std::vector<Rat>> m;
  for (int n = t.first_row(); n <= n_max; ++n) {
    std::vector<Rat> padded(n_max + 1, Rat(0));
    for (int k = 0; k < t.row_width(n); ++k) padded[k] = t.entry(n, k);
    m.push_back(std::move(padded));
  }
  PropertyReport report = is_matrix_tp(m, order);
  report.range["n_max"] = std::to_string(n_max);
  report.range["first_row"] = std::to_string(t.first_row());
  return report;
}

}  // namespace polypos
