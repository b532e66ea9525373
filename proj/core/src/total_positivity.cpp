#include "polypos/total_positivity.hpp"

#include <stdexcept>
#include <string>

#include "polypos/stability.hpp"

namespace polypos {

namespace {

std::string index_list(const std::vector<int>& idx) {
  std::string out;
  for (size_t i = 0; i < idx.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(idx[i]);
  }
  return out;
}

Rat minor_value(const std::vector<std::vector<Rat>>& m, const std::vector<int>& rows,
                const std::vector<int>& cols) {
  const size_t j = rows.size();
  auto a = [&](int r, int c) -> const Rat& { return m[rows[r]][cols[c]]; };
  switch (j) {
    case 1:
      return a(0, 0);
    case 2:
      return a(0, 0) * a(1, 1) - a(0, 1) * a(1, 0);
    case 3:
      return a(0, 0) * (a(1, 1) * a(2, 2) - a(1, 2) * a(2, 1)) -
             a(0, 1) * (a(1, 0) * a(2, 2) - a(1, 2) * a(2, 0)) +
             a(0, 2) * (a(1, 0) * a(2, 1) - a(1, 1) * a(2, 0));
    default: {
      std::vector<std::vector<Rat>> sub(j, std::vector<Rat>(j));
      for (size_t r = 0; r < j; ++r)
        for (size_t c = 0; c < j; ++c) sub[r][c] = a(r, c);
      return exact_determinant(std::move(sub));
    }
  }
}

// Advances a strictly increasing index tuple within [0, limit); returns false
// once exhausted.
bool next_combination(std::vector<int>& idx, int limit) {
  const int j = static_cast<int>(idx.size());
  for (int i = j - 1; i >= 0; --i) {
    if (idx[i] < limit - (j - i)) {
      ++idx[i];
      for (int t = i + 1; t < j; ++t) idx[t] = idx[t - 1] + 1;
      return true;
    }
  }
  return false;
}

std::vector<int> first_combination(int j) {
  std::vector<int> idx(j);
  for (int i = 0; i < j; ++i) idx[i] = i;
  return idx;
}

}  // namespace

PropertyReport is_matrix_tp(const std::vector<std::vector<Rat>>& m, int order) {
  if (order < 1) throw std::invalid_argument("is_matrix_tp: order must be >= 1");
  const int n_rows = static_cast<int>(m.size());
  const int n_cols = n_rows == 0 ? 0 : static_cast<int>(m[0].size());
  for (const auto& row : m)
    if (static_cast<int>(row.size()) != n_cols)
      throw std::invalid_argument("is_matrix_tp: ragged matrix");
  std::map<std::string, std::string> range{{"order", std::to_string(order)},
                                           {"rows", std::to_string(n_rows)},
                                           {"cols", std::to_string(n_cols)}};
  for (int j = 1; j <= order && j <= n_rows && j <= n_cols; ++j) {
    std::vector<int> rows = first_combination(j);
    do {
      std::vector<int> cols = first_combination(j);
      do {
        Rat value = minor_value(m, rows, cols);
        if (sign(value) < 0)
          return fail_report("totally-positive",
                             {{"minor_order", std::to_string(j)},
                              {"rows", index_list(rows)},
                              {"cols", index_list(cols)},
                              {"minor", rat_to_string(value)}},
                             std::move(range));
      } while (next_combination(cols, n_cols));
    } while (next_combination(rows, n_rows));
  }
  return pass_report("totally-positive", std::move(range));
}

}  // namespace polypos
