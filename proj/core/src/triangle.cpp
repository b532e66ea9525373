#include "polypos/triangle.hpp"

#include <json.hpp>
#include <stdexcept>

#include "polypos/catalog.hpp"

namespace polypos {

namespace {

Poly affine(const Rat& slope, const Rat& offset) {
  return Poly(std::vector<Rat>{offset, slope});
}

Poly quadratic(const Rat& square, const Rat& slope, const Rat& offset) {
  return Poly(std::vector<Rat>{offset, slope, square});
}

GeneralThreeTermLeftParams to_left(const AffineTwoTermParams& p) {
  GeneralThreeTermLeftParams left;
  left.r = affine(p.a0, p.a3);
  left.f = affine(p.a2, Rat(0));
  left.s = affine(p.b0, p.b3);
  left.g = affine(p.b2, Rat(0));
  return left;
}

GeneralThreeTermLeftParams to_left(const QuadraticTwoTermParams& p) {
  GeneralThreeTermLeftParams left;
  left.r = affine(p.a0, p.a3);
  left.f = quadratic(p.a1, p.a2, Rat(0));
  left.s = affine(p.b0, p.b3);
  left.g = quadratic(p.b1, p.b2, Rat(0));
  return left;
}

}  // namespace

ResolvedFamily resolve(const TriangleSpec& spec) {
  ResolvedFamily resolved;
  if (const auto* b = std::get_if<BuiltinRef>(&spec.family)) {
    TriangleSpec expanded = builtin_spec_expanded(*b);
    resolved = resolve(expanded);
    if (spec.initial) resolved.boundary = *spec.initial;
    return resolved;
  }
  if (const auto* a = std::get_if<AffineTwoTermParams>(&spec.family))
    resolved.recurrence = to_left(*a);
  else if (const auto* q = std::get_if<QuadraticTwoTermParams>(&spec.family))
    resolved.recurrence = to_left(*q);
  else if (const auto* g = std::get_if<GeneralThreeTermLeftParams>(&spec.family))
    resolved.recurrence = *g;
  else
    resolved.recurrence = std::get<ThreeTermRightParams>(spec.family);
  if (spec.initial) resolved.boundary = *spec.initial;
  return resolved;
}

std::string family_tag(const TriangleSpec& spec) {
  struct Tag {
    std::string operator()(const AffineTwoTermParams&) const { return "AffineTwoTerm"; }
    std::string operator()(const QuadraticTwoTermParams&) const { return "QuadraticTwoTerm"; }
    std::string operator()(const GeneralThreeTermLeftParams&) const {
      return "GeneralThreeTermLeft";
    }
    std::string operator()(const ThreeTermRightParams&) const { return "ThreeTermRight"; }
    std::string operator()(const BuiltinRef&) const { return "Builtin"; }
  };
  return std::visit(Tag{}, spec.family);
}

int Triangle::row_width(int n) const {
  return n + 1 - boundary_.width_deficit;
}

const std::vector<Rat>& Triangle::row(int n) const {
  if (n < first_row() || n > depth())
    throw std::out_of_range("Triangle::row: row " + std::to_string(n) + " not generated");
  return rows_[n - first_row()];
}

Rat Triangle::entry(int n, int k) const {
  if (n > depth()) throw std::out_of_range("Triangle::entry: row beyond generated depth");
  if (n < first_row() || k < 0 || k >= row_width(n)) return Rat(0);
  return rows_[n - first_row()][k];
}

Poly Triangle::row_gf(int n) const { return Poly(row(n)); }

Poly row_gf(const Triangle& t, int n) { return t.row_gf(n); }

std::vector<std::vector<Rat>> Triangle::as_matrix() const {
  std::vector<std::vector<Rat>> m;
  m.reserve(rows_.size());
  for (int n = first_row(); n <= depth(); ++n) {
    std::vector<Rat> padded(depth() + 1, Rat(0));
    const auto& r = row(n);
    for (size_t k = 0; k < r.size(); ++k) padded[k] = r[k];
    m.push_back(std::move(padded));
  }
  return m;
}

Triangle Triangle::generate(const TriangleSpec& spec, int n_max) {
  ResolvedFamily resolved = resolve(spec);
  const Boundary& boundary = resolved.boundary;
  if (boundary.width_deficit < 0 || boundary.width_deficit > 1)
    throw std::invalid_argument("Triangle::generate: width_deficit must be 0 or 1");
  if (n_max < boundary.first_row)
    throw std::invalid_argument("Triangle::generate: n_max below the first row");

  Triangle t(spec, boundary);
  const int base_width = boundary.first_row + 1 - boundary.width_deficit;
  if (static_cast<int>(boundary.base_row.size()) != base_width)
    throw std::invalid_argument("Triangle::generate: base row width mismatch");
  t.rows_.push_back(boundary.base_row);

  const bool left = std::holds_alternative<GeneralThreeTermLeftParams>(resolved.recurrence);
  for (int n = boundary.first_row + 1; n <= n_max; ++n) {
    const std::vector<Rat>& prev = t.rows_.back();
    auto prev_at = [&](int k) -> Rat {
      if (k < 0 || k >= static_cast<int>(prev.size())) return Rat(0);
      return prev[k];
    };
    const int width = n + 1 - boundary.width_deficit;
    std::vector<Rat> row(width);
    if (left) {
      const auto& p = std::get<GeneralThreeTermLeftParams>(resolved.recurrence);
      Rat rn = eval(p.r, Rat(n)), sn = eval(p.s, Rat(n)), tn = eval(p.t, Rat(n));
      for (int k = 0; k < width; ++k) {
        Rat kk(k);
        row[k] = (rn + eval(p.f, kk)) * prev_at(k) + (sn + eval(p.g, kk)) * prev_at(k - 1) +
                 (tn + eval(p.h, kk)) * prev_at(k - 2);
      }
    } else {
      const auto& p = std::get<ThreeTermRightParams>(resolved.recurrence);
      for (int k = 0; k < width; ++k) {
        Rat kk(k);
        row[k] = eval(p.f, kk) * prev_at(k - 1) + eval(p.g, kk) * prev_at(k) +
                 eval(p.h, kk) * prev_at(k + 1);
      }
    }
    t.rows_.push_back(std::move(row));
  }
  return t;
}

std::string Triangle::to_csv() const {
  std::string out;
  for (int n = first_row(); n <= depth(); ++n) {
    const auto& r = row(n);
    for (size_t k = 0; k < r.size(); ++k) {
      if (k) out += ",";
      out += rat_to_string(r[k]);
    }
    out += "\n";
  }
  return out;
}

std::string Triangle::to_json() const {
  nlohmann::ordered_json j;
  j["first_row"] = first_row();
  j["rows"] = nlohmann::ordered_json::array();
  for (int n = first_row(); n <= depth(); ++n) {
    nlohmann::ordered_json row_json = nlohmann::ordered_json::array();
    for (const Rat& v : row(n)) row_json.push_back(rat_to_string(v));
    j["rows"].push_back(std::move(row_json));
  }
  return j.dump();
}

namespace {

using nlohmann::ordered_json;

ordered_json poly_json(const Poly& p, char var) { return poly_to_string(p, var); }

ordered_json boundary_json(const Boundary& b) {
  ordered_json j;
  j["first_row"] = b.first_row;
  j["base_row"] = ordered_json::array();
  for (const Rat& v : b.base_row) j["base_row"].push_back(rat_to_string(v));
  j["width_deficit"] = b.width_deficit;
  return j;
}

Boundary boundary_from_json(const ordered_json& j) {
  Boundary b;
  b.first_row = j.at("first_row").get<int>();
  b.base_row.clear();
  for (const auto& v : j.at("base_row")) b.base_row.push_back(rat_from_string(v.get<std::string>()));
  b.width_deficit = j.value("width_deficit", 0);
  return b;
}

Rat rat_field(const ordered_json& params, const char* name) {
  return rat_from_string(params.at(name).get<std::string>());
}

Poly poly_field(const ordered_json& params, const char* name) {
  return poly_from_string(params.at(name).get<std::string>());
}

}  // namespace

std::string triangle_spec_to_json(const TriangleSpec& spec) {
  ordered_json j;
  j["family"] = family_tag(spec);
  if (const auto* b = std::get_if<BuiltinRef>(&spec.family)) {
    j["builtin"] = b->id;
    if (b->z) j["z"] = rat_to_string(*b->z);
    if (b->m) j["m"] = rat_to_string(*b->m);
    if (b->fixed_q) j["fixed_q"] = rat_to_string(*b->fixed_q);
  } else if (const auto* a = std::get_if<AffineTwoTermParams>(&spec.family)) {
    ordered_json p;
    p["a0"] = rat_to_string(a->a0);
    p["a2"] = rat_to_string(a->a2);
    p["a3"] = rat_to_string(a->a3);
    p["b0"] = rat_to_string(a->b0);
    p["b2"] = rat_to_string(a->b2);
    p["b3"] = rat_to_string(a->b3);
    j["params"] = std::move(p);
  } else if (const auto* q = std::get_if<QuadraticTwoTermParams>(&spec.family)) {
    ordered_json p;
    p["a0"] = rat_to_string(q->a0);
    p["a1"] = rat_to_string(q->a1);
    p["a2"] = rat_to_string(q->a2);
    p["a3"] = rat_to_string(q->a3);
    p["b0"] = rat_to_string(q->b0);
    p["b1"] = rat_to_string(q->b1);
    p["b2"] = rat_to_string(q->b2);
    p["b3"] = rat_to_string(q->b3);
    j["params"] = std::move(p);
  } else if (const auto* g = std::get_if<GeneralThreeTermLeftParams>(&spec.family)) {
    ordered_json p;
    p["r"] = poly_json(g->r, 'n');
    p["s"] = poly_json(g->s, 'n');
    p["t"] = poly_json(g->t, 'n');
    p["f"] = poly_json(g->f, 'k');
    p["g"] = poly_json(g->g, 'k');
    p["h"] = poly_json(g->h, 'k');
    j["params"] = std::move(p);
  } else {
    const auto& r = std::get<ThreeTermRightParams>(spec.family);
    ordered_json p;
    p["f"] = poly_json(r.f, 'k');
    p["g"] = poly_json(r.g, 'k');
    p["h"] = poly_json(r.h, 'k');
    j["params"] = std::move(p);
  }
  if (spec.initial) j["initial"] = boundary_json(*spec.initial);
  return j.dump(2) + "\n";
}

TriangleSpec triangle_spec_from_json(const std::string& text) {
  ordered_json j;
  try {
    j = ordered_json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw std::invalid_argument(std::string("triangle spec: invalid JSON: ") + e.what());
  }
  TriangleSpec spec;
  const std::string family = j.at("family").get<std::string>();
  if (family == "Builtin") {
    BuiltinRef b;
    b.id = j.at("builtin").get<std::string>();
    if (j.contains("z")) b.z = rat_from_string(j["z"].get<std::string>());
    if (j.contains("m")) b.m = rat_from_string(j["m"].get<std::string>());
    if (j.contains("fixed_q")) b.fixed_q = rat_from_string(j["fixed_q"].get<std::string>());
    spec.family = std::move(b);
  } else if (family == "AffineTwoTerm") {
    const auto& p = j.at("params");
    spec.family = AffineTwoTermParams{rat_field(p, "a0"), rat_field(p, "a2"),
                                      rat_field(p, "a3"), rat_field(p, "b0"),
                                      rat_field(p, "b2"), rat_field(p, "b3")};
  } else if (family == "QuadraticTwoTerm") {
    const auto& p = j.at("params");
    spec.family = QuadraticTwoTermParams{rat_field(p, "a0"), rat_field(p, "a1"),
                                         rat_field(p, "a2"), rat_field(p, "a3"),
                                         rat_field(p, "b0"), rat_field(p, "b1"),
                                         rat_field(p, "b2"), rat_field(p, "b3")};
  } else if (family == "GeneralThreeTermLeft") {
    const auto& p = j.at("params");
    spec.family = GeneralThreeTermLeftParams{poly_field(p, "r"), poly_field(p, "s"),
                                             poly_field(p, "t"), poly_field(p, "f"),
                                             poly_field(p, "g"), poly_field(p, "h")};
  } else if (family == "ThreeTermRight") {
    const auto& p = j.at("params");
    spec.family = ThreeTermRightParams{poly_field(p, "f"), poly_field(p, "g"),
                                       poly_field(p, "h")};
  } else {
    throw std::invalid_argument("triangle spec: unknown family tag: " + family);
  }
  if (j.contains("initial")) spec.initial = boundary_from_json(j["initial"]);
  return spec;
}

}  // namespace polypos
