#include "polypos/rat.hpp"

#include <cctype>
#include <stdexcept>

namespace polypos {

int sign(const Rat& x) { return sgn(x); }

std::string rat_to_string(const Rat& x) {
  // mpq_class values built straight from a numerator/denominator pair may not
  // be in lowest terms yet; the text form always is.
  Rat c(x);
  c.canonicalize();
  if (c.get_den() == 1) return c.get_num().get_str();
  return c.get_num().get_str() + "/" + c.get_den().get_str();
}

namespace {

bool valid_integer_token(std::string_view s) {
  if (!s.empty() && (s.front() == '+' || s.front() == '-')) s.remove_prefix(1);
  if (s.empty()) return false;
  for (char c : s)
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  return true;
}

}  // namespace

Rat rat_from_string(std::string_view text) {
  size_t first = text.find_first_not_of(" \t");
  size_t last = text.find_last_not_of(" \t");
  if (first == std::string_view::npos)
    throw std::invalid_argument("empty rational literal");
  std::string_view body = text.substr(first, last - first + 1);

  std::string_view num = body, den;
  if (size_t slash = body.find('/'); slash != std::string_view::npos) {
    num = body.substr(0, slash);
    den = body.substr(slash + 1);
    if (!valid_integer_token(den))
      throw std::invalid_argument("bad rational literal: " + std::string(text));
  }
  if (!valid_integer_token(num))
    throw std::invalid_argument("bad rational literal: " + std::string(text));

  Rat value;
  if (mpq_set_str(value.get_mpq_t(), std::string(body).c_str(), 10) != 0)
    throw std::invalid_argument("bad rational literal: " + std::string(text));
  if (value.get_den() == 0)
    throw std::invalid_argument("zero denominator: " + std::string(text));
  value.canonicalize();
  return value;
}

std::pair<Rat, Rat> four_sequence_identity(std::span<const Rat> a,
                                           std::span<const Rat> b,
                                           std::span<const Rat> c,
                                           std::span<const Rat> d) {
  const size_t n = a.size();
  if (b.size() != n || c.size() != n || d.size() != n)
    throw std::invalid_argument("four_sequence_identity: length mismatch");

  Rat ac = 0, bd = 0, ad = 0, bc = 0;
  for (size_t i = 0; i < n; ++i) {
    ac += a[i] * c[i];
    bd += b[i] * d[i];
    ad += a[i] * d[i];
    bc += b[i] * c[i];
  }
  Rat lhs = ac * bd - ad * bc;

  Rat rhs = 0;
  for (size_t i = 0; i < n; ++i)
    for (size_t j = i + 1; j < n; ++j)
      rhs += (a[i] * b[j] - a[j] * b[i]) * (c[i] * d[j] - c[j] * d[i]);

  return {lhs, rhs};
}

}  // namespace polypos
