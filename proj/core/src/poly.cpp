#include "polypos/poly.hpp"

#include <cctype>
#include <stdexcept>

namespace polypos {

Poly::Poly(Rat constant) {
  if (constant != 0) coeffs_.push_back(std::move(constant));
}

Poly::Poly(std::vector<Rat> coeffs) : coeffs_(std::move(coeffs)) { normalize(); }

Poly Poly::monomial(int power, const Rat& coeff) {
  if (power < 0) throw std::invalid_argument("monomial: negative power");
  if (coeff == 0) return Poly();
  std::vector<Rat> c(power + 1, Rat(0));
  c.back() = coeff;
  return Poly(std::move(c));
}

Rat Poly::coeff(int k) const {
  if (k < 0 || k >= static_cast<int>(coeffs_.size())) return Rat(0);
  return coeffs_[k];
}

Rat Poly::leading_coeff() const {
  if (is_zero()) return Rat(0);
  return coeffs_.back();
}

void Poly::normalize() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Poly Poly::operator-() const {
  Poly r = *this;
  for (Rat& c : r.coeffs_) c = -c;
  return r;
}

Poly& Poly::operator+=(const Poly& rhs) {
  if (coeffs_.size() < rhs.coeffs_.size()) coeffs_.resize(rhs.coeffs_.size(), Rat(0));
  for (size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] += rhs.coeffs_[i];
  normalize();
  return *this;
}

Poly& Poly::operator-=(const Poly& rhs) {
  if (coeffs_.size() < rhs.coeffs_.size()) coeffs_.resize(rhs.coeffs_.size(), Rat(0));
  for (size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] -= rhs.coeffs_[i];
  normalize();
  return *this;
}

Poly operator+(const Poly& a, const Poly& b) {
  Poly r = a;
  r += b;
  return r;
}

Poly operator-(const Poly& a, const Poly& b) {
  Poly r = a;
  r -= b;
  return r;
}

Poly operator*(const Poly& a, const Poly& b) {
  if (a.is_zero() || b.is_zero()) return Poly();
  std::vector<Rat> c(a.coeffs_.size() + b.coeffs_.size() - 1, Rat(0));
  for (size_t i = 0; i < a.coeffs_.size(); ++i)
    for (size_t j = 0; j < b.coeffs_.size(); ++j) c[i + j] += a.coeffs_[i] * b.coeffs_[j];
  return Poly(std::move(c));
}

Poly operator*(const Rat& s, const Poly& p) {
  if (s == 0) return Poly();
  Poly r = p;
  for (Rat& c : r.coeffs_) c *= s;
  return r;
}

Poly Poly::shifted(int k) const {
  if (k < 0) throw std::invalid_argument("shifted: negative power");
  if (is_zero() || k == 0) return *this;
  std::vector<Rat> c(coeffs_.size() + k, Rat(0));
  for (size_t i = 0; i < coeffs_.size(); ++i) c[i + k] = coeffs_[i];
  return Poly(std::move(c));
}

Poly derivative(const Poly& f) {
  if (f.degree() < 1) return Poly();
  std::vector<Rat> c(f.degree());
  for (int k = 1; k <= f.degree(); ++k) c[k - 1] = Rat(k) * f.coeff(k);
  return Poly(std::move(c));
}

Rat eval(const Poly& f, const Rat& x) {
  Rat acc(0);
  for (int k = f.degree(); k >= 0; --k) acc = acc * x + f.coeff(k);
  return acc;
}

namespace detail {

std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b) {
  if (b.is_zero()) throw std::domain_error("polynomial division by zero");
  if (a.degree() < b.degree()) return {Poly(), a};
  std::vector<Rat> rem(a.coeffs().begin(), a.coeffs().end());
  std::vector<Rat> quo(a.degree() - b.degree() + 1, Rat(0));
  const Rat lead = b.leading_coeff();
  for (int k = a.degree() - b.degree(); k >= 0; --k) {
    Rat factor = rem[k + b.degree()] / lead;
    quo[k] = factor;
    if (factor == 0) continue;
    for (int j = 0; j <= b.degree(); ++j) rem[k + j] -= factor * b.coeff(j);
  }
  return {Poly(std::move(quo)), Poly(std::move(rem))};
}

}  // namespace detail

Poly poly_gcd(const Poly& a, const Poly& b) {
  if (a.is_zero() && b.is_zero()) throw std::domain_error("gcd(0, 0) undefined");
  Poly f = a, g = b;
  while (!g.is_zero()) {
    Poly r = detail::divmod(f, g).second;
    f = g;
    g = r;
  }
  return (Rat(1) / f.leading_coeff()) * f;
}

Poly div_exact(const Poly& a, const Poly& b) {
  auto [q, r] = detail::divmod(a, b);
  if (!r.is_zero()) throw std::domain_error("div_exact: division is not exact");
  return q;
}

Poly squarefree_part(const Poly& f) {
  if (f.is_zero()) throw std::domain_error("squarefree_part of zero polynomial");
  if (f.degree() == 0) return Poly(Rat(1));
  Poly g = poly_gcd(f, derivative(f));
  Poly part = div_exact(f, g);
  return (Rat(1) / part.leading_coeff()) * part;
}

std::vector<Poly> squarefree_decomposition(const Poly& f) {
  if (f.is_zero()) throw std::domain_error("squarefree decomposition of zero polynomial");
  std::vector<Poly> factors;
  if (f.degree() == 0) return factors;
  Poly monic = (Rat(1) / f.leading_coeff()) * f;
  Poly u = poly_gcd(monic, derivative(monic));
  Poly v = div_exact(monic, u);
  Poly w = div_exact(derivative(monic), u);
  while (true) {
    Poly z = w - derivative(v);
    if (z.is_zero()) {
      factors.push_back(v);
      break;
    }
    Poly ai = poly_gcd(v, z);
    factors.push_back(ai);
    v = div_exact(v, ai);
    w = div_exact(z, ai);
  }
  return factors;
}

std::string poly_to_string(const Poly& f, char var) {
  if (f.is_zero()) return "0";
  std::string out = rat_to_string(f.coeff(0));
  for (int k = 1; k <= f.degree(); ++k) {
    const Rat& c = f.coeff(k);
    out += (sign(c) < 0) ? " - " : " + ";
    out += rat_to_string(abs(c));
    out += "*";
    out += var;
    if (k > 1) out += "^" + std::to_string(k);
  }
  return out;
}

namespace {

struct Parser {
  std::string_view s;
  size_t pos = 0;
  char var = 0;

  void skip_ws() {
    while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
  }
  bool done() {
    skip_ws();
    return pos >= s.size();
  }
  char peek() {
    skip_ws();
    return pos < s.size() ? s[pos] : '\0';
  }
  [[noreturn]] void fail(const std::string& why) {
    throw std::invalid_argument("bad polynomial literal (" + why + "): " + std::string(s));
  }

  mpz_class parse_uint() {
    skip_ws();
    size_t start = pos;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
    if (pos == start) fail("expected digits");
    return mpz_class(std::string(s.substr(start, pos - start)), 10);
  }

  Rat parse_rat() {
    mpz_class num = parse_uint();
    if (peek() == '/') {
      ++pos;
      mpz_class den = parse_uint();
      if (den == 0) fail("zero denominator");
      Rat r(num, den);
      r.canonicalize();
      return r;
    }
    return Rat(num);
  }

  bool at_var() {
    char c = peek();
    return std::isalpha(static_cast<unsigned char>(c));
  }

  int parse_var_power() {
    char c = peek();
    if (var == 0) var = c;
    if (c != var) fail("inconsistent variable names");
    ++pos;
    if (peek() == '^') {
      ++pos;
      mpz_class p = parse_uint();
      if (!p.fits_sint_p()) fail("power too large");
      return static_cast<int>(p.get_si());
    }
    return 1;
  }

  // term := rat [ '*'? var [ '^' uint ] ] | var [ '^' uint ]
  void parse_term(int term_sign, std::vector<Rat>& acc) {
    Rat coeff(1);
    bool saw_coeff = false;
    if (std::isdigit(static_cast<unsigned char>(peek()))) {
      coeff = parse_rat();
      saw_coeff = true;
    }
    int power = 0;
    if (peek() == '*') {
      ++pos;
      if (!at_var()) fail("expected variable after '*'");
      power = parse_var_power();
    } else if (at_var()) {
      power = parse_var_power();
    } else if (!saw_coeff) {
      fail("expected term");
    }
    if (power >= static_cast<int>(acc.size())) acc.resize(power + 1, Rat(0));
    acc[power] += Rat(term_sign) * coeff;
  }
};

}  // namespace

Poly poly_from_string(std::string_view text) {
  Parser p{text};
  if (p.done()) p.fail("empty");
  if (text.find('.') != std::string_view::npos) p.fail("decimal literals not supported");
  std::vector<Rat> acc;
  int term_sign = 1;
  if (p.peek() == '+' || p.peek() == '-') {
    term_sign = (p.peek() == '-') ? -1 : 1;
    ++p.pos;
  }
  p.parse_term(term_sign, acc);
  while (!p.done()) {
    char op = p.peek();
    if (op != '+' && op != '-') p.fail("expected '+' or '-'");
    ++p.pos;
    p.parse_term(op == '-' ? -1 : 1, acc);
  }
  return Poly(std::move(acc));
}

}  // namespace polypos
