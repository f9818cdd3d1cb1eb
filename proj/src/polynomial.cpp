#include "cimc/polynomial.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>

namespace cimc {

int Polynomial::max_degree() const {
  if (terms.empty()) throw std::invalid_argument("zero polynomial has no degree");
  int d = 0;
  for (const auto& [m, c] : terms) d = std::max(d, m.degree());
  return d;
}

int Polynomial::min_degree() const {
  if (terms.empty()) throw std::invalid_argument("zero polynomial has no degree");
  int d = terms.begin()->first.degree();
  for (const auto& [m, c] : terms) d = std::min(d, m.degree());
  return d;
}

void Polynomial::add_term(const Monomial& m, const mpz_class& c) {
  if (c == 0) return;
  auto it = terms.find(m);
  if (it == terms.end()) {
    terms.emplace(m, c);
  } else {
    it->second += c;
    if (it->second == 0) terms.erase(it);
  }
}

Polynomial& Polynomial::operator+=(const Polynomial& g) {
  for (const auto& [m, c] : g.terms) add_term(m, c);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& g) {
  for (const auto& [m, c] : g.terms) add_term(m, -c);
  return *this;
}

Polynomial Polynomial::operator-() const {
  Polynomial r;
  for (const auto& [m, c] : terms) r.terms.emplace(m, -c);
  return r;
}

Polynomial to_polynomial(const Binomial& b) {
  if (b.plus == b.minus) throw std::invalid_argument("degenerate binomial x^u - x^u");
  Polynomial f;
  f.terms.emplace(b.plus, 1);
  f.terms.emplace(b.minus, -1);
  return f;
}

Polynomial monomial_poly(const Monomial& m, const mpz_class& c) {
  Polynomial f;
  f.add_term(m, c);
  return f;
}

Polynomial mul_term(const Polynomial& f, const mpz_class& c, const Monomial& m) {
  Polynomial r;
  if (c == 0) return r;
  for (const auto& [mm, cc] : f.terms) r.terms.emplace(mm * m, cc * c);
  return r;
}

Monomial leading_monomial(const MonomialOrder& o, const Polynomial& f) {
  if (f.is_zero()) throw std::invalid_argument("zero polynomial has no leading monomial");
  auto it = f.terms.begin();
  Monomial best = it->first;
  for (++it; it != f.terms.end(); ++it)
    if (order_greater(o, it->first, best)) best = it->first;
  return best;
}

mpz_class leading_coefficient(const MonomialOrder& o, const Polynomial& f) {
  return f.terms.at(leading_monomial(o, f));
}

Polynomial normalize_sign(const MonomialOrder& o, Polynomial f) {
  if (f.is_zero()) return f;
  const mpz_class lc = leading_coefficient(o, f);
  if (lc == 1) return f;
  if (lc == -1) return -f;
  throw std::logic_error("non-unit leading coefficient: " + render(f));
}

Polynomial least_homogeneous_summand(const Polynomial& f) {
  const int d = f.min_degree();
  Polynomial r;
  for (const auto& [m, c] : f.terms)
    if (m.degree() == d) r.terms.emplace(m, c);
  return r;
}

bool is_homogeneous(const Polynomial& f) {
  if (f.is_zero()) return true;
  return f.min_degree() == f.max_degree();
}

int ecart(const MonomialOrder& o, const Polynomial& f) {
  if (f.is_zero()) throw std::invalid_argument("zero polynomial has no ecart");
  return f.max_degree() - leading_monomial(o, f).degree();
}

std::string render(const Polynomial& f) {
  if (f.is_zero()) return "0";
  // Deterministic output: degree descending, canonical tiebreak.
  std::vector<std::pair<Monomial, mpz_class>> ts(f.terms.begin(), f.terms.end());
  std::sort(ts.begin(), ts.end(), [](const auto& a, const auto& b) {
    if (a.first.degree() != b.first.degree()) return a.first.degree() > b.first.degree();
    return a.first < b.first;
  });
  std::string out;
  for (const auto& [m, c] : ts) {
    mpz_class ac = abs(c);
    if (out.empty()) {
      if (c < 0) out += '-';
    } else {
      out += c < 0 ? '-' : '+';
    }
    if (ac != 1 || m.is_one()) {
      out += ac.get_str();
      if (!m.is_one()) out += '*';
    }
    if (!m.is_one()) out += render(m);
  }
  return out;
}

namespace {

struct Cursor {
  const std::string& s;
  size_t pos = 0;

  void skip_ws() {
    while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
  }
  bool done() {
    skip_ws();
    return pos >= s.size();
  }
  char peek() {
    skip_ws();
    return s[pos];
  }
};

mpz_class parse_integer(Cursor& c) {
  std::string digits;
  while (c.pos < c.s.size() && std::isdigit(static_cast<unsigned char>(c.s[c.pos]))) {
    digits += c.s[c.pos];
    ++c.pos;
  }
  return mpz_class(digits);
}

// term := [integer] ['*'] (var ['^' int])*
void parse_term(Cursor& c, int sign, Polynomial& out) {
  c.skip_ws();
  mpz_class coeff = 1;
  bool have_coeff = false;
  if (c.pos < c.s.size() && std::isdigit(static_cast<unsigned char>(c.s[c.pos]))) {
    coeff = parse_integer(c);
    have_coeff = true;
  }
  Monomial m;
  bool have_var = false;
  while (true) {
    c.skip_ws();
    if (c.pos < c.s.size() && c.s[c.pos] == '*') {
      ++c.pos;
      c.skip_ws();
    }
    if (c.pos >= c.s.size() || c.s[c.pos] != 'x') break;
    ++c.pos;
    if (c.pos >= c.s.size() || c.s[c.pos] < '1' || c.s[c.pos] > '4')
      throw std::invalid_argument("variable index must be 1..4: " + c.s);
    const int var = c.s[c.pos] - '1';
    ++c.pos;
    int exp = 1;
    if (c.pos < c.s.size() && c.s[c.pos] == '^') {
      ++c.pos;
      if (c.pos >= c.s.size() || !std::isdigit(static_cast<unsigned char>(c.s[c.pos])))
        throw std::invalid_argument("expected exponent digits: " + c.s);
      exp = static_cast<int>(parse_integer(c).get_si());
    }
    m.e[var] += exp;
    have_var = true;
  }
  if (!have_coeff && !have_var)
    throw std::invalid_argument("expected term: " + c.s);
  out.add_term(m, sign * coeff);
}

}  // namespace

Polynomial parse_polynomial(const std::string& text) {
  Cursor c{text};
  Polynomial out;
  if (c.done()) throw std::invalid_argument("empty polynomial text");
  int sign = 1;
  if (c.peek() == '-') {
    sign = -1;
    ++c.pos;
  } else if (c.peek() == '+') {
    ++c.pos;
  }
  parse_term(c, sign, out);
  while (!c.done()) {
    const char op = c.peek();
    if (op != '+' && op != '-')
      throw std::invalid_argument("expected '+' or '-' in polynomial: " + text);
    ++c.pos;
    parse_term(c, op == '-' ? -1 : 1, out);
  }
  return out;
}

}  // namespace cimc
