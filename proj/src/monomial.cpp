#include "cimc/monomial.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>

namespace cimc {

Monomial operator*(const Monomial& a, const Monomial& b) {
  Monomial r;
  for (int i = 0; i < kNumVars; ++i) r.e[i] = a.e[i] + b.e[i];
  return r;
}

Monomial operator/(const Monomial& a, const Monomial& b) {
  if (!b.divides(a)) throw std::invalid_argument("monomial quotient is not exact");
  Monomial r;
  for (int i = 0; i < kNumVars; ++i) r.e[i] = a.e[i] - b.e[i];
  return r;
}

Monomial lcm(const Monomial& a, const Monomial& b) {
  Monomial r;
  for (int i = 0; i < kNumVars; ++i) r.e[i] = std::max(a.e[i], b.e[i]);
  return r;
}

Monomial gcd(const Monomial& a, const Monomial& b) {
  Monomial r;
  for (int i = 0; i < kNumVars; ++i) r.e[i] = std::min(a.e[i], b.e[i]);
  return r;
}

Monomial var_pow(int i, int k) {
  if (i < 1 || i > kNumVars) throw std::invalid_argument("variable index out of range");
  if (k < 0) throw std::invalid_argument("negative exponent");
  Monomial m;
  m.e[i - 1] = k;
  return m;
}

void MonomialOrder::validate() const {
  std::array<bool, kNumVars> seen{};
  for (int p : priority) {
    if (p < 1 || p > kNumVars || seen[p - 1])
      throw std::invalid_argument("order priority must be a permutation of 1..4");
    seen[p - 1] = true;
  }
}

MonomialOrder local_order(std::array<int, kNumVars> priority) {
  MonomialOrder o{OrderKind::LocalNegDegRevLex, priority};
  o.validate();
  return o;
}

MonomialOrder global_order(std::array<int, kNumVars> priority) {
  MonomialOrder o{OrderKind::GlobalDegRevLex, priority};
  o.validate();
  return o;
}

Ordering compare(const MonomialOrder& o, const Monomial& a, const Monomial& b) {
  const int da = a.degree(), db = b.degree();
  if (da != db) {
    const bool a_greater =
        o.kind == OrderKind::LocalNegDegRevLex ? da < db : da > db;
    return a_greater ? Ordering::Greater : Ordering::Less;
  }
  // Reverse-lex tiebreak on the exponent difference taken in priority order.
  for (int k = kNumVars - 1; k >= 0; --k) {
    const int v = o.priority[k] - 1;
    const int d = a.e[v] - b.e[v];
    if (d != 0) return d < 0 ? Ordering::Greater : Ordering::Less;
  }
  return Ordering::Equal;
}

std::string render(const Monomial& m) {
  if (m.is_one()) return "1";
  std::string out;
  for (int i = 0; i < kNumVars; ++i) {
    if (m.e[i] == 0) continue;
    if (!out.empty()) out += '*';
    out += 'x';
    out += static_cast<char>('1' + i);
    if (m.e[i] > 1) out += '^' + std::to_string(m.e[i]);
  }
  return out;
}

Monomial parse_monomial(const std::string& text) {
  size_t pos = 0;
  auto skip_ws = [&] {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  };
  skip_ws();
  Monomial m;
  if (pos < text.size() && text[pos] == '1' &&
      (pos + 1 == text.size() || text.find_first_not_of(" \t", pos + 1) == std::string::npos)) {
    return m;
  }
  bool any = false;
  while (pos < text.size()) {
    skip_ws();
    if (pos >= text.size()) break;
    if (text[pos] == '*') {
      ++pos;
      skip_ws();
    }
    if (pos >= text.size() || text[pos] != 'x')
      throw std::invalid_argument("expected variable in monomial: " + text);
    ++pos;
    if (pos >= text.size() || text[pos] < '1' || text[pos] > '4')
      throw std::invalid_argument("variable index must be 1..4: " + text);
    const int var = text[pos] - '1';
    ++pos;
    int exp = 1;
    if (pos < text.size() && text[pos] == '^') {
      ++pos;
      if (pos >= text.size() || !std::isdigit(static_cast<unsigned char>(text[pos])))
        throw std::invalid_argument("expected exponent digits: " + text);
      exp = 0;
      while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
        exp = exp * 10 + (text[pos] - '0');
        ++pos;
      }
    }
    m.e[var] += exp;
    any = true;
    skip_ws();
  }
  if (!any) throw std::invalid_argument("empty monomial: " + text);
  return m;
}

}  // namespace cimc
