#include "cimc/hilbert.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace cimc {

MonomialIdeal MonomialIdeal::make(std::vector<Monomial> gens) {
  for (const auto& g : gens)
    if (g.is_one()) return MonomialIdeal{{Monomial{}}};
  std::sort(gens.begin(), gens.end());
  gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
  std::vector<Monomial> minimal;
  for (size_t i = 0; i < gens.size(); ++i) {
    bool redundant = false;
    for (size_t j = 0; j < gens.size() && !redundant; ++j)
      if (j != i && gens[j].divides(gens[i])) redundant = true;
    if (!redundant) minimal.push_back(gens[i]);
  }
  return MonomialIdeal{std::move(minimal)};
}

bool MonomialIdeal::contains(const Monomial& m) const {
  return std::any_of(gens.begin(), gens.end(),
                     [&](const Monomial& g) { return g.divides(m); });
}

void HilbertNumerator::trim() {
  while (!coeffs.empty() && coeffs.back() == 0) coeffs.pop_back();
}

HilbertNumerator& HilbertNumerator::operator-=(const HilbertNumerator& q) {
  if (coeffs.size() < q.coeffs.size()) coeffs.resize(q.coeffs.size(), 0);
  for (size_t k = 0; k < q.coeffs.size(); ++k) coeffs[k] -= q.coeffs[k];
  trim();
  return *this;
}

HilbertNumerator operator*(const HilbertNumerator& p, const HilbertNumerator& q) {
  if (p.coeffs.empty() || q.coeffs.empty()) return HilbertNumerator::zero();
  HilbertNumerator r;
  r.coeffs.assign(p.coeffs.size() + q.coeffs.size() - 1, 0);
  for (size_t i = 0; i < p.coeffs.size(); ++i)
    for (size_t j = 0; j < q.coeffs.size(); ++j)
      r.coeffs[i + j] += p.coeffs[i] * q.coeffs[j];
  r.trim();
  return r;
}

HilbertNumerator HilbertNumerator::shifted(int k) const {
  if (coeffs.empty()) return zero();
  HilbertNumerator r;
  r.coeffs.assign(coeffs.size() + static_cast<size_t>(k), 0);
  for (size_t i = 0; i < coeffs.size(); ++i) r.coeffs[i + static_cast<size_t>(k)] = coeffs[i];
  return r;
}

HilbertNumerator one_minus_t_pow(int e) {
  if (e < 1) throw std::invalid_argument("exponent must be >= 1");
  HilbertNumerator p;
  p.coeffs.assign(static_cast<size_t>(e) + 1, 0);
  p.coeffs[0] = 1;
  p.coeffs[static_cast<size_t>(e)] = -1;
  return p;
}

MonomialIdeal colon_by_monomial(const MonomialIdeal& ideal, const Monomial& q) {
  std::vector<Monomial> gens;
  gens.reserve(ideal.gens.size());
  for (const auto& g : ideal.gens) gens.push_back(g / gcd(g, q));
  return MonomialIdeal::make(std::move(gens));
}

namespace {

bool is_pure_power(const Monomial& m) {
  int nonzero = 0;
  for (int e : m.e)
    if (e > 0) ++nonzero;
  return nonzero == 1;
}

using Memo = std::map<std::vector<Monomial>, HilbertNumerator>;

HilbertNumerator numerator_rec(const MonomialIdeal& ideal, Memo& memo) {
  if (ideal.is_zero()) return HilbertNumerator::one();
  if (ideal.is_unit()) return HilbertNumerator::zero();
  if (auto it = memo.find(ideal.gens); it != memo.end()) return it->second;

  HilbertNumerator result;
  if (std::all_of(ideal.gens.begin(), ideal.gens.end(), is_pure_power)) {
    // Minimality forces distinct variables, so the ideal is a complete
    // intersection of pure powers.
    result = HilbertNumerator::one();
    for (const auto& g : ideal.gens) result = result * one_minus_t_pow(g.degree());
  } else {
    // Split off the last generator in canonical order.
    const Monomial q = ideal.gens.back();
    std::vector<Monomial> rest(ideal.gens.begin(), ideal.gens.end() - 1);
    const MonomialIdeal j = MonomialIdeal::make(rest);
    const MonomialIdeal colon = colon_by_monomial(j, q);
    result = numerator_rec(j, memo) -
             numerator_rec(colon, memo).shifted(q.degree());
  }
  memo.emplace(ideal.gens, result);
  return result;
}

// Single exact division by (1-t); nullopt when the remainder is nonzero.
std::optional<HilbertNumerator> divide_one_minus_t(const HilbertNumerator& p) {
  if (p.coeffs.empty()) return HilbertNumerator::zero();
  // p = (1-t) q  <=>  q_k = p_k + q_{k-1}, with vanishing carry at the top.
  HilbertNumerator q;
  q.coeffs.assign(p.coeffs.size(), 0);
  long long carry = 0;
  for (size_t k = 0; k < p.coeffs.size(); ++k) {
    carry += p.coeffs[k];
    q.coeffs[k] = carry;
  }
  if (carry != 0) return std::nullopt;
  q.coeffs.pop_back();
  q.trim();
  return q;
}

}  // namespace

HilbertNumerator hilbert_numerator(const MonomialIdeal& ideal) {
  Memo memo;
  return numerator_rec(ideal, memo);
}

HilbertNumerator reduced_numerator(const HilbertNumerator& p) {
  HilbertNumerator r = p;
  for (int i = 0; i < 3; ++i) {
    auto q = divide_one_minus_t(r);
    if (!q) throw std::invalid_argument("quotient not 1-dimensional");
    r = *q;
  }
  return r;
}

std::vector<long long> hf_values(const HilbertNumerator& p, int k_max) {
  const HilbertNumerator r = reduced_numerator(p);
  std::vector<long long> values(static_cast<size_t>(k_max) + 1, 0);
  long long acc = 0;
  for (int k = 0; k <= k_max; ++k) {
    acc += r.coeff(k);
    values[static_cast<size_t>(k)] = acc;
  }
  return values;
}

bool is_nondecreasing(const std::vector<long long>& values) {
  for (size_t k = 1; k < values.size(); ++k)
    if (values[k] < values[k - 1]) return false;
  return true;
}

long long multiplicity(const HilbertNumerator& p) {
  const HilbertNumerator r = reduced_numerator(p);
  long long sum = 0;
  for (long long c : r.coeffs) sum += c;
  return sum;
}

std::vector<long long> series_coefficients(const HilbertNumerator& p, int k_max) {
  // 1/(1-t)^4 has coefficients C(k+3,3).
  std::vector<long long> out(static_cast<size_t>(k_max) + 1, 0);
  for (int k = 0; k <= k_max; ++k) {
    long long acc = 0;
    for (int j = 0; j <= std::min(k, p.degree()); ++j) {
      const long long d = k - j;
      acc += p.coeff(j) * ((d + 3) * (d + 2) * (d + 1) / 6);
    }
    out[static_cast<size_t>(k)] = acc;
  }
  return out;
}

}  // namespace cimc
