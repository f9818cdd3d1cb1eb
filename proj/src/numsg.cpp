#include "cimc/numsg.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace cimc {

namespace {

// DP tables above this are a logic error in the caller, not a real workload.
constexpr long long kMembershipTableLimit = 20'000'000;

}  // namespace

MonomialCurve MonomialCurve::checked(std::array<long long, 4> n) {
  for (long long v : n)
    if (v < 1) throw std::invalid_argument("curve entries must be positive");
  if (gcd4(n) != 1)
    throw std::invalid_argument("curve entries must be coprime");
  return MonomialCurve{n};
}

MonomialCurve MonomialCurve::unchecked(std::array<long long, 4> n) {
  for (long long v : n)
    if (v < 1) throw std::invalid_argument("curve entries must be positive");
  return MonomialCurve{n};
}

long long MonomialCurve::min_entry() const {
  return *std::min_element(n.begin(), n.end());
}

int MonomialCurve::min_index() const {
  return static_cast<int>(std::min_element(n.begin(), n.end()) - n.begin()) + 1;
}

bool MonomialCurve::min_is_tied() const {
  return std::count(n.begin(), n.end(), min_entry()) > 1;
}

long long gcd4(const std::array<long long, 4>& n) {
  long long g = 0;
  for (long long v : n) g = std::gcd(g, v);
  return g;
}

void CaseAParams::validate() const {
  for (int v : a)
    if (v < 1) throw std::invalid_argument("case A: a entries must be >= 1");
  for (int v : u)
    if (v < 0) throw std::invalid_argument("case A: u entries must be >= 0");
  if (u[0] == 0 && u[1] == 0)
    throw std::invalid_argument("case A: one of u1,u2 must be nonzero");
  if (u[2] == 0 && u[3] == 0)
    throw std::invalid_argument("case A: one of u3,u4 must be nonzero");
}

void CaseBParams::validate() const {
  for (int w : a)
    if (w < 1) throw std::invalid_argument("case B: a entries must be >= 1");
  for (int w : u)
    if (w < 0) throw std::invalid_argument("case B: u entries must be >= 0");
  for (int w : v)
    if (w < 0) throw std::invalid_argument("case B: v entries must be >= 0");
  if (u[0] == 0 && u[1] == 0)
    throw std::invalid_argument("case B: one of u1,u2 must be nonzero");
  if (v[0] == 0 && v[1] == 0 && v[2] == 0)
    throw std::invalid_argument("case B: one of v1,v2,v3 must be nonzero");
}

bool is_member(long long s, const std::vector<long long>& gens) {
  if (gens.empty()) throw std::invalid_argument("empty generator list");
  for (long long g : gens)
    if (g < 1) throw std::invalid_argument("generators must be positive");
  if (s == 0) return true;
  if (s < 0) return false;

  long long g = 0;
  for (long long v : gens) g = std::gcd(g, v);
  if (s % g != 0) return false;

  std::vector<long long> red;
  red.reserve(gens.size());
  for (long long v : gens) red.push_back(v / g);
  const long long target = s / g;
  const auto [mn, mx] = std::minmax_element(red.begin(), red.end());
  // Past the Schur bound every multiple of the gcd is representable, so the
  // reachability table never needs to grow beyond min*max.
  if (target >= *mn * *mx) return true;
  if (target > kMembershipTableLimit)
    throw std::runtime_error("membership table bound exceeded");

  std::vector<char> reach(static_cast<size_t>(target) + 1, 0);
  reach[0] = 1;
  for (long long v = 1; v <= target; ++v)
    for (long long gen : red)
      if (gen <= v && reach[static_cast<size_t>(v - gen)]) {
        reach[static_cast<size_t>(v)] = 1;
        break;
      }
  return reach[static_cast<size_t>(target)] != 0;
}

long long critical_exponent(int i, const MonomialCurve& curve) {
  if (i < 1 || i > 4) throw std::invalid_argument("index must be 1..4");
  std::vector<long long> others;
  for (int j = 0; j < 4; ++j)
    if (j != i - 1) others.push_back(curve.n[j]);
  const long long ni = curve.n[i - 1];
  for (long long a = 1;; ++a) {
    if (is_member(a * ni, others)) return a;
    if (a > 1'000'000) throw std::runtime_error("critical exponent search diverged");
  }
}

MonomialCurve kraft_case_a(const CaseAParams& p) {
  p.validate();
  const long long a1 = p.a[0], a2 = p.a[1], a3 = p.a[2], a4 = p.a[3];
  const long long u1 = p.u[0], u2 = p.u[1], u3 = p.u[2], u4 = p.u[3];
  const long long first = a3 * u4 + u3 * a4;   // shared factor of n1, n2
  const long long second = a1 * u2 + u1 * a2;  // shared factor of n3, n4
  return MonomialCurve::unchecked({a2 * first, a1 * first, a4 * second, a3 * second});
}

MonomialCurve kraft_case_b(const CaseBParams& p) {
  p.validate();
  const long long a1 = p.a[0], a2 = p.a[1], a3 = p.a[2], a4 = p.a[3];
  const long long u1 = p.u[0], u2 = p.u[1];
  const long long v1 = p.v[0], v2 = p.v[1], v3 = p.v[2];
  const long long mid = a1 * u2 + u1 * a2;
  return MonomialCurve::unchecked({a2 * a3 * a4, a1 * a3 * a4, a4 * mid,
                                   v3 * mid + a3 * (a1 * v2 + v1 * a2)});
}

CaseAParams normalize_case_a(CaseAParams p) {
  p.validate();
  if (p.u[1] > p.a[1]) {
    const int g = p.u[1] / p.a[1];
    const int h = p.u[1] % p.a[1];
    p.u[0] += g * p.a[0];
    p.u[1] = h;
  }
  if (p.u[2] > p.a[2]) {
    const int g = p.u[2] / p.a[2];
    const int h = p.u[2] % p.a[2];
    p.u[3] += g * p.a[3];
    p.u[2] = h;
  }
  p.validate();
  return p;
}

std::vector<Binomial> case_a_generators(const CaseAParams& p) {
  p.validate();
  return {
      Binomial{var_pow(1, p.a[0]), var_pow(2, p.a[1])},
      Binomial{var_pow(3, p.a[2]), var_pow(4, p.a[3])},
      Binomial{var_pow(1, p.u[0]) * var_pow(2, p.u[1]),
               var_pow(3, p.u[2]) * var_pow(4, p.u[3])},
  };
}

std::vector<Binomial> case_b_generators(const CaseBParams& p) {
  p.validate();
  return {
      Binomial{var_pow(1, p.a[0]), var_pow(2, p.a[1])},
      Binomial{var_pow(3, p.a[2]), var_pow(1, p.u[0]) * var_pow(2, p.u[1])},
      Binomial{var_pow(4, p.a[3]),
               var_pow(1, p.v[0]) * var_pow(2, p.v[1]) * var_pow(3, p.v[2])},
  };
}

long long lattice_dot(const Binomial& b, const MonomialCurve& curve) {
  long long acc = 0;
  for (int i = 0; i < 4; ++i)
    acc += static_cast<long long>(b.plus.e[i] - b.minus.e[i]) * curve.n[i];
  return acc;
}

}  // namespace cimc
