#ifndef CIMC_NUMSG_HPP
#define CIMC_NUMSG_HPP

#include <array>
#include <vector>

#include "cimc/polynomial.hpp"

namespace cimc {

/// A sequence n = (n1,n2,n3,n4) of positive integers defining the monomial
/// curve x_i = t^{n_i} and the semigroup it generates.
struct MonomialCurve {
  std::array<long long, 4> n{};

  /// Requires all entries positive and gcd(n1,...,n4) = 1.
  static MonomialCurve checked(std::array<long long, 4> n);
  /// Positive entries only; family scans filter on the gcd afterwards.
  static MonomialCurve unchecked(std::array<long long, 4> n);

  long long min_entry() const;
  /// 1-based index of the minimal entry (smallest index wins ties).
  int min_index() const;
  bool min_is_tied() const;

  bool operator==(const MonomialCurve&) const = default;
};

long long gcd4(const std::array<long long, 4>& n);

/// Parameters for generators x1^a1 - x2^a2, x3^a3 - x4^a4,
/// x1^u1 x2^u2 - x3^u3 x4^u4.
struct CaseAParams {
  std::array<int, 4> a{};
  std::array<int, 4> u{};

  /// Throws unless a_i >= 1, u_i >= 0, one of u1,u2 nonzero and one of
  /// u3,u4 nonzero.
  void validate() const;
  bool operator==(const CaseAParams&) const = default;
};

/// Parameters for generators x1^a1 - x2^a2, x3^a3 - x1^u1 x2^u2,
/// x4^a4 - x1^v1 x2^v2 x3^v3.
struct CaseBParams {
  std::array<int, 4> a{};
  std::array<int, 2> u{};
  std::array<int, 3> v{};

  void validate() const;
  bool operator==(const CaseBParams&) const = default;
};

/// True iff s is a non-negative integer combination of gens (reachability
/// DP after dividing out the common gcd).
bool is_member(long long s, const std::vector<long long>& gens);

/// Least a >= 1 with a*n_i in the semigroup generated by the other three
/// entries; i is 1-based.
long long critical_exponent(int i, const MonomialCurve& curve);

/// The curve defined by case-A generator data; the gcd may exceed 1 and is
/// filtered by the caller.
MonomialCurve kraft_case_a(const CaseAParams& p);
MonomialCurve kraft_case_b(const CaseBParams& p);

/// Equivalent parameters with u2 <= a2 and u3 <= a3. The underlying curve
/// and lattice are unchanged.
CaseAParams normalize_case_a(CaseAParams p);

std::vector<Binomial> case_a_generators(const CaseAParams& p);
std::vector<Binomial> case_b_generators(const CaseBParams& p);

/// Exponent difference of a binomial dotted with the curve entries; zero
/// exactly when the binomial lies in the toric ideal's lattice.
long long lattice_dot(const Binomial& b, const MonomialCurve& curve);

}  // namespace cimc

#endif
