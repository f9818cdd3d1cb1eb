#ifndef CIMC_HILBERT_HPP
#define CIMC_HILBERT_HPP

#include <vector>

#include "cimc/monomial.hpp"

namespace cimc {

/// Monomial ideal in K[x1..x4], stored by its unique minimal generating set
/// (pairwise non-dividing, canonically sorted). The unit ideal is {1}, the
/// zero ideal has no generators.
struct MonomialIdeal {
  std::vector<Monomial> gens;

  static MonomialIdeal make(std::vector<Monomial> gens);

  bool is_zero() const { return gens.empty(); }
  bool is_unit() const { return gens.size() == 1 && gens[0].is_one(); }
  bool contains(const Monomial& m) const;

  bool operator==(const MonomialIdeal&) const = default;
};

/// Numerator p(t) of the Hilbert series of K[x1..x4]/I over the fixed
/// denominator (1-t)^4. coeffs[k] is the coefficient of t^k; trailing zeros
/// are trimmed, the zero polynomial is the empty list.
struct HilbertNumerator {
  std::vector<long long> coeffs;

  static HilbertNumerator one() { return {{1}}; }
  static HilbertNumerator zero() { return {}; }

  int degree() const { return static_cast<int>(coeffs.size()) - 1; }
  long long coeff(int k) const {
    return k >= 0 && k < static_cast<int>(coeffs.size()) ? coeffs[k] : 0;
  }
  void trim();

  HilbertNumerator& operator-=(const HilbertNumerator& q);
  friend HilbertNumerator operator-(HilbertNumerator p, const HilbertNumerator& q) {
    return p -= q;
  }
  friend HilbertNumerator operator*(const HilbertNumerator& p, const HilbertNumerator& q);
  /// p * t^k.
  HilbertNumerator shifted(int k) const;

  bool operator==(const HilbertNumerator&) const = default;
};

/// 1 - t^e.
HilbertNumerator one_minus_t_pow(int e);

/// The ideal (I : q) = { m : m*q in I }.
MonomialIdeal colon_by_monomial(const MonomialIdeal& ideal, const Monomial& q);

/// Hilbert numerator via the generator-splitting recursion
/// p(I) = p(J) - t^{deg q} p(J : q), memoized; pure-power ideals multiply
/// out directly.
HilbertNumerator hilbert_numerator(const MonomialIdeal& ideal);

/// p / (1-t)^3 when the division is exact; throws std::invalid_argument
/// ("quotient not 1-dimensional") otherwise.
HilbertNumerator reduced_numerator(const HilbertNumerator& p);

/// Hilbert function values 0..k_max of a 1-dimensional quotient: the
/// coefficients of (p/(1-t)^3) / (1-t), i.e. partial sums of the reduced
/// numerator.
std::vector<long long> hf_values(const HilbertNumerator& p, int k_max);

bool is_nondecreasing(const std::vector<long long>& values);

/// Reduced numerator evaluated at t = 1.
long long multiplicity(const HilbertNumerator& p);

/// Coefficients 0..k_max of the power series p(t)/(1-t)^4; these are the
/// Hilbert function values of the 4-variable quotient itself.
std::vector<long long> series_coefficients(const HilbertNumerator& p, int k_max);

}  // namespace cimc

#endif
