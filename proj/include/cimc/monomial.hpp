#ifndef CIMC_MONOMIAL_HPP
#define CIMC_MONOMIAL_HPP

#include <array>
#include <compare>
#include <cstdint>
#include <string>

namespace cimc {

inline constexpr int kNumVars = 4;

/// Exponent vector of a monomial in the four ambient variables x1..x4.
struct Monomial {
  std::array<int, kNumVars> e{0, 0, 0, 0};

  int degree() const { return e[0] + e[1] + e[2] + e[3]; }
  bool is_one() const { return e[0] == 0 && e[1] == 0 && e[2] == 0 && e[3] == 0; }
  bool divides(const Monomial& m) const {
    for (int i = 0; i < kNumVars; ++i)
      if (e[i] > m.e[i]) return false;
    return true;
  }

  // Canonical (order-independent) comparison, used for container keys only.
  auto operator<=>(const Monomial&) const = default;
};

Monomial operator*(const Monomial& a, const Monomial& b);
/// Exact quotient; throws std::invalid_argument if b does not divide a.
Monomial operator/(const Monomial& a, const Monomial& b);
Monomial lcm(const Monomial& a, const Monomial& b);
Monomial gcd(const Monomial& a, const Monomial& b);

/// x_i^k with i in 1..4.
Monomial var_pow(int i, int k);

enum class OrderKind {
  LocalNegDegRevLex,  // lower total degree is greater; reverse-lex tiebreak
  GlobalDegRevLex,    // higher total degree is greater; same tiebreak
};

/// A monomial comparison rule: local or global degree part plus a variable
/// priority listing x-indices from greatest to least, e.g. {3,4,2,1} means
/// x3 > x4 > x2 > x1.
struct MonomialOrder {
  OrderKind kind = OrderKind::GlobalDegRevLex;
  std::array<int, kNumVars> priority{1, 2, 3, 4};

  bool is_local() const { return kind == OrderKind::LocalNegDegRevLex; }
  /// Throws std::invalid_argument unless priority is a permutation of 1..4.
  void validate() const;
};

MonomialOrder local_order(std::array<int, kNumVars> priority);
MonomialOrder global_order(std::array<int, kNumVars> priority);

enum class Ordering { Less, Equal, Greater };

/// Total order on monomials. Ties in total degree are broken reverse-lex:
/// writing the exponent difference in priority order, the last nonzero entry
/// negative means the first argument is greater.
Ordering compare(const MonomialOrder& o, const Monomial& a, const Monomial& b);

inline bool order_less(const MonomialOrder& o, const Monomial& a, const Monomial& b) {
  return compare(o, a, b) == Ordering::Less;
}
inline bool order_greater(const MonomialOrder& o, const Monomial& a, const Monomial& b) {
  return compare(o, a, b) == Ordering::Greater;
}

std::string render(const Monomial& m);
/// Parses "x1^5", "x1*x2", "x3x4^2", "1". Throws std::invalid_argument on
/// malformed input.
Monomial parse_monomial(const std::string& text);

}  // namespace cimc

#endif
