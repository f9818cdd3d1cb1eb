#ifndef CIMC_POLYNOMIAL_HPP
#define CIMC_POLYNOMIAL_HPP

#include <gmpxx.h>

#include <map>
#include <string>
#include <vector>

#include "cimc/monomial.hpp"

namespace cimc {

/// Integer-coefficient polynomial in x1..x4. Terms are kept in a canonical
/// map (independent of any monomial order); zero coefficients are never
/// stored, the empty map is the zero polynomial.
struct Polynomial {
  std::map<Monomial, mpz_class> terms;

  bool is_zero() const { return terms.empty(); }
  size_t term_count() const { return terms.size(); }
  /// Maximal total degree among terms (deg f). Throws on zero.
  int max_degree() const;
  /// Minimal total degree among terms. Throws on zero.
  int min_degree() const;

  void add_term(const Monomial& m, const mpz_class& c);

  Polynomial& operator+=(const Polynomial& g);
  Polynomial& operator-=(const Polynomial& g);
  friend Polynomial operator+(Polynomial f, const Polynomial& g) { return f += g; }
  friend Polynomial operator-(Polynomial f, const Polynomial& g) { return f -= g; }
  Polynomial operator-() const;

  bool operator==(const Polynomial&) const = default;
};

/// x^plus - x^minus with plus != minus.
struct Binomial {
  Monomial plus;
  Monomial minus;

  bool operator==(const Binomial&) const = default;
};

Polynomial to_polynomial(const Binomial& b);
Polynomial monomial_poly(const Monomial& m, const mpz_class& c = 1);

/// f scaled by c * x^m.
Polynomial mul_term(const Polynomial& f, const mpz_class& c, const Monomial& m);

Monomial leading_monomial(const MonomialOrder& o, const Polynomial& f);
mpz_class leading_coefficient(const MonomialOrder& o, const Polynomial& f);

/// Flips the sign so the leading coefficient is +1. Throws std::logic_error
/// if the leading coefficient is not a unit; the toric pipeline never scales
/// coefficients and anything else signals a bug upstream.
Polynomial normalize_sign(const MonomialOrder& o, Polynomial f);

/// Sum of all terms of minimal total degree (f_* in the tangent-cone sense).
Polynomial least_homogeneous_summand(const Polynomial& f);

bool is_homogeneous(const Polynomial& f);

/// deg(f) - deg(LM(f)); the degree spread steering Mora reduction.
int ecart(const MonomialOrder& o, const Polynomial& f);

std::string render(const Polynomial& f);
/// Parses the x1^5-x2^3 notation (optional '*', optional integer
/// coefficients, "0" for the zero polynomial).
Polynomial parse_polynomial(const std::string& text);

}  // namespace cimc

#endif
