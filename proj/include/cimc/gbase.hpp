#ifndef CIMC_GBASE_HPP
#define CIMC_GBASE_HPP

#include <stdexcept>
#include <vector>

#include "cimc/polynomial.hpp"

namespace cimc {

/// Raised when a completion exceeds the configured S-pair budget. Mora's
/// algorithm terminates in theory; the limit catches implementation bugs.
class PairLimitError : public std::runtime_error {
 public:
  explicit PairLimitError(size_t limit)
      : std::runtime_error("S-pair limit of " + std::to_string(limit) +
                           " exceeded (set CIMC_PAIR_LIMIT to override)") {}
};

/// S-pair budget for completions; CIMC_PAIR_LIMIT overrides the default.
size_t pair_limit();

/// Completion of generators under a local order: standard basis in the sense
/// that every S-polynomial has Mora weak normal form zero.
struct StandardBasis {
  MonomialOrder order;
  std::vector<Polynomial> elements;
  std::vector<Polynomial> source;
};

/// Buchberger-complete basis under a global order.
struct GroebnerBasis {
  MonomialOrder order;
  std::vector<Polynomial> elements;
};

/// S-polynomial cancelling the leading terms via the lcm of the leading
/// monomials. spoly(f,f) = 0.
Polynomial spoly(const Polynomial& f, const Polynomial& g, const MonomialOrder& o);

/// Mora weak normal form with the minimal-ecart reducer strategy; under a
/// global order every ecart vanishes and this is ordinary division. The
/// result is zero or has leading monomial outside the leading ideal of the
/// (ecart-augmented) reducer set.
Polynomial mora_nf(Polynomial f, const std::vector<Polynomial>& reducers,
                   const MonomialOrder& o);

/// Requires a local order and nonzero generators.
StandardBasis standard_basis(const std::vector<Polynomial>& gens,
                             const MonomialOrder& o);

/// Requires a global order and homogeneous generators.
GroebnerBasis buchberger(const std::vector<Polynomial>& gens, const MonomialOrder& o);

/// Least homogeneous summands of a standard basis: a generating set of the
/// tangent-cone ideal I(n)_*. Sign-normalized under the matching global
/// order and deduplicated.
std::vector<Polynomial> tangent_ideal(const StandardBasis& sb);

/// Inter-reduced subset of minimal cardinality generating the same ideal;
/// requires homogeneous input and a global order. The size is the minimal
/// number of generators (graded Nakayama).
std::vector<Polynomial> minimalize_homogeneous(const std::vector<Polynomial>& gens,
                                               const MonomialOrder& o);

/// Minimal monomial generators of the leading ideal of a basis.
std::vector<Monomial> lead_ideal_min_gens(const std::vector<Polynomial>& basis,
                                          const MonomialOrder& o);

/// Ideal membership relative to a completed basis.
bool reduces_to_zero(const Polynomial& f, const std::vector<Polynomial>& basis,
                     const MonomialOrder& o);

/// Two homogeneous generating sets span the same ideal (mutual membership
/// against each other's completions).
bool same_homogeneous_ideal(const std::vector<Polynomial>& a,
                            const std::vector<Polynomial>& b, const MonomialOrder& o);

}  // namespace cimc

#endif
