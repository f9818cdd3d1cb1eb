#ifndef CIMC_INTMATRIX_HPP
#define CIMC_INTMATRIX_HPP

#include <gmpxx.h>

#include <initializer_list>
#include <vector>

namespace cimc {

/// Dense integer matrix with exact (arbitrary-precision) entries, row-major.
/// The matrices in this project are tiny (at most a handful of rows and
/// columns), so every algorithm below favors exactness over speed.
struct IntMatrix {
  int rows = 0;
  int cols = 0;
  std::vector<mpz_class> entries;

  IntMatrix(int r, int c);
  IntMatrix(std::initializer_list<std::initializer_list<long>> data);

  mpz_class& at(int r, int c) { return entries[static_cast<size_t>(r) * cols + c]; }
  const mpz_class& at(int r, int c) const {
    return entries[static_cast<size_t>(r) * cols + c];
  }

  bool is_zero() const;
  IntMatrix transpose() const;
};

/// Invariant factors (d1,...,dm), m = rank, di | di+1, each positive.
/// Internally cross-checked against the gcd of all nonzero m x m minors.
/// Throws std::invalid_argument on the zero matrix.
std::vector<mpz_class> smith_invariant_factors(const IntMatrix& m);

/// gcd over all nonzero k x k minors; 0 if every k x k minor vanishes.
/// Throws std::invalid_argument if k == 0 or k exceeds the dimensions.
mpz_class minors_gcd(const IntMatrix& m, int k);

/// Largest k with a nonzero k x k minor (0 for the zero matrix).
int rank(const IntMatrix& m);

/// True iff every row has both a positive and a negative entry and no square
/// submatrix (equal row/column counts, the matrix itself included when
/// square) has that every-row-mixed property.
bool is_mixed_dominating(const IntMatrix& m);

}  // namespace cimc

#endif
