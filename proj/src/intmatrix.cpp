#include "cimc/intmatrix.hpp"

#include <algorithm>
#include <stdexcept>

namespace cimc {

IntMatrix::IntMatrix(int r, int c) : rows(r), cols(c) {
  if (r < 1 || c < 1) throw std::invalid_argument("matrix dimensions must be >= 1");
  entries.assign(static_cast<size_t>(r) * c, mpz_class(0));
}

IntMatrix::IntMatrix(std::initializer_list<std::initializer_list<long>> data)
    : IntMatrix(static_cast<int>(data.size()),
                data.size() ? static_cast<int>(data.begin()->size()) : 0) {
  int r = 0;
  for (const auto& row : data) {
    if (static_cast<int>(row.size()) != cols)
      throw std::invalid_argument("ragged matrix initializer");
    int c = 0;
    for (long v : row) at(r, c++) = v;
    ++r;
  }
}

bool IntMatrix::is_zero() const {
  return std::all_of(entries.begin(), entries.end(),
                     [](const mpz_class& v) { return v == 0; });
}

IntMatrix IntMatrix::transpose() const {
  IntMatrix t(cols, rows);
  for (int r = 0; r < rows; ++r)
    for (int c = 0; c < cols; ++c) t.at(c, r) = at(r, c);
  return t;
}

namespace {

mpz_class det(const IntMatrix& m, const std::vector<int>& rs, const std::vector<int>& cs) {
  const size_t k = rs.size();
  if (k == 1) return m.at(rs[0], cs[0]);
  mpz_class acc = 0;
  std::vector<int> sub_rows(rs.begin() + 1, rs.end());
  std::vector<int> sub_cols(k - 1);
  for (size_t j = 0; j < k; ++j) {
    if (m.at(rs[0], cs[j]) == 0) continue;
    size_t t = 0;
    for (size_t c = 0; c < k; ++c)
      if (c != j) sub_cols[t++] = cs[c];
    mpz_class minor = det(m, sub_rows, sub_cols);
    if (j % 2 == 0)
      acc += m.at(rs[0], cs[j]) * minor;
    else
      acc -= m.at(rs[0], cs[j]) * minor;
  }
  return acc;
}

// Calls fn on every size-k index subset of 0..n-1.
template <typename Fn>
void for_each_subset(int n, int k, Fn&& fn) {
  std::vector<int> idx(k);
  for (int i = 0; i < k; ++i) idx[i] = i;
  while (true) {
    fn(idx);
    int i = k - 1;
    while (i >= 0 && idx[i] == n - k + i) --i;
    if (i < 0) return;
    ++idx[i];
    for (int j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

}  // namespace

mpz_class minors_gcd(const IntMatrix& m, int k) {
  if (k == 0) throw std::invalid_argument("minor size must be >= 1");
  if (k > std::min(m.rows, m.cols))
    throw std::invalid_argument("minor size exceeds matrix dimensions");
  mpz_class g = 0;
  for_each_subset(m.rows, k, [&](const std::vector<int>& rs) {
    for_each_subset(m.cols, k, [&](const std::vector<int>& cs) {
      mpz_class d = det(m, rs, cs);
      if (d != 0) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), abs(d).get_mpz_t());
    });
  });
  return g;
}

int rank(const IntMatrix& m) {
  for (int k = std::min(m.rows, m.cols); k >= 1; --k) {
    bool nonzero = false;
    for_each_subset(m.rows, k, [&](const std::vector<int>& rs) {
      if (nonzero) return;
      for_each_subset(m.cols, k, [&](const std::vector<int>& cs) {
        if (!nonzero && det(m, rs, cs) != 0) nonzero = true;
      });
    });
    if (nonzero) return k;
  }
  return 0;
}

namespace {

void swap_rows(IntMatrix& a, int r1, int r2) {
  if (r1 == r2) return;
  for (int c = 0; c < a.cols; ++c) std::swap(a.at(r1, c), a.at(r2, c));
}

void swap_cols(IntMatrix& a, int c1, int c2) {
  if (c1 == c2) return;
  for (int r = 0; r < a.rows; ++r) std::swap(a.at(r, c1), a.at(r, c2));
}

}  // namespace

std::vector<mpz_class> smith_invariant_factors(const IntMatrix& m) {
  if (m.is_zero())
    throw std::invalid_argument("zero matrix has no invariant factors");
  IntMatrix a = m;
  std::vector<mpz_class> factors;
  const int bound = std::min(a.rows, a.cols);

  for (int t = 0; t < bound; ++t) {
    // Locate a nonzero entry of minimal absolute value in the trailing block.
    int pr = -1, pc = -1;
    mpz_class best = 0;
    for (int r = t; r < a.rows; ++r)
      for (int c = t; c < a.cols; ++c) {
        if (a.at(r, c) == 0) continue;
        mpz_class v = abs(a.at(r, c));
        if (pr < 0 || v < best) {
          best = v;
          pr = r;
          pc = c;
        }
      }
    if (pr < 0) break;  // trailing block is zero; rank reached
    swap_rows(a, t, pr);
    swap_cols(a, t, pc);

    while (true) {
      bool dirty = false;
      // Clear the pivot column with gcd-reducing row operations.
      for (int r = t + 1; r < a.rows; ++r) {
        if (a.at(r, t) == 0) continue;
        mpz_class q = a.at(r, t) / a.at(t, t);  // truncated: |rem| < |pivot|
        if (q != 0)
          for (int c = t; c < a.cols; ++c) a.at(r, c) -= q * a.at(t, c);
        if (a.at(r, t) != 0) {
          swap_rows(a, t, r);  // strictly smaller pivot
          dirty = true;
        }
      }
      if (dirty) continue;
      // Pivot row.
      for (int c = t + 1; c < a.cols; ++c) {
        if (a.at(t, c) == 0) continue;
        mpz_class q = a.at(t, c) / a.at(t, t);
        if (q != 0)
          for (int r = t; r < a.rows; ++r) a.at(r, c) -= q * a.at(r, t);
        if (a.at(t, c) != 0) {
          swap_cols(a, t, c);
          dirty = true;
        }
      }
      if (dirty) continue;
      // Pivot must divide every remaining entry to yield the divisibility
      // chain; fold an offending row into the pivot row and restart.
      int br = -1, bc = -1;
      for (int r = t + 1; r < a.rows && br < 0; ++r)
        for (int c = t + 1; c < a.cols; ++c)
          if (a.at(r, c) % a.at(t, t) != 0) {
            br = r;
            bc = c;
            break;
          }
      if (br < 0) break;
      (void)bc;
      for (int c = t; c < a.cols; ++c) a.at(t, c) += a.at(br, c);
    }
    factors.push_back(abs(a.at(t, t)));
  }

  // The product of the invariant factors must equal the gcd of all nonzero
  // maximal-rank minors of the input.
  mpz_class prod = 1;
  for (const auto& f : factors) prod *= f;
  if (prod != minors_gcd(m, static_cast<int>(factors.size())))
    throw std::logic_error("invariant-factor product disagrees with minor gcd");
  return factors;
}

bool is_mixed_dominating(const IntMatrix& m) {
  auto row_mixed = [&](int r, const std::vector<int>& cs) {
    bool pos = false, neg = false;
    for (int c : cs) {
      if (m.at(r, c) > 0) pos = true;
      if (m.at(r, c) < 0) neg = true;
    }
    return pos && neg;
  };
  std::vector<int> all_cols(m.cols);
  for (int c = 0; c < m.cols; ++c) all_cols[c] = c;
  for (int r = 0; r < m.rows; ++r)
    if (!row_mixed(r, all_cols)) return false;

  // A 1x1 submatrix can never be mixed, so sizes start at 2. The matrix
  // itself participates when it is square.
  bool found = false;
  for (int s = 2; s <= std::min(m.rows, m.cols) && !found; ++s) {
    for_each_subset(m.rows, s, [&](const std::vector<int>& rs) {
      if (found) return;
      for_each_subset(m.cols, s, [&](const std::vector<int>& cs) {
        if (found) return;
        bool all_mixed = true;
        for (int r : rs)
          if (!row_mixed(r, cs)) {
            all_mixed = false;
            break;
          }
        if (all_mixed) found = true;
      });
    });
  }
  return !found;
}

}  // namespace cimc
