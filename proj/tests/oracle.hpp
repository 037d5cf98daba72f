// Test-side oracles, kept independent of the library implementation path:
// rank via fraction-free integer elimination (the library uses rational
// Gauss-Jordan) and team enumeration via the literal definition (scan every
// subset and every proper subset; the library scans bounded supports once).
#ifndef DIEOUT_TESTS_ORACLE_HPP
#define DIEOUT_TESTS_ORACLE_HPP

#include "dieout/system.hpp"

#include <vector>

namespace oracle {

inline int bareiss_rank(std::vector<std::vector<mpz_class>> m) {
  const int rows = (int)m.size();
  if (rows == 0) return 0;
  const int cols = (int)m[0].size();
  mpz_class prev = 1;
  int r = 0;
  for (int c = 0; c < cols && r < rows; ++c) {
    int p = -1;
    for (int i = r; i < rows; ++i)
      if (m[i][c] != 0) { p = i; break; }
    if (p < 0) continue;
    std::swap(m[r], m[p]);
    for (int i = r + 1; i < rows; ++i) {
      for (int j = c + 1; j < cols; ++j)
        m[i][j] = (m[r][c] * m[i][j] - m[i][c] * m[r][j]) / prev;
      m[i][c] = 0;
    }
    prev = m[r][c];
    ++r;
  }
  return r;
}

inline int rational_rank(const dieout::RatMat& rows) {
  std::vector<std::vector<mpz_class>> m;
  for (const auto& row : rows) {
    mpz_class lcm = 1;
    for (const auto& q : row)
      mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), q.get_den_mpz_t());
    std::vector<mpz_class> irow;
    for (const auto& q : row) {
      dieout::Rational t = q * lcm;
      irow.push_back(t.get_num());
    }
    m.push_back(std::move(irow));
  }
  return bareiss_rank(std::move(m));
}

inline int left_null_dim(const dieout::SystemSpec& spec, unsigned mask) {
  dieout::RatMat rows;
  for (int i = 0; i < spec.d; ++i)
    if (mask & (1u << i)) rows.push_back(spec.S[i]);
  return (int)rows.size() - rational_rank(rows);
}

/** Supports of all minimal-support null vectors, by the definition: the
 * subset carries left-kernel dimension 1 and every proper nonempty subset
 * carries dimension 0. Returns sorted index lists. */
inline std::vector<std::vector<int>> team_supports(const dieout::SystemSpec& spec) {
  std::vector<std::vector<int>> out;
  const unsigned full = (1u << spec.d) - 1;
  for (unsigned mask = 1; mask <= full; ++mask) {
    if (left_null_dim(spec, mask) != 1) continue;
    bool minimal = true;
    for (unsigned sub = (mask - 1) & mask; sub; sub = (sub - 1) & mask)
      if (left_null_dim(spec, sub) != 0) { minimal = false; break; }
    if (!minimal) continue;
    std::vector<int> sigma;
    for (int i = 0; i < spec.d; ++i)
      if (mask & (1u << i)) sigma.push_back(i);
    out.push_back(sigma);
  }
  return out;
}

/** Direct check nu S = 0, written against the raw entries. */
inline bool is_left_null(const dieout::SystemSpec& spec, const dieout::RatVec& nu) {
  for (int j = 0; j < spec.dprime; ++j) {
    dieout::Rational acc = 0;
    for (int i = 0; i < spec.d; ++i) acc += nu[i] * spec.S[i][j];
    if (acc != 0) return false;
  }
  return true;
}

/** Canonical form check: coprime integers, first nonzero entry positive. */
inline bool is_canonical(const dieout::RatVec& nu) {
  mpz_class g = 0;
  int first = 0;
  for (const auto& q : nu) {
    if (q.get_den() != 1) return false;
    if (first == 0 && q != 0) first = dieout::sign(q);
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), q.get_num_mpz_t());
  }
  return g == 1 && first > 0;
}

} // namespace oracle

#endif
