#include "dieout/linalg.hpp"

#include <stdexcept>

namespace dieout {

std::vector<int> rref(RatMat& m) {
  std::vector<int> pivots;
  if (m.empty()) return pivots;
  const int rows = (int)m.size(), cols = (int)m[0].size();
  int r = 0;
  for (int c = 0; c < cols && r < rows; ++c) {
    int p = -1;
    for (int i = r; i < rows; ++i)
      if (m[i][c] != 0) { p = i; break; }
    if (p < 0) continue;
    std::swap(m[r], m[p]);
    Rational inv = 1 / m[r][c];
    for (int j = c; j < cols; ++j) m[r][j] *= inv;
    for (int i = 0; i < rows; ++i) {
      if (i == r || m[i][c] == 0) continue;
      Rational f = m[i][c];
      for (int j = c; j < cols; ++j) m[i][j] -= f * m[r][j];
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

int rank(const RatMat& m) {
  RatMat w = m;
  return (int)rref(w).size();
}

RatMat transpose(const RatMat& m) {
  if (m.empty()) return {};
  RatMat t(m[0].size(), RatVec(m.size()));
  for (size_t i = 0; i < m.size(); ++i)
    for (size_t j = 0; j < m[i].size(); ++j) t[j][i] = m[i][j];
  return t;
}

std::vector<RatVec> null_space(const RatMat& m, int cols) {
  if (!m.empty() && (int)m[0].size() != cols)
    throw std::invalid_argument("null_space: cols mismatch");
  RatMat w = m;
  std::vector<int> pivots = rref(w);
  std::vector<bool> is_pivot(cols, false);
  for (int c : pivots) is_pivot[c] = true;
  std::vector<RatVec> basis;
  for (int c = 0; c < cols; ++c) {
    if (is_pivot[c]) continue;
    RatVec v(cols, Rational(0));
    v[c] = 1;
    for (size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = -w[i][c];
    basis.push_back(canonical_integer_direction(v));
  }
  return basis;
}

RatMat select_rows(const RatMat& m, const std::vector<int>& idx) {
  RatMat out;
  out.reserve(idx.size());
  for (int i : idx) out.push_back(m.at(i));
  return out;
}

} // namespace dieout
