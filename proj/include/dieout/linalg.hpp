#ifndef DIEOUT_LINALG_HPP
#define DIEOUT_LINALG_HPP

#include "dieout/rational.hpp"

namespace dieout {

/** Reduced row echelon form, computed in place with exact rational pivots.
 * Returns the pivot column of each nonzero row; rank = pivots.size(). */
std::vector<int> rref(RatMat& m);

int rank(const RatMat& m);

RatMat transpose(const RatMat& m);

/** Basis of { x : m x = 0 }, one vector per free column of rref(m),
 * each scaled to canonical integer form. cols = width of m (rows may be 0,
 * in which case cols must be passed explicitly). */
std::vector<RatVec> null_space(const RatMat& m, int cols);

/** Rows of m indexed by idx (0-based). */
RatMat select_rows(const RatMat& m, const std::vector<int>& idx);

} // namespace dieout

#endif
