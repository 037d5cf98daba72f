#ifndef DIEOUT_NULLSPACE_HPP
#define DIEOUT_NULLSPACE_HPP

#include "dieout/linalg.hpp"
#include "dieout/system.hpp"

#include <cstdint>
#include <optional>

namespace dieout {

/** Row vector nu with nu S = 0. Canonical form: coprime integer entries,
 * first nonzero entry positive. Oriented copies (see orient) may flip the
 * leading sign and are marked canonical = false. */
struct NullVector {
  RatVec entries;
  std::vector<int> support; // 0-based, ascending
  bool canonical = false;
};

NullVector make_null_vector(const RatVec& entries, bool canonicalize = true);

/** All minimal-support directions of the left kernel of S. */
struct NullTeam {
  int k = 0;                         // dim of the left kernel = d - rank(S)
  std::vector<NullVector> basis;     // k canonical basis vectors
  std::vector<NullVector> members;   // minimal-support directions
  std::vector<int> kernel_coordinates; // union of member supports
};

struct TeamOptions {
  std::optional<int> max_support;
  std::uint64_t subset_cap = 1000000; // TooLarge beyond this many candidates
  bool parallel = true;              // OpenMP partition; serial otherwise
};

/** Canonical basis of { nu : nu S = 0 } via exact elimination on S^T. */
std::vector<NullVector> kernel_basis(const SystemSpec& spec);

/** True iff nu is a null vector whose support sigma is a circuit: the rows
 * S[sigma] have left-kernel dimension exactly 1 (and nu spans it). */
bool is_minimal_support(const SystemSpec& spec, const NullVector& nu);

/** Enumerates every minimal-support null direction by scanning supports of
 * size <= min(rank(S)+1, max_support, d). Members are sorted by support.
 * Throws TooLarge when the scan would exceed subset_cap candidates. */
NullTeam team(const SystemSpec& spec, const TeamOptions& opts = {});

/** nu scaled by +-1 so that nu . C < 0. Throws Balanced when nu . C = 0. */
NullVector orient(const NullVector& nu, const RatVec& C);

/** A minimal-support null vector whose support avoids J. Requires |J| < k.
 * Throws NotEnoughKernel otherwise (or when the kernel forces J). */
NullVector cover_vector(const std::vector<int>& J,
                        const std::vector<NullVector>& basis,
                        const SystemSpec& spec);

/** Restriction of a self-coupled d x d system to focal rows F and resource
 * columns R. Requires s_ij = 0 for i in F, j outside R (NotClosed). */
SystemSpec restrict_system(const SystemSpec& full, const std::vector<int>& F,
                           const std::vector<int>& R);

} // namespace dieout

#endif
