#ifndef DIEOUT_TROPHIC_HPP
#define DIEOUT_TROPHIC_HPP

#include "dieout/system.hpp"

#include <utility>

namespace dieout {

struct TrophicReport {
  bool pass = false;
  std::vector<int> t1_violations;                  // 0-based rows
  std::vector<std::pair<int, int>> t2_violations;  // 0-based (n, m)
};

/** Weighted box { V(X) <= lambda } with V(X) = sum eps^(n+1) x_n that every
 * forward orbit enters and never leaves: Vdot <= A - B V. */
struct TrappingRegion {
  Rational epsilon;       // largest 2^-j making predation terms cancel
  RatVec E;               // weights (eps^1 .. eps^d)
  std::vector<int> M;     // rows with c_n >= 0 (0-based)
  RatVec caps;            // per-row cap a_n for n in M
  Rational A;
  Rational B;
  Rational lambda;
};

/** (T1) c_n >= 0 implies s_nn < 0; (T2) s_nm > 0 implies n > m and s_mn < 0.
 * Requires a square self-coupled system (NotSquare). */
TrophicReport check_trophic(const SystemSpec& spec);

/** Smallest a with c x + s x^2 <= a - x for all x >= 0; requires c >= 0,
 * s < 0. a = -(c+1)^2 / (4s). */
Rational quadratic_cap(const Rational& c, const Rational& s);

/** Throws NotTrophic unless check_trophic passes. */
TrappingRegion trapping_region(const SystemSpec& spec);

double v_value(const TrappingRegion& region, const State& s);

/** d/dt of V along the flow at state s, evaluated in doubles. */
double v_dot(const SystemSpec& spec, const TrappingRegion& region, const State& s);

} // namespace dieout

#endif
