#ifndef DIEOUT_CERTIFICATES_HPP
#define DIEOUT_CERTIFICATES_HPP

#include "dieout/nullspace.hpp"
#include "dieout/system.hpp"

#include <optional>

namespace dieout {

/** Envelope min_{i in positive_support} x_i(t) <= exp(a - b t), valid for any
 * solution that starts at x0 and stays in (0, beta]^d. */
struct DieOutCertificate {
  NullVector nu;           // oriented: nu . C < 0
  Rational nu_plus;        // sum of positive entries
  Rational nu_dot_C;
  Rational b_exact;        // |nu . C| / nu_plus
  double a = 0.0;
  double b = 0.0;
  std::vector<int> positive_support; // 0-based
};

struct TeamCertificate {
  std::vector<DieOutCertificate> certificates; // one per member with nu.C < 0
  std::vector<NullVector> balanced;            // members with nu.C = 0
  double a_star = 0.0; // max a
  double b_star = 0.0; // min b
  int k = 0;
  double beta = 0.0;
};

struct MustDieClaim {
  NullVector oriented;
  std::vector<int> positive_support; // dies as a disjunction over these
  bool definite = false;             // singleton support
};

struct MustDieReport {
  std::vector<MustDieClaim> claims;
  std::vector<NullVector> balanced;
  std::vector<int> definite_coordinates;
  int k = 0;
};

struct DieOutReport {
  std::vector<std::vector<int>> census; // per sample: coords under the envelope
  int min_census = 0;
  bool pass = false;
  int k = 0;
  std::optional<double> first_failure_t;
};

/** nu . ln X. State must be strictly positive on supp(nu). */
double lambda_value(const NullVector& nu, const State& s);

/** d/dt of lambda_value along any solution: exactly nu . C. */
Rational lambda_rate(const NullVector& nu, const RatVec& C);

/** Builds the envelope for one oriented member. Throws WrongOrientation if
 * nu . C >= 0, NoPositiveEntry if nu has no positive entry, X0OutOfRange if
 * x0 leaves (0, beta]. */
DieOutCertificate certificate(const NullVector& oriented, const RatVec& C,
                              double beta, const State& x0);

/** Orients every member; throws AllBalanced when k > 0 and no member has
 * nu . C != 0. Balanced members are reported, not certified. */
TeamCertificate team_certificate(const NullTeam& t, const RatVec& C,
                                 double beta, const State& x0);

/** Extinction claims that need no quantitative data: each oriented member
 * forces min over its positive support to die out. */
MustDieReport must_die_report(const NullTeam& t, const RatVec& C);

/** Census check: at every sample at least k coordinates must sit under
 * exp(a_star - b_star t) (relative slack 1e-9). Throws BetaMismatch when the
 * trajectory exceeds the certified bound, Empty on an empty trajectory. */
DieOutReport verify_dieout(const Trajectory& traj, const TeamCertificate& tc,
                           bool parallel = true);

} // namespace dieout

#endif
