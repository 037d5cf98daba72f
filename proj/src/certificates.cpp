#include "dieout/certificates.hpp"

#include <algorithm>
#include <cmath>
#include <set>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace dieout {

static constexpr double kEnvelopeSlack = 1e-9;

double lambda_value(const NullVector& nu, const State& s) {
  double v = 0.0;
  for (int i : nu.support) {
    if (!(s.x.at(i) > 0.0))
      throw Error(ErrorCode::X0OutOfRange, "state not positive on the support");
    v += to_double(nu.entries[i]) * std::log(s.x[i]);
  }
  return v;
}

Rational lambda_rate(const NullVector& nu, const RatVec& C) {
  return dot(nu.entries, C);
}

DieOutCertificate certificate(const NullVector& oriented, const RatVec& C,
                              double beta, const State& x0) {
  if (oriented.support.empty()) throw Error(ErrorCode::ZeroVector, "certificate");
  if ((int)x0.x.size() != (int)oriented.entries.size())
    throw Error(ErrorCode::DimensionMismatch, "x0 length");
  if (!(beta > 0.0) || !std::isfinite(beta))
    throw Error(ErrorCode::X0OutOfRange, "beta must be positive and finite");

  DieOutCertificate cert;
  cert.nu = oriented;
  cert.nu_dot_C = dot(oriented.entries, C);
  if (cert.nu_dot_C >= 0)
    throw Error(ErrorCode::WrongOrientation, "need nu . C < 0");

  cert.nu_plus = 0;
  Rational neg_frac = 0; // sum of negative entries / nu_plus, in [-inf, 0]
  for (int i = 0; i < (int)oriented.entries.size(); ++i) {
    const Rational& e = oriented.entries[i];
    if (e > 0) {
      cert.nu_plus += e;
      cert.positive_support.push_back(i);
    } else if (e < 0) {
      neg_frac += e;
    }
  }
  if (cert.positive_support.empty())
    throw Error(ErrorCode::NoPositiveEntry, "oriented member has no positive entry");
  neg_frac /= cert.nu_plus;

  for (int i = 0; i < (int)x0.x.size(); ++i)
    if (!(x0.x[i] > 0.0) || x0.x[i] > beta)
      throw Error(ErrorCode::X0OutOfRange,
                  "x0 coordinate " + std::to_string(i + 1) + " outside (0, beta]");
  double a = -std::log(beta) * to_double(neg_frac);
  for (int i : oriented.support)
    a += to_double(oriented.entries[i] / cert.nu_plus) * std::log(x0.x[i]);
  cert.a = a;
  cert.b_exact = -cert.nu_dot_C / cert.nu_plus;
  cert.b = to_double(cert.b_exact);
  return cert;
}

TeamCertificate team_certificate(const NullTeam& t, const RatVec& C,
                                 double beta, const State& x0) {
  TeamCertificate tc;
  tc.k = t.k;
  tc.beta = beta;
  for (const auto& nu : t.members) {
    Rational rate = dot(nu.entries, C);
    if (rate == 0) {
      tc.balanced.push_back(nu);
      continue;
    }
    tc.certificates.push_back(certificate(orient(nu, C), C, beta, x0));
  }
  if (!t.members.empty() && tc.certificates.empty())
    throw Error(ErrorCode::AllBalanced, "every team member has nu . C = 0");
  if (!tc.certificates.empty()) {
    tc.a_star = tc.certificates[0].a;
    tc.b_star = tc.certificates[0].b;
    for (const auto& c : tc.certificates) {
      tc.a_star = std::max(tc.a_star, c.a);
      tc.b_star = std::min(tc.b_star, c.b);
    }
  }
  return tc;
}

MustDieReport must_die_report(const NullTeam& t, const RatVec& C) {
  MustDieReport r;
  r.k = t.k;
  std::set<int> definite;
  for (const auto& nu : t.members) {
    if (dot(nu.entries, C) == 0) {
      r.balanced.push_back(nu);
      continue;
    }
    MustDieClaim claim;
    claim.oriented = orient(nu, C);
    for (int i = 0; i < (int)claim.oriented.entries.size(); ++i)
      if (claim.oriented.entries[i] > 0) claim.positive_support.push_back(i);
    claim.definite = claim.positive_support.size() == 1;
    if (claim.definite) definite.insert(claim.positive_support[0]);
    r.claims.push_back(std::move(claim));
  }
  r.definite_coordinates.assign(definite.begin(), definite.end());
  return r;
}

DieOutReport verify_dieout(const Trajectory& traj, const TeamCertificate& tc,
                           bool parallel) {
  if (traj.samples.empty()) throw Error(ErrorCode::Empty, "trajectory");
  if (traj.beta > tc.beta)
    throw Error(ErrorCode::BetaMismatch,
                "trajectory bound " + std::to_string(traj.beta) +
                    " exceeds certified beta " + std::to_string(tc.beta));

  DieOutReport rep;
  rep.k = tc.k;
  const std::int64_t n = (std::int64_t)traj.samples.size();
  rep.census.resize(n);

  auto census_at = [&](std::int64_t s) {
    const State& st = traj.samples[s];
    double env = std::exp(tc.a_star - tc.b_star * st.t) * (1.0 + kEnvelopeSlack);
    std::vector<int> under;
    for (int i = 0; i < (int)st.x.size(); ++i)
      if (st.x[i] <= env) under.push_back(i);
    return under;
  };

  if (parallel) {
#ifdef _OPENMP
#pragma omp parallel for schedule(static)
    for (std::int64_t s = 0; s < n; ++s) rep.census[s] = census_at(s);
#else
    for (std::int64_t s = 0; s < n; ++s) rep.census[s] = census_at(s);
#endif
  } else {
    for (std::int64_t s = 0; s < n; ++s) rep.census[s] = census_at(s);
  }

  rep.min_census = (int)rep.census[0].size();
  for (std::int64_t s = 0; s < n; ++s) {
    int c = (int)rep.census[s].size();
    if (c < rep.min_census) rep.min_census = c;
    if (c < tc.k && !rep.first_failure_t)
      rep.first_failure_t = traj.samples[s].t;
  }
  rep.pass = rep.min_census >= tc.k;
  return rep;
}

} // namespace dieout
