#include "dieout/trophic.hpp"

#include <cmath>

namespace dieout {

TrophicReport check_trophic(const SystemSpec& spec) {
  if (spec.d != spec.dprime)
    throw Error(ErrorCode::NotSquare, "trophic conditions need a square system");
  TrophicReport rep;
  for (int n = 0; n < spec.d; ++n)
    if (spec.C[n] >= 0 && spec.S[n][n] >= 0) rep.t1_violations.push_back(n);
  for (int n = 0; n < spec.d; ++n)
    for (int m = 0; m < spec.d; ++m)
      if (spec.S[n][m] > 0 && (n <= m || spec.S[m][n] >= 0))
        rep.t2_violations.emplace_back(n, m);
  rep.pass = rep.t1_violations.empty() && rep.t2_violations.empty();
  return rep;
}

Rational quadratic_cap(const Rational& c, const Rational& s) {
  if (c < 0 || s >= 0)
    throw Error(ErrorCode::NotTrophic, "quadratic cap needs c >= 0 and s < 0");
  Rational cp1 = c + 1;
  return -(cp1 * cp1) / (4 * s);
}

TrappingRegion trapping_region(const SystemSpec& spec) {
  TrophicReport chk = check_trophic(spec);
  if (!chk.pass)
    throw Error(ErrorCode::NotTrophic, "trophic sign conditions fail");

  TrappingRegion r;
  // Largest eps = 2^-j (j >= 1) with eps^(n-m) s_nm + s_mn <= 0 whenever
  // s_nm > 0; (T2) gives n > m and s_mn < 0, so small eps always works.
  Rational eps("1/2");
  for (unsigned long j = 1;; ++j) {
    bool ok = true;
    for (int n = 0; n < spec.d && ok; ++n)
      for (int m = 0; m < spec.d && ok; ++m)
        if (spec.S[n][m] > 0 &&
            pow_rational(eps, (unsigned long)(n - m)) * spec.S[n][m] +
                    spec.S[m][n] > 0)
          ok = false;
    if (ok) break;
    if (j > 100000)
      throw Error(ErrorCode::NotTrophic, "no dyadic epsilon found");
    eps /= 2;
  }
  r.epsilon = eps;
  r.E.resize(spec.d);
  for (int n = 0; n < spec.d; ++n) r.E[n] = pow_rational(eps, (unsigned long)n + 1);

  r.A = 0;
  for (int n = 0; n < spec.d; ++n) {
    if (spec.C[n] >= 0) {
      r.M.push_back(n);
      Rational cap = quadratic_cap(spec.C[n], spec.S[n][n]);
      r.caps.push_back(cap);
      r.A += r.E[n] * cap;
    }
  }
  r.B = 1;
  for (int n = 0; n < spec.d; ++n)
    if (spec.C[n] < 0 && -spec.C[n] < r.B) r.B = -spec.C[n];
  r.lambda = (r.A > 0) ? 2 * r.A / r.B : Rational(1);
  return r;
}

double v_value(const TrappingRegion& region, const State& s) {
  double v = 0.0;
  for (size_t n = 0; n < region.E.size(); ++n)
    v += to_double(region.E[n]) * s.x.at(n);
  return v;
}

double v_dot(const SystemSpec& spec, const TrappingRegion& region,
             const State& s) {
  if ((int)s.x.size() != spec.d)
    throw Error(ErrorCode::DimensionMismatch, "state length");
  double v = 0.0;
  for (int n = 0; n < spec.d; ++n) {
    double rate = to_double(spec.C[n]);
    for (int m = 0; m < spec.d; ++m) rate += to_double(spec.S[n][m]) * s.x[m];
    v += to_double(region.E[n]) * s.x[n] * rate;
  }
  return v;
}

} // namespace dieout
