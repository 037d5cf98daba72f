#include "dieout/integrator.hpp"

#include <algorithm>
#include <cmath>

namespace dieout {

RatVec percapita_rates(const SystemSpec& spec, const RatVec& Z) {
  if ((int)Z.size() != spec.dprime)
    throw Error(ErrorCode::DimensionMismatch, "Z must have length dprime");
  RatVec r(spec.d);
  for (int i = 0; i < spec.d; ++i) {
    r[i] = spec.C[i];
    for (int j = 0; j < spec.dprime; ++j) r[i] += spec.S[i][j] * Z[j];
  }
  return r;
}

std::vector<double> percapita_rates(const SystemSpec& spec,
                                    const std::vector<double>& Z) {
  if ((int)Z.size() != spec.dprime)
    throw Error(ErrorCode::DimensionMismatch, "Z must have length dprime");
  std::vector<double> r(spec.d);
  for (int i = 0; i < spec.d; ++i) {
    r[i] = to_double(spec.C[i]);
    for (int j = 0; j < spec.dprime; ++j)
      r[i] += to_double(spec.S[i][j]) * Z[j];
  }
  return r;
}

namespace {

std::vector<double> to_doubles(const RatVec& v) {
  std::vector<double> out(v.size());
  for (size_t i = 0; i < v.size(); ++i) out[i] = to_double(v[i]);
  return out;
}

struct Stepper {
  const SystemSpec& spec;
  bool log_space;
  std::vector<double> c;
  std::vector<std::vector<double>> s;
  const std::vector<int>* mapping = nullptr; // coupled feedback, else fixed z
  std::vector<double> z_fixed;
  // scratch
  std::vector<double> k1, k2, k3, k4, tmp, z;

  Stepper(const SystemSpec& sp, bool logspace) : spec(sp), log_space(logspace) {
    c = to_doubles(sp.C);
    for (const auto& row : sp.S) s.push_back(to_doubles(row));
    int d = sp.d;
    k1.resize(d); k2.resize(d); k3.resize(d); k4.resize(d); tmp.resize(d);
    z.resize(sp.dprime);
  }

  void deriv(const std::vector<double>& y, std::vector<double>& dy) {
    const std::vector<double>* zp = &z_fixed;
    if (mapping) {
      for (int j = 0; j < spec.dprime; ++j) {
        double v = y[(*mapping)[j]];
        z[j] = log_space ? std::exp(v) : v;
      }
      zp = &z;
    }
    for (int i = 0; i < spec.d; ++i) {
      double r = c[i];
      for (int j = 0; j < spec.dprime; ++j) r += s[i][j] * (*zp)[j];
      dy[i] = log_space ? r : y[i] * r;
    }
  }

  std::vector<double> step(const std::vector<double>& y, double h) {
    const int d = spec.d;
    std::vector<double> out(d);
    deriv(y, k1);
    for (int i = 0; i < d; ++i) tmp[i] = y[i] + 0.5 * h * k1[i];
    deriv(tmp, k2);
    for (int i = 0; i < d; ++i) tmp[i] = y[i] + 0.5 * h * k2[i];
    deriv(tmp, k3);
    for (int i = 0; i < d; ++i) tmp[i] = y[i] + h * k3[i];
    deriv(tmp, k4);
    for (int i = 0; i < d; ++i)
      out[i] = y[i] + h / 6.0 * (k1[i] + 2.0 * k2[i] + 2.0 * k3[i] + k4[i]);
    return out;
  }
};

} // namespace

SimResult simulate(const SystemSpec& spec, const ResourceSignal& signal,
                   const SimConfig& cfg) {
  validate(spec, signal);
  if ((int)cfg.x0.size() != spec.d)
    throw Error(ErrorCode::DimensionMismatch, "x0 must have length d");
  if (!(cfg.dt > 0.0) || !std::isfinite(cfg.dt) || !(cfg.horizon >= 0.0) ||
      !std::isfinite(cfg.horizon))
    throw Error(ErrorCode::NonFinite, "need finite dt > 0 and horizon >= 0");
  if (cfg.sample_stride < 1)
    throw Error(ErrorCode::DimensionMismatch, "sample_stride must be >= 1");
  for (double v : cfg.x0) {
    if (!std::isfinite(v)) throw Error(ErrorCode::NonFinite, "x0");
    if (cfg.log_space ? !(v > 0.0) : !(v >= 0.0))
      throw Error(ErrorCode::NonPositiveStart,
                  cfg.log_space ? "log-space start must be positive"
                                : "start must be nonnegative");
  }

  Stepper st(spec, cfg.log_space);

  const auto* coupled = std::get_if<CoupledSignal>(&signal);
  const auto* constant = std::get_if<ConstantSignal>(&signal);
  const auto* piecewise = std::get_if<PiecewiseSignal>(&signal);
  const auto* oscillator = std::get_if<OscillatorSignal>(&signal);

  if (coupled) st.mapping = &coupled->mapping;
  if (constant) st.z_fixed = to_doubles(constant->z0);

  size_t phase = 0; // piecewise schedule position
  if (piecewise) st.z_fixed = to_doubles(piecewise->schedule[0].z);

  bool at_star = false; // oscillator starts at z_starstar
  std::vector<double> z_star_d, z_starstar_d;
  if (oscillator) {
    z_star_d = to_doubles(oscillator->z_star);
    z_starstar_d = to_doubles(oscillator->z_starstar);
    st.z_fixed = z_starstar_d;
  }

  std::vector<double> y = cfg.x0;
  if (cfg.log_space)
    for (auto& v : y) v = std::log(v);

  auto densities = [&](const std::vector<double>& yy) {
    std::vector<double> x = yy;
    if (cfg.log_space)
      for (auto& v : x) v = std::exp(v);
    return x;
  };

  SimResult res;
  auto record = [&](double t, const std::vector<double>& x) {
    res.trajectory.samples.push_back({t, x});
    if (coupled)
      res.sample_z.push_back(eval_signal(signal, t, x));
    else
      res.sample_z.push_back(st.z_fixed);
  };

  double t = 0.0;
  double beta = 0.0;
  {
    std::vector<double> x0 = densities(y);
    for (double v : x0) beta = std::max(beta, v);
    record(0.0, x0);
  }

  const double t_eps = cfg.dt * 1e-9;
  const double wlog_m = oscillator && cfg.log_space ? std::log(oscillator->m) : 0.0;
  auto watch_value = [&](const std::vector<double>& yy, int w) {
    return yy[w]; // compare in integration coordinates
  };
  auto watch_threshold = [&]() {
    return cfg.log_space ? wlog_m : oscillator->m;
  };

  long long steps = 0;
  while (cfg.horizon - t > t_eps) {
    double h = std::min(cfg.dt, cfg.horizon - t);
    if (piecewise && phase + 1 < piecewise->schedule.size()) {
      double next = piecewise->schedule[phase + 1].start;
      if (next - t > t_eps && next - t < h) h = next - t;
    }

    std::vector<double> trial = st.step(y, h);
    bool switched = false;

    if (oscillator) {
      int w = at_star ? oscillator->watch_high : oscillator->watch_low;
      double thr = watch_threshold();
      if (watch_value(y, w) < thr && watch_value(trial, w) >= thr) {
        // Bisect the step length until the crossing time is pinned to 1e-10.
        double lo = 0.0, hi = h;
        for (int it = 0; it < 200 && hi - lo > 1e-10; ++it) {
          double mid = 0.5 * (lo + hi);
          std::vector<double> probe = st.step(y, mid);
          if (watch_value(probe, w) >= thr)
            hi = mid;
          else
            lo = mid;
        }
        h = hi;
        trial = st.step(y, h);
        at_star = !at_star;
        st.z_fixed = at_star ? z_star_d : z_starstar_d;
        res.switches.push_back({t + h, at_star});
        switched = true;
      }
    }

    y = std::move(trial);
    t += h;
    if (cfg.horizon - t <= t_eps) t = cfg.horizon;
    ++steps;

    if (piecewise && phase + 1 < piecewise->schedule.size() &&
        t >= piecewise->schedule[phase + 1].start - t_eps) {
      ++phase;
      st.z_fixed = to_doubles(piecewise->schedule[phase].z);
      switched = true;
    }

    std::vector<double> x = densities(y);
    if (!cfg.log_space) {
      for (size_t i = 0; i < x.size(); ++i)
        if (x[i] < cfg.extinction_floor) x[i] = y[i] = cfg.extinction_floor;
    }
    double xmax = 0.0;
    for (double v : x) {
      if (!std::isfinite(v)) throw Error(ErrorCode::Blowup, "non-finite state", t);
      xmax = std::max(xmax, v);
    }
    if (xmax > cfg.blowup_threshold)
      throw Error(ErrorCode::Blowup,
                  "coordinate exceeded " + std::to_string(cfg.blowup_threshold) +
                      " at t = " + std::to_string(t), t);
    beta = std::max(beta, xmax);

    if (steps % cfg.sample_stride == 0 || t >= cfg.horizon || switched)
      record(t, x);
  }

  res.trajectory.beta = beta;
  return res;
}

std::pair<OscillatorSignal, std::vector<std::string>> make_oscillator(
    const SystemSpec& spec, const RatVec& z_star, const RatVec& z_starstar,
    int watch_low, int watch_high, double m) {
  OscillatorSignal sig{z_star, z_starstar, watch_low, watch_high, m};
  validate(spec, ResourceSignal(sig));

  if (z_star == z_starstar)
    throw Error(ErrorCode::BadLevels, "levels are identical");
  RatVec r_star = percapita_rates(spec, z_star);
  RatVec r_ss = percapita_rates(spec, z_starstar);
  for (int w : {watch_low, watch_high})
    if (sign(r_star[w]) * sign(r_ss[w]) >= 0)
      throw Error(ErrorCode::BadLevels,
                  "watched coordinate " + std::to_string(w + 1) +
                      " needs strictly opposite rate signs at the two levels");

  std::vector<std::string> warnings;
  if (r_ss[watch_low] < 0)
    warnings.push_back("watch_low falls at the starstar level; the first "
                       "switch will never fire");
  if (r_star[watch_high] < 0)
    warnings.push_back("watch_high falls at the star level; the second "
                       "switch will never fire");
  for (int i = 0; i < spec.d; ++i) {
    if (i == watch_low || i == watch_high) continue;
    if (r_star[i] != 0 || r_ss[i] != 0)
      warnings.push_back("coordinate " + std::to_string(i + 1) +
                         " is not constant across the levels");
  }
  return {sig, warnings};
}

double trajectory_bound(const Trajectory& traj) {
  if (traj.samples.empty()) throw Error(ErrorCode::Empty, "trajectory");
  double b = 0.0;
  for (const auto& s : traj.samples)
    for (double v : s.x) b = std::max(b, v);
  return b;
}

} // namespace dieout
