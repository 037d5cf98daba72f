// Acceptance gate: one line per criterion, nonzero exit if any fails.
// Numeric tolerances are written out literally next to each check.

#include "dieout/certificates.hpp"
#include "dieout/config.hpp"
#include "dieout/integrator.hpp"
#include "dieout/nullspace.hpp"
#include "dieout/trophic.hpp"

#include "helpers.hpp"
#include "oracle.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <random>
#include <set>
#include <sstream>

using namespace dieout;

namespace {

int failures = 0;

void report(int idx, const char* label, bool ok, const std::string& detail) {
  std::printf("%s %2d %s%s%s\n", ok ? "PASS" : "FAIL", idx, label,
              detail.empty() ? "" : " -- ", detail.c_str());
  if (!ok) ++failures;
}

double ms_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double, std::milli>(
             std::chrono::steady_clock::now() - t0)
      .count();
}

Config bundled(const std::string& name) {
  return load_config(testing::config_path(name));
}

SimResult run(const Config& cfg, double horizon = -1.0) {
  SimConfig sim;
  sim.x0 = cfg.x0;
  sim.horizon = horizon > 0 ? horizon : cfg.horizon;
  sim.dt = cfg.dt;
  SimResult res = simulate(cfg.spec, cfg.signal, sim);
  return res;
}

std::string fmt(const char* f, double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, f, v);
  return buf;
}

// ---------------------------------------------------------------- criterion 1

void criterion_1() {
  SystemSpec spec = testing::make_spec({"-1", "1", "-1"},
                                       {{"1", "2"}, {"1", "1"}, {"3", "1"}});
  double best = 1e9;
  NullTeam t;
  for (int rep = 0; rep < 3; ++rep) {
    auto t0 = std::chrono::steady_clock::now();
    t = team(spec);
    best = std::min(best, ms_since(t0));
  }
  bool ok = t.members.size() == 1 && t.members[0].entries == RatVec{2, -5, 1} &&
            t.members[0].canonical &&
            dot(t.members[0].entries, spec.C) == Rational(-8) && best < 1.0;
  report(1, "exact kernel member (2,-5,1) with nu.C = -8, under 1 ms", ok,
         fmt("%.3f ms", best));
}

// ---------------------------------------------------------------- criterion 2

void criterion_2() {
  auto t0 = std::chrono::steady_clock::now();
  NullTeam t7 = team(bundled("seven_dim.json").spec);
  NullTeam t14 = team(bundled("fourteen.json").spec);
  double ms = ms_since(t0);

  bool ok7 = t7.members.size() == 10;
  for (const auto& nu : t7.members) ok7 = ok7 && nu.support.size() == 3;
  bool ok14 = t14.k == 3 && t14.members.size() == 28;
  for (const auto& nu : t14.members) ok14 = ok14 && nu.support.size() == 6;
  bool ok = ok7 && ok14 && ms < 1000.0;
  std::ostringstream d;
  d << "5x2: " << t7.members.size() << " members, 8x5: " << t14.members.size()
    << " members, " << fmt("%.1f ms", ms);
  report(2, "generic team sizes 10 (5x2) and 28 (8x5, k = 3), under 1 s", ok,
         d.str());
}

// ---------------------------------------------------------------- criterion 3

void criterion_3() {
  std::mt19937 rng(20260825);
  int bad = -1;
  for (int trial = 0; trial < 50 && bad < 0; ++trial) {
    int d = 3 + (int)(rng() % 5);
    int dp = 1 + (int)(rng() % 4);
    SystemSpec spec = testing::random_spec(d, dp, rng, 0.3);
    NullTeam t = team(spec);

    std::set<std::vector<int>> got, want;
    for (const auto& nu : t.members) {
      got.insert(nu.support);
      if (!oracle::is_left_null(spec, nu.entries) ||
          !oracle::is_canonical(nu.entries))
        bad = trial;
    }
    for (const auto& s : oracle::team_supports(spec)) want.insert(s);
    if (got != want) bad = trial;
  }
  report(3, "team enumeration matches the brute-force subset oracle (50 randoms)",
         bad < 0, bad < 0 ? "" : "mismatch at trial " + std::to_string(bad));
}

// ---------------------------------------------------------------- criterion 4

void criterion_4() {
  const char* names[] = {"scalar_decay.json",        "four_dim.json",
                         "seven_dim.json",           "fourteen.json",
                         "ex_specific_panel_a.json", "ex_specific_balanced.json",
                         "ex_specific_oscillator.json", "classic_lv.json"};
  auto t0 = std::chrono::steady_clock::now();
  bool ok = true;
  std::ostringstream d;
  for (const char* name : names) {
    Config cfg = bundled(name);
    SimResult res = run(cfg);
    NullTeam t = team(cfg.spec);
    if (t.k == 0) {
      d << name << ": k=0; ";
      continue;
    }
    TeamCertificate tc;
    try {
      tc = team_certificate(t, cfg.spec.C, res.trajectory.beta,
                            res.trajectory.samples.front());
    } catch (const Error& e) {
      if (e.code == ErrorCode::AllBalanced) {
        d << name << ": balanced; ";
        continue;
      }
      throw;
    }
    // per-member exponential envelopes
    for (const auto& c : tc.certificates)
      for (const auto& s : res.trajectory.samples) {
        double lo = s.x[c.positive_support[0]];
        for (int i : c.positive_support) lo = std::min(lo, s.x[i]);
        if (!(lo <= std::exp(c.a - c.b * s.t) * (1.0 + 1e-9))) {
          ok = false;
          d << name << ": member envelope broken at t=" << s.t << "; ";
        }
      }
    // team census: at least k coordinates under exp(a* - b* t) everywhere
    DieOutReport rep = verify_dieout(res.trajectory, tc);
    if (!rep.pass) {
      ok = false;
      d << name << ": census " << rep.min_census << " < k=" << tc.k << "; ";
    } else {
      d << name << ": census>=" << tc.k << "; ";
    }
  }
  double ms = ms_since(t0);
  ok = ok && ms < 30000.0;
  d << fmt("%.0f ms", ms);
  report(4, "certificate envelopes and census hold on every bounded bundled run",
         ok, d.str());
}

// ---------------------------------------------------------------- criterion 5

void criterion_5() {
  Config cfg = bundled("four_dim.json");
  MustDieReport md = must_die_report(team(cfg.spec), cfg.spec.C);
  bool claims_ok = md.definite_coordinates == std::vector<int>{1, 3};

  SimResult res = run(cfg);
  const State& last = res.trajectory.samples.back();
  // hand steady state of the surviving pair: x1 = 600/7, x3 = 820/7
  double x1 = 600.0 / 7, x3 = 820.0 / 7;
  bool died = last.x[1] < 1e-6 && last.x[3] < 1e-6;
  bool settled = std::fabs(last.x[0] / x1 - 1.0) <= 0.01 &&
                 std::fabs(last.x[2] / x3 - 1.0) <= 0.01;
  std::ostringstream d;
  d << "x2(T)=" << fmt("%.2e", last.x[1]) << ", x4(T)=" << fmt("%.2e", last.x[3])
    << ", x1(T)=" << fmt("%.3f", last.x[0]) << " (600/7="
    << fmt("%.3f", x1) << "), x3(T)=" << fmt("%.3f", last.x[2]) << " (820/7="
    << fmt("%.3f", x3) << ")";
  report(5, "4D web: definite claims {x2, x4} die out; survivors settle within 1%",
         claims_ok && died && settled, d.str());
}

// ---------------------------------------------------------------- criterion 6

void criterion_6() {
  Config cfg = bundled("ex_specific_balanced.json");
  RatVec rates =
      percapita_rates(cfg.spec, std::get<ConstantSignal>(cfg.signal).z0);
  bool zero = true;
  for (const auto& r : rates) zero = zero && r == 0;

  SimResult res = run(cfg);
  double drift = 0.0;
  for (const auto& s : res.trajectory.samples)
    for (int i = 0; i < 3; ++i)
      drift = std::max(drift, std::fabs(s.x[i] - cfg.x0[i]));

  bool refused = false;
  try {
    team_certificate(team(cfg.spec), cfg.spec.C, 2.0, {0.0, cfg.x0});
  } catch (const Error& e) {
    refused = e.code == ErrorCode::AllBalanced;
  }
  report(6, "balanced variant: rates exactly zero, drift <= 1e-10, certify refuses",
         zero && drift <= 1e-10 && refused, fmt("drift %.2e", drift));
}

// ---------------------------------------------------------------- criterion 7

void criterion_7() {
  auto t0 = std::chrono::steady_clock::now();
  Config cfg = bundled("four_dim.json");
  bool signs = check_trophic(cfg.spec).pass;
  TrappingRegion r = trapping_region(cfg.spec);
  double lam = to_double(r.lambda);

  // Vdot <= A - B V checked in exact rational arithmetic (stronger than the
  // allowed 1e-12 slack) on 1e4 random nonnegative states.
  std::mt19937 rng(7);
  bool drift_ok = true;
  for (int trial = 0; trial < 10000 && drift_ok; ++trial) {
    RatVec x;
    Rational v = 0, vdot = 0;
    for (int n = 0; n < 4; ++n)
      x.push_back(testing::frac((int)(rng() % 4000), 1 + (int)(rng() % 9)));
    for (int n = 0; n < 4; ++n) {
      Rational rate = cfg.spec.C[n];
      for (int m = 0; m < 4; ++m) rate += cfg.spec.S[n][m] * x[m];
      vdot += r.E[n] * x[n] * rate;
      v += r.E[n] * x[n];
    }
    drift_ok = vdot <= r.A - r.B * v;
  }

  // 20 random starts with V(X0) up to 10 lambda: enter { V <= lambda },
  // never leave it again (relative slack 1e-6).
  std::uniform_real_distribution<double> unif(0.05, 1.0);
  bool trapped = true;
  for (int ic = 0; ic < 20 && trapped; ++ic) {
    std::vector<double> x0(4);
    for (auto& v : x0) v = unif(rng);
    double target = lam * (0.5 + 9.5 * ic / 19.0);
    double v0 = 0.0;
    for (int n = 0; n < 4; ++n) v0 += to_double(r.E[n]) * x0[n];
    for (auto& v : x0) v *= target / v0;

    SimConfig sim;
    sim.x0 = x0;
    sim.horizon = 150.0;
    sim.dt = 0.01;
    sim.sample_stride = 5;
    SimResult res = simulate(cfg.spec, cfg.signal, sim);
    bool entered = false;
    for (const auto& s : res.trajectory.samples) {
      double v = v_value(r, s);
      if (!entered && v <= lam) entered = true;
      if (entered && v > lam * (1.0 + 1e-6)) trapped = false;
    }
    trapped = trapped && entered;
  }
  double ms = ms_since(t0);
  bool ok = signs && drift_ok && trapped && ms < 60000.0;
  report(7, "trapping region: exact drift bound, 20 random orbits captured",
         ok, fmt("%.0f ms", ms));
}

// ---------------------------------------------------------------- criterion 8

void criterion_8() {
  Config cfg = bundled("classic_lv.json");
  TrophicReport rep = check_trophic(cfg.spec);
  bool fails_t1 = !rep.pass && rep.t1_violations == std::vector<int>{0};

  SimResult res = run(cfg);
  auto H = [](const State& s) {
    return s.x[0] - std::log(s.x[0]) + s.x[1] - std::log(s.x[1]);
  };
  double h0 = H(res.trajectory.samples.front());
  double drift = 0.0;
  for (const auto& s : res.trajectory.samples)
    drift = std::max(drift, std::fabs(H(s) - h0) / h0);
  report(8, "predator-prey fails (T1); first integral conserved to 1e-6",
         fails_t1 && drift <= 1e-6, fmt("relative drift %.2e", drift));
}

// ---------------------------------------------------------------- criterion 9

void criterion_9() {
  std::mt19937 rng(9);
  bool ok = true;
  for (int trial = 0; trial < 100 && ok; ++trial) {
    Rational c = testing::frac((int)(rng() % 80), 1 + (int)(rng() % 9));
    Rational s = -testing::frac(1 + (int)(rng() % 60), 1 + (int)(rng() % 9));
    Rational a = quadratic_cap(c, s);
    double cd = to_double(c), sd = to_double(s), ad = to_double(a);
    for (int g = 0; g <= 100 && ok; ++g) {
      Rational x = testing::frac(g, 4);
      ok = c * x + s * x * x <= a - x; // exact
      double xd = to_double(x);
      double lhs = cd * xd + sd * xd * xd, rhs = ad - xd;
      ok = ok && lhs <= rhs + 1e-12 * std::max(1.0, std::fabs(rhs));
    }
    Rational xstar = (c + 1) / (-2 * s);
    ok = ok && c * xstar + s * xstar * xstar == a - xstar; // tight
  }
  report(9, "quadratic self-limitation cap holds on grids and is tight", ok, "");
}

// --------------------------------------------------------------- criterion 10

void criterion_10() {
  Config cfg = bundled("ex_specific_oscillator.json");
  const auto& osc = std::get<OscillatorSignal>(cfg.signal);
  SimResult res = run(cfg);

  bool enough = res.switches.size() >= 3;
  bool at_m = true, widening = true;
  double prev_gap = 0.0, prev_t = 0.0;
  for (const auto& sw : res.switches) {
    int w = sw.to_star ? osc.watch_low : osc.watch_high;
    bool found = false;
    for (const auto& s : res.trajectory.samples)
      if (s.t == sw.t) {
        found = true;
        at_m = at_m && std::fabs(s.x[w] - osc.m) <= 1e-8 * std::max(1.0, osc.m);
      }
    at_m = at_m && found;
    double gap = sw.t - prev_t;
    widening = widening && gap > prev_gap;
    prev_gap = gap;
    prev_t = sw.t;
  }

  NullTeam t = team(cfg.spec);
  TeamCertificate tc = team_certificate(t, cfg.spec.C, res.trajectory.beta,
                                        res.trajectory.samples.front());
  bool under = true;
  for (const auto& s : res.trajectory.samples) {
    double lo = std::min(s.x[0], s.x[2]);
    under = under && lo <= std::exp(tc.a_star - tc.b_star * s.t) * (1.0 + 1e-9);
  }
  std::ostringstream d;
  d << res.switches.size() << " switches";
  report(10, "feedback run: >= 3 widening switches at the threshold, envelope holds",
         enough && at_m && widening && under, d.str());
}

// --------------------------------------------------------------- criterion 11

void criterion_11() {
  SystemSpec spec = testing::make_spec({"-1"}, {{"0"}});
  ResourceSignal sig = ConstantSignal{{Rational(0)}};
  double exact = std::exp(-5.0);
  std::vector<double> errs;
  for (double dt : {0.1, 0.05, 0.025}) {
    SimConfig sim;
    sim.x0 = {1.0};
    sim.horizon = 5.0;
    sim.dt = dt;
    sim.log_space = false;
    errs.push_back(
        std::fabs(simulate(spec, sig, sim).trajectory.samples.back().x[0] - exact));
  }
  double r1 = errs[0] / errs[1], r2 = errs[1] / errs[2];
  bool ok = r1 > 12.0 && r1 < 20.0 && r2 > 12.0 && r2 < 20.0;
  report(11, "fixed-step integrator shows fourth-order error decay",
         ok, fmt("ratio %.2f", r1) + ", " + fmt("%.2f", r2));
}

} // namespace

int main() {
  criterion_1();
  criterion_2();
  criterion_3();
  criterion_4();
  criterion_5();
  criterion_6();
  criterion_7();
  criterion_8();
  criterion_9();
  criterion_10();
  criterion_11();
  if (failures)
    std::printf("%d criterion(s) FAILED\n", failures);
  else
    std::printf("all 11 criteria passed\n");
  return failures ? 1 : 0;
}
