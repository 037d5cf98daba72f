// Compares the serial and OpenMP support-scan kernels (team enumeration and
// envelope census) on random systems of growing size.

#include "dieout/certificates.hpp"
#include "dieout/integrator.hpp"
#include "dieout/nullspace.hpp"

#include <chrono>
#include <cstdio>
#include <random>

using namespace dieout;

namespace {

Rational frac(int p, int q) {
  Rational r(p, q);
  r.canonicalize();
  return r;
}

SystemSpec random_spec(int d, int dprime, std::mt19937& rng) {
  std::uniform_int_distribution<int> num(-9, 9);
  std::uniform_int_distribution<int> den(1, 9);
  SystemSpec spec;
  spec.d = d;
  spec.dprime = dprime;
  for (int i = 0; i < d; ++i) {
    spec.C.push_back(frac(num(rng), den(rng)));
    RatVec row;
    for (int j = 0; j < dprime; ++j) row.push_back(frac(num(rng), den(rng)));
    spec.S.push_back(row);
  }
  return spec;
}

template <typename F>
double time_ms(F&& f) {
  auto t0 = std::chrono::steady_clock::now();
  f();
  auto t1 = std::chrono::steady_clock::now();
  return std::chrono::duration<double, std::milli>(t1 - t0).count();
}

} // namespace

int main() {
  std::mt19937 rng(12345);

  std::printf("team enumeration: serial vs parallel\n");
  std::printf("%4s %7s %9s %12s %12s %8s\n", "d", "dprime", "members",
              "serial[ms]", "parallel[ms]", "speedup");
  for (int d : {8, 12, 14, 16}) {
    int dprime = d / 2;
    SystemSpec spec = random_spec(d, dprime, rng);
    TeamOptions serial_opts, par_opts;
    serial_opts.parallel = false;
    serial_opts.subset_cap = par_opts.subset_cap = 10000000;
    NullTeam ts, tp;
    double ms_serial = time_ms([&] { ts = team(spec, serial_opts); });
    double ms_par = time_ms([&] { tp = team(spec, par_opts); });
    if (ts.members.size() != tp.members.size()) {
      std::printf("MISMATCH serial=%zu parallel=%zu\n", ts.members.size(),
                  tp.members.size());
      return 1;
    }
    std::printf("%4d %7d %9zu %12.2f %12.2f %8.2f\n", d, dprime,
                ts.members.size(), ms_serial, ms_par, ms_serial / ms_par);
  }

  std::printf("\nenvelope census: serial vs parallel\n");
  std::printf("%9s %12s %12s %8s\n", "samples", "serial[ms]", "parallel[ms]",
              "speedup");
  SystemSpec spec = random_spec(6, 3, rng);
  NullTeam t = team(spec);
  for (int n : {100000, 1000000}) {
    Trajectory traj;
    traj.samples.reserve(n);
    std::uniform_real_distribution<double> unif(0.0, 1.0);
    for (int s = 0; s < n; ++s) {
      State st;
      st.t = 0.01 * s;
      for (int i = 0; i < spec.d; ++i)
        st.x.push_back(std::exp(-0.05 * st.t) * (0.5 + unif(rng)));
      traj.samples.push_back(std::move(st));
    }
    traj.beta = trajectory_bound(traj);
    TeamCertificate tc;
    try {
      tc = team_certificate(t, spec.C, traj.beta, traj.samples.front());
    } catch (const Error&) {
      tc.k = t.k; // balanced random draw: fall back to a bare census envelope
      tc.beta = traj.beta;
      tc.a_star = 1.0;
      tc.b_star = 0.01;
    }
    DieOutReport rs, rp;
    double ms_serial = time_ms([&] { rs = verify_dieout(traj, tc, false); });
    double ms_par = time_ms([&] { rp = verify_dieout(traj, tc, true); });
    if (rs.min_census != rp.min_census) {
      std::printf("MISMATCH\n");
      return 1;
    }
    std::printf("%9d %12.2f %12.2f %8.2f\n", n, ms_serial, ms_par,
                ms_serial / ms_par);
  }
  return 0;
}
