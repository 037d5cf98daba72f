#include "dieout/config.hpp"
#include "dieout/report.hpp"

#include <CLI11.hpp>
#include <filesystem>
#include <fstream>
#include <iostream>

namespace fs = std::filesystem;
using namespace dieout;

namespace {

constexpr int kExitParse = 2;
constexpr int kExitTooLarge = 3;
constexpr int kExitAllBalanced = 4;
constexpr int kExitTrivialKernel = 5;
constexpr int kExitCensusFail = 6;
constexpr int kExitBetaMismatch = 7;
constexpr int kExitNotPlanar = 8;
constexpr int kExitBlowup = 9;

int exit_code_for(const Error& e, bool halfplanes = false) {
  switch (e.code) {
    case ErrorCode::TooLarge: return kExitTooLarge;
    case ErrorCode::AllBalanced: return kExitAllBalanced;
    case ErrorCode::BetaMismatch: return kExitBetaMismatch;
    case ErrorCode::Blowup: return kExitBlowup;
    case ErrorCode::NotSquare: return halfplanes ? kExitNotPlanar : kExitParse;
    default: return kExitParse;
  }
}

void write_file(const fs::path& p, const std::string& text) {
  std::ofstream out(p);
  if (!out) throw Error(ErrorCode::ParseError, "cannot write " + p.string());
  out << text;
  std::cout << "wrote " << p.string() << "\n";
}

std::string coord_list(const std::vector<int>& idx) {
  std::string s;
  for (size_t i = 0; i < idx.size(); ++i) {
    if (i) s += ", ";
    s += "x" + std::to_string(idx[i] + 1);
  }
  return s;
}

void print_claims(const MustDieReport& md) {
  for (const auto& c : md.claims) {
    if (c.definite)
      std::cout << "  x" << c.positive_support[0] + 1 << " dies out\n";
    else
      std::cout << "  at least one of {" << coord_list(c.positive_support)
                << "} dies out\n";
  }
  if (!md.balanced.empty())
    std::cout << "  " << md.balanced.size()
              << " balanced member(s): no decay claim\n";
}

struct BetaChoice {
  double value;
  std::string source;
};

BetaChoice resolve_beta(const Config& cfg, const std::optional<double>& flag,
                        bool from_trap, const Trajectory* traj) {
  if (flag) return {*flag, "flag"};
  if (from_trap) {
    TrappingRegion region = trapping_region(cfg.spec);
    Rational bound =
        region.lambda / pow_rational(region.epsilon, (unsigned long)cfg.spec.d);
    State x0{0.0, cfg.x0};
    if (v_value(region, x0) > to_double(region.lambda))
      std::cout << "warning: x0 starts outside the trapping region; the "
                   "trap-derived bound only holds after entry\n";
    return {to_double(bound), "trap"};
  }
  if (cfg.beta) return {*cfg.beta, "config"};
  if (traj) return {traj->beta, "trajectory"};
  throw Error(ErrorCode::ParseError,
              "no bound available: pass --beta, set beta in the config, or "
              "use --from-trap");
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"Extinction certificates for generalized Lotka-Volterra systems"};
  app.require_subcommand(1);

  std::string config_path, out_dir = "out", traj_path;
  std::optional<double> beta_flag;
  std::optional<int> max_support;
  std::uint64_t cap = 1000000;
  bool serial = false, from_trap = false, linear_space = false;
  int stride = 1, grid = 41;
  std::string zmax = "1";
  std::optional<double> dt_override, horizon_override;

  auto add_common = [&](CLI::App* cmd) {
    cmd->add_option("--config", config_path, "Problem description (JSON)")
        ->required();
    cmd->add_option("--out", out_dir, "Output directory (default: out)");
  };

  auto* c_team = app.add_subcommand("team", "Enumerate minimal-support null vectors");
  add_common(c_team);
  c_team->add_option("--max-support", max_support, "Support size cutoff");
  c_team->add_option("--cap", cap, "Candidate subset cap (default 1e6)");
  c_team->add_flag("--serial", serial, "Disable the parallel scan");

  auto* c_cert = app.add_subcommand("certify", "Compute die-out certificates");
  add_common(c_cert);
  c_cert->add_option("--beta", beta_flag, "Trajectory bound");
  c_cert->add_flag("--from-trap", from_trap, "Derive the bound from the trapping region");
  c_cert->add_option("--max-support", max_support, "Support size cutoff");
  c_cert->add_flag("--serial", serial, "Disable the parallel scan");

  auto* c_sim = app.add_subcommand("simulate", "Integrate the system");
  add_common(c_sim);
  c_sim->add_option("--stride", stride, "Keep every n-th sample");
  c_sim->add_flag("--linear-space", linear_space, "Integrate densities directly");
  c_sim->add_option("--dt", dt_override, "Override config dt");
  c_sim->add_option("--horizon", horizon_override, "Override config horizon");

  auto* c_verify = app.add_subcommand("verify", "Check a trajectory against the envelope");
  add_common(c_verify);
  c_verify->add_option("--traj", traj_path, "Trajectory CSV from simulate")->required();
  c_verify->add_option("--beta", beta_flag, "Trajectory bound");

  auto* c_trophic = app.add_subcommand("check-trophic", "Sign conditions and trapping region");
  add_common(c_trophic);

  auto* c_half = app.add_subcommand("halfplanes", "Per-capita sign chart over resource space");
  add_common(c_half);
  c_half->add_option("--grid", grid, "Grid points per axis (default 41)");
  c_half->add_option("--zmax", zmax, "Grid extent as a rational (default 1)");

  CLI11_PARSE(app, argc, argv);
  bool is_halfplanes = c_half->parsed();

  try {
    Config cfg = load_config(config_path);
    fs::create_directories(out_dir);
    fs::path out(out_dir);

    TeamOptions topts;
    topts.max_support = max_support;
    topts.subset_cap = cap;
    topts.parallel = !serial;

    if (c_team->parsed()) {
      NullTeam t = team(cfg.spec, topts);
      write_file(out / "team.json", team_report_json(t, cfg.spec, cfg.spec.C));
      std::cout << "kernel dimension k = " << t.k << ", members = "
                << t.members.size() << "\n";
      if (t.k > 0) {
        MustDieReport md = must_die_report(t, cfg.spec.C);
        print_claims(md);
      }
      return 0;
    }

    if (c_cert->parsed()) {
      NullTeam t = team(cfg.spec, topts);
      if (t.k == 0) {
        std::cout << "kernel is trivial\n";
        return kExitTrivialKernel;
      }
      BetaChoice bc = resolve_beta(cfg, beta_flag, from_trap, nullptr);
      State x0{0.0, cfg.x0};
      TeamCertificate tc = team_certificate(t, cfg.spec.C, bc.value, x0);
      MustDieReport md = must_die_report(t, cfg.spec.C);
      write_file(out / "certificates.json",
                 certificate_report_json(tc, md, bc.source));
      std::cout << "beta = " << bc.value << " (" << bc.source << ")\n"
                << "a* = " << tc.a_star << ", b* = " << tc.b_star
                << ", k = " << tc.k << "\n";
      print_claims(md);
      return 0;
    }

    if (c_sim->parsed()) {
      SimConfig sc;
      sc.x0 = cfg.x0;
      sc.horizon = horizon_override.value_or(cfg.horizon);
      sc.dt = dt_override.value_or(cfg.dt);
      sc.log_space = !linear_space;
      sc.sample_stride = stride;
      SimResult sim = simulate(cfg.spec, cfg.signal, sc);
      write_trajectory_csv((out / "trajectory.csv").string(), sim);
      std::cout << "wrote " << (out / "trajectory.csv").string() << "\n";
      if (std::holds_alternative<OscillatorSignal>(cfg.signal)) {
        write_switch_csv((out / "switches.csv").string(), sim.switches);
        std::cout << "wrote " << (out / "switches.csv").string() << " ("
                  << sim.switches.size() << " switches)\n";
      }
      const State& last = sim.trajectory.samples.back();
      std::cout << "samples = " << sim.trajectory.samples.size()
                << ", bound = " << sim.trajectory.beta << ", final t = "
                << last.t << "\n";
      return 0;
    }

    if (c_verify->parsed()) {
      Trajectory traj = read_trajectory_csv(traj_path);
      NullTeam t = team(cfg.spec, topts);
      if (t.k == 0) {
        std::cout << "kernel is trivial\n";
        return kExitTrivialKernel;
      }
      BetaChoice bc = resolve_beta(cfg, beta_flag, false, &traj);
      TeamCertificate tc =
          team_certificate(t, cfg.spec.C, bc.value, traj.samples.front());
      MustDieReport md = must_die_report(t, cfg.spec.C);
      DieOutReport rep = verify_dieout(traj, tc);
      write_file(out / "dieout_report.json",
                 certificate_report_json(tc, md, bc.source, &rep));
      std::cout << "min census = " << rep.min_census << " (k = " << tc.k
                << "), " << (rep.pass ? "pass" : "FAIL") << "\n";
      return rep.pass ? 0 : kExitCensusFail;
    }

    if (c_trophic->parsed()) {
      TrophicReport rep = check_trophic(cfg.spec);
      std::optional<TrappingRegion> region;
      if (rep.pass) region = trapping_region(cfg.spec);
      write_file(out / "trophic.json",
                 trophic_report_json(rep, region ? &*region : nullptr));
      if (rep.pass) {
        std::cout << "trophic conditions hold; epsilon = "
                  << to_string(region->epsilon) << ", A = "
                  << to_string(region->A) << ", B = " << to_string(region->B)
                  << ", lambda = " << to_string(region->lambda) << "\n";
      } else {
        std::cout << "trophic conditions fail: " << rep.t1_violations.size()
                  << " self-limitation, " << rep.t2_violations.size()
                  << " ordering violation(s)\n";
      }
      return 0;
    }

    if (c_half->parsed()) {
      std::vector<std::pair<Rational, Rational>> verts;
      write_halfplane_files(cfg.spec, grid, parse_rational(zmax),
                            (out / "halfplanes.csv").string(),
                            (out / "halfplane_vertices.csv").string(), &verts);
      std::cout << "wrote " << (out / "halfplanes.csv").string() << "\n"
                << "wrote " << (out / "halfplane_vertices.csv").string() << "\n"
                << "feasible-region vertices:\n";
      for (const auto& [z1, z2] : verts)
        std::cout << "  (" << to_string(z1) << ", " << to_string(z2) << ")\n";
      return 0;
    }
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_code_for(e, is_halfplanes);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 1;
}
