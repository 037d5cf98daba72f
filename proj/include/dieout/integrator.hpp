#ifndef DIEOUT_INTEGRATOR_HPP
#define DIEOUT_INTEGRATOR_HPP

#include "dieout/system.hpp"

#include <string>
#include <utility>

namespace dieout {

struct SimConfig {
  std::vector<double> x0;
  double horizon = 0.0;
  double dt = 0.0;
  bool log_space = true;       // integrate u = ln x; positivity for free
  int sample_stride = 1;       // keep every n-th step (plus t=0, switches, end)
  double extinction_floor = 1e-300; // linear-space guard only
  double blowup_threshold = 1e12;
};

struct SwitchEvent {
  double t = 0.0;
  bool to_star = false; // level in force after the switch
};

struct SimResult {
  Trajectory trajectory;
  std::vector<SwitchEvent> switches;
  std::vector<std::vector<double>> sample_z; // resource values per sample
};

/** C + S Z, exact. */
RatVec percapita_rates(const SystemSpec& spec, const RatVec& Z);
std::vector<double> percapita_rates(const SystemSpec& spec,
                                    const std::vector<double>& Z);

/** Fixed-step classical RK4. Steps split exactly at piecewise switch times;
 * oscillator threshold crossings are located to 1e-10 in time and become
 * step boundaries. Throws Blowup (with first-exit time), NonPositiveStart. */
SimResult simulate(const SystemSpec& spec, const ResourceSignal& signal,
                   const SimConfig& cfg);

/** Builds the two-level feedback signal and sanity-checks the levels:
 * watched coordinates need strictly opposite rate signs across levels
 * (BadLevels); wrong switching direction or drifting persisting coordinates
 * only produce warnings. */
std::pair<OscillatorSignal, std::vector<std::string>> make_oscillator(
    const SystemSpec& spec, const RatVec& z_star, const RatVec& z_starstar,
    int watch_low, int watch_high, double m);

/** Max coordinate over all samples. Throws Empty. */
double trajectory_bound(const Trajectory& traj);

} // namespace dieout

#endif
