#ifndef DIEOUT_SYSTEM_HPP
#define DIEOUT_SYSTEM_HPP

#include "dieout/errors.hpp"
#include "dieout/rational.hpp"

#include <optional>
#include <variant>
#include <vector>

namespace dieout {

/** Per-capita model x_i' = x_i (c_i + sum_j s_ij z_j). S is d x dprime. */
struct SystemSpec {
  int d = 0;
  int dprime = 0;
  RatVec C;
  RatMat S;
};

/** z(t) = x(t) restricted to `mapping` (0-based species indices). The
 * self-coupled case mapping = (0..d-1), dprime = d gives the plain LV system. */
struct CoupledSignal {
  std::vector<int> mapping;
};

struct ConstantSignal {
  RatVec z0;
};

/** z(t) = value of the last phase with start <= t. First start must be 0,
 * starts strictly increasing. */
struct PiecewiseSignal {
  struct Phase {
    double start;
    RatVec z;
  };
  std::vector<Phase> schedule;
};

/** Two-level feedback switch. Starts at z_starstar; flips to z_star when
 * x[watch_low] rises to m, back when x[watch_high] rises to m. */
struct OscillatorSignal {
  RatVec z_star;
  RatVec z_starstar;
  int watch_low = 0;  // 0-based
  int watch_high = 0; // 0-based
  double m = 0.0;
};

using ResourceSignal =
    std::variant<CoupledSignal, ConstantSignal, PiecewiseSignal, OscillatorSignal>;

struct State {
  double t = 0.0;
  std::vector<double> x;
};

struct Trajectory {
  std::vector<State> samples;
  double beta = 0.0; // max coordinate over all retained samples
};

/** Checks dimensions and signal well-formedness. Throws Error with
 * DimensionMismatch / NonFinite / BadSignal. */
void validate(const SystemSpec& spec, const ResourceSignal& signal);

/** z(t) for signals that do not need simulation history. Coupled needs the
 * state; Oscillator is resolved only inside simulate() and throws BadSignal. */
std::vector<double> eval_signal(const ResourceSignal& signal, double t,
                                const std::vector<double>& x);

} // namespace dieout

#endif
