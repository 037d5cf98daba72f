#ifndef DIEOUT_REPORT_HPP
#define DIEOUT_REPORT_HPP

#include "dieout/certificates.hpp"
#include "dieout/integrator.hpp"
#include "dieout/nullspace.hpp"
#include "dieout/trophic.hpp"

#include <optional>
#include <string>

namespace dieout {

/** All external indices are 1-based; rationals travel as "p/q" strings. */
std::string team_report_json(const NullTeam& t, const SystemSpec& spec,
                             const RatVec& C);

std::string certificate_report_json(const TeamCertificate& tc,
                                    const MustDieReport& md,
                                    const std::string& beta_source,
                                    const DieOutReport* verification = nullptr);

std::string trophic_report_json(const TrophicReport& rep,
                                const TrappingRegion* region);

/** Columns t,x1..xd[,z1..zdprime], one row per retained sample, values
 * printed with 17 significant digits. */
void write_trajectory_csv(const std::string& path, const SimResult& sim);

/** Columns t_switch,level with level in {star, starstar}. */
void write_switch_csv(const std::string& path,
                      const std::vector<SwitchEvent>& events);

/** Reads a trajectory written by write_trajectory_csv (z columns ignored). */
Trajectory read_trajectory_csv(const std::string& path);

/** Exact sign classification of the per-capita rates over a grid of resource
 * values, plus the vertex list of the region where every rate is <= 0.
 * Needs dprime == 2 (NotSquare). */
void write_halfplane_files(const SystemSpec& spec, int grid_n,
                           const Rational& zmax, const std::string& csv_path,
                           const std::string& vertices_path,
                           std::vector<std::pair<Rational, Rational>>* vertices_out = nullptr);

} // namespace dieout

#endif
