#include "dieout/report.hpp"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <nlohmann/json.hpp>
#include <sstream>

namespace dieout {

using nlohmann::json;

namespace {

std::string fmt17(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

// Canonical member entries are integers; emit JSON ints when they fit.
json entries_json(const RatVec& v) {
  json arr = json::array();
  for (const auto& q : v) {
    if (q.get_den() == 1 && q.get_num().fits_slong_p())
      arr.push_back((long)q.get_num().get_si());
    else
      arr.push_back(to_string(q));
  }
  return arr;
}

json support_json(const std::vector<int>& s) {
  json arr = json::array();
  for (int i : s) arr.push_back(i + 1);
  return arr;
}

mpz_class binomial_exact(int n, int k) {
  if (k < 0 || k > n) return 0;
  mpz_class r;
  mpz_bin_uiui(r.get_mpz_t(), (unsigned long)n, (unsigned long)k);
  return r;
}

} // namespace

std::string team_report_json(const NullTeam& t, const SystemSpec& spec,
                             const RatVec& C) {
  json j;
  j["k"] = t.k;
  j["member_count"] = (int)t.members.size();
  mpz_class generic = t.k > 0 ? binomial_exact(spec.d, spec.d - t.k + 1) : 0;
  if (generic.fits_ulong_p())
    j["generic_member_count"] = (std::uint64_t)generic.get_ui();
  else
    j["generic_member_count"] = generic.get_str();
  j["generic"] = generic == (unsigned long)t.members.size();
  j["kernel_coordinates"] = support_json(t.kernel_coordinates);
  json basis = json::array();
  for (const auto& nu : t.basis) basis.push_back(entries_json(nu.entries));
  j["basis"] = basis;
  json members = json::array();
  for (const auto& nu : t.members) {
    json m;
    m["entries"] = entries_json(nu.entries);
    m["support"] = support_json(nu.support);
    Rational rate = dot(nu.entries, C);
    m["balanced"] = rate == 0;
    if (rate == 0) {
      m["oriented_entries"] = nullptr;
      m["nu_dot_C"] = "0";
    } else {
      NullVector o = orient(nu, C);
      m["oriented_entries"] = entries_json(o.entries);
      m["nu_dot_C"] = to_string(dot(o.entries, C));
    }
    members.push_back(m);
  }
  j["members"] = members;
  return j.dump(2) + "\n";
}

std::string certificate_report_json(const TeamCertificate& tc,
                                    const MustDieReport& md,
                                    const std::string& beta_source,
                                    const DieOutReport* verification) {
  json j;
  j["k"] = tc.k;
  j["beta"] = tc.beta;
  j["beta_source"] = beta_source;
  j["a_star"] = tc.a_star;
  j["b_star"] = tc.b_star;
  json certs = json::array();
  for (const auto& c : tc.certificates) {
    json e;
    e["oriented_entries"] = entries_json(c.nu.entries);
    e["support"] = support_json(c.nu.support);
    e["nu_dot_C"] = to_string(c.nu_dot_C);
    e["a"] = c.a;
    e["b"] = c.b;
    e["b_exact"] = to_string(c.b_exact);
    e["positive_support"] = support_json(c.positive_support);
    certs.push_back(e);
  }
  j["certificates"] = certs;
  json balanced = json::array();
  for (const auto& nu : tc.balanced) balanced.push_back(entries_json(nu.entries));
  j["balanced"] = balanced;

  json claims = json::array();
  for (const auto& c : md.claims) {
    json e;
    e["coordinates"] = support_json(c.positive_support);
    e["definite"] = c.definite;
    claims.push_back(e);
  }
  j["must_die"] = {{"definite", support_json(md.definite_coordinates)},
                   {"claims", claims}};

  if (verification) {
    j["min_census"] = verification->min_census;
    j["pass"] = verification->pass;
    j["samples"] = (int)verification->census.size();
    if (verification->first_failure_t)
      j["first_failure_t"] = *verification->first_failure_t;
    else
      j["first_failure_t"] = nullptr;
  }
  return j.dump(2) + "\n";
}

std::string trophic_report_json(const TrophicReport& rep,
                                const TrappingRegion* region) {
  json j;
  j["pass"] = rep.pass;
  j["t1_violations"] = support_json(rep.t1_violations);
  json t2 = json::array();
  for (auto [n, m] : rep.t2_violations) t2.push_back({n + 1, m + 1});
  j["t2_violations"] = t2;
  if (region) {
    j["epsilon"] = to_string(region->epsilon);
    j["A"] = to_string(region->A);
    j["B"] = to_string(region->B);
    j["lambda"] = to_string(region->lambda);
  }
  return j.dump(2) + "\n";
}

void write_trajectory_csv(const std::string& path, const SimResult& sim) {
  std::ofstream out(path);
  if (!out) throw Error(ErrorCode::ParseError, "cannot write " + path);
  const auto& samples = sim.trajectory.samples;
  if (samples.empty()) throw Error(ErrorCode::Empty, "trajectory");
  const size_t d = samples[0].x.size();
  const size_t dp = sim.sample_z.empty() ? 0 : sim.sample_z[0].size();
  out << "t";
  for (size_t i = 1; i <= d; ++i) out << ",x" << i;
  for (size_t j = 1; j <= dp; ++j) out << ",z" << j;
  out << "\n";
  for (size_t s = 0; s < samples.size(); ++s) {
    out << fmt17(samples[s].t);
    for (double v : samples[s].x) out << "," << fmt17(v);
    if (dp) for (double v : sim.sample_z[s]) out << "," << fmt17(v);
    out << "\n";
  }
}

void write_switch_csv(const std::string& path,
                      const std::vector<SwitchEvent>& events) {
  std::ofstream out(path);
  if (!out) throw Error(ErrorCode::ParseError, "cannot write " + path);
  out << "t_switch,level\n";
  for (const auto& e : events)
    out << fmt17(e.t) << "," << (e.to_star ? "star" : "starstar") << "\n";
}

Trajectory read_trajectory_csv(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::ParseError, "cannot open " + path);
  std::string line;
  if (!std::getline(in, line))
    throw Error(ErrorCode::ParseError, "empty trajectory file");
  std::stringstream hs(line);
  std::string col;
  int d = 0;
  bool first = true;
  while (std::getline(hs, col, ',')) {
    if (first) {
      if (col != "t") throw Error(ErrorCode::ParseError, "first column must be t");
      first = false;
    } else if (col.size() > 1 && col[0] == 'x') {
      ++d;
    }
  }
  if (d == 0) throw Error(ErrorCode::ParseError, "no x columns");
  Trajectory traj;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    std::stringstream ls(line);
    State s;
    std::string cell;
    if (!std::getline(ls, cell, ','))
      throw Error(ErrorCode::ParseError, "short row");
    s.t = std::stod(cell);
    for (int i = 0; i < d; ++i) {
      if (!std::getline(ls, cell, ','))
        throw Error(ErrorCode::ParseError, "short row");
      s.x.push_back(std::stod(cell));
    }
    traj.samples.push_back(std::move(s));
  }
  if (traj.samples.empty()) throw Error(ErrorCode::Empty, "trajectory file");
  traj.beta = trajectory_bound(traj);
  return traj;
}

void write_halfplane_files(const SystemSpec& spec, int grid_n,
                           const Rational& zmax, const std::string& csv_path,
                           const std::string& vertices_path,
                           std::vector<std::pair<Rational, Rational>>* vertices_out) {
  if (spec.dprime != 2)
    throw Error(ErrorCode::NotSquare, "half-plane analysis needs dprime == 2");
  if (grid_n < 2 || zmax <= 0)
    throw Error(ErrorCode::DimensionMismatch, "need grid >= 2 and zmax > 0");

  std::ofstream out(csv_path);
  if (!out) throw Error(ErrorCode::ParseError, "cannot write " + csv_path);
  out << "z1,z2";
  for (int i = 1; i <= spec.d; ++i) out << ",sign_" << i;
  out << "\n";
  for (int a = 0; a < grid_n; ++a) {
    Rational z1 = zmax * a / (grid_n - 1);
    for (int b = 0; b < grid_n; ++b) {
      Rational z2 = zmax * b / (grid_n - 1);
      RatVec rates = percapita_rates(spec, {z1, z2});
      out << fmt17(to_double(z1)) << "," << fmt17(to_double(z2));
      for (const auto& r : rates) out << "," << sign(r);
      out << "\n";
    }
  }

  // Vertices of G = { z >= 0 : C + S z <= 0 entrywise }: feasible
  // intersections of any two constraint boundaries (rows or axes).
  struct Line { Rational a, b, c; }; // a z1 + b z2 + c = 0
  std::vector<Line> lines;
  for (int i = 0; i < spec.d; ++i)
    lines.push_back({spec.S[i][0], spec.S[i][1], spec.C[i]});
  lines.push_back({1, 0, 0});
  lines.push_back({0, 1, 0});

  std::vector<std::pair<Rational, Rational>> verts;
  for (size_t i = 0; i < lines.size(); ++i) {
    for (size_t j = i + 1; j < lines.size(); ++j) {
      Rational det = lines[i].a * lines[j].b - lines[j].a * lines[i].b;
      if (det == 0) continue;
      Rational z1 = (lines[i].b * lines[j].c - lines[j].b * lines[i].c) / det;
      Rational z2 = (lines[j].a * lines[i].c - lines[i].a * lines[j].c) / det;
      if (z1 < 0 || z2 < 0) continue;
      bool feasible = true;
      for (int r = 0; r < spec.d && feasible; ++r)
        if (spec.C[r] + spec.S[r][0] * z1 + spec.S[r][1] * z2 > 0)
          feasible = false;
      if (!feasible) continue;
      if (std::find(verts.begin(), verts.end(), std::make_pair(z1, z2)) ==
          verts.end())
        verts.emplace_back(z1, z2);
    }
  }
  std::sort(verts.begin(), verts.end(), [](const auto& p, const auto& q) {
    if (p.first != q.first) return p.first < q.first;
    return p.second < q.second;
  });

  std::ofstream vout(vertices_path);
  if (!vout) throw Error(ErrorCode::ParseError, "cannot write " + vertices_path);
  vout << "z1,z2,z1_exact,z2_exact\n";
  for (const auto& [z1, z2] : verts)
    vout << fmt17(to_double(z1)) << "," << fmt17(to_double(z2)) << ","
         << to_string(z1) << "," << to_string(z2) << "\n";
  if (vertices_out) *vertices_out = verts;
}

} // namespace dieout
