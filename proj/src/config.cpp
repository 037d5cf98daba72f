#include "dieout/config.hpp"

#include <cmath>
#include <fstream>
#include <nlohmann/json.hpp>

namespace dieout {

using nlohmann::json;

namespace {

Rational rat_field(const json& j, const char* what) {
  if (!j.is_string())
    throw Error(ErrorCode::ParseError,
                std::string(what) + " must be a rational string");
  try {
    return parse_rational(j.get<std::string>());
  } catch (const std::invalid_argument& e) {
    throw Error(ErrorCode::ParseError, std::string(what) + ": " + e.what());
  }
}

RatVec rat_vector(const json& j, const char* what) {
  if (!j.is_array())
    throw Error(ErrorCode::ParseError, std::string(what) + " must be an array");
  RatVec v;
  v.reserve(j.size());
  for (const auto& e : j) v.push_back(rat_field(e, what));
  return v;
}

double finite_number(const json& j, const char* what) {
  if (!j.is_number())
    throw Error(ErrorCode::ParseError, std::string(what) + " must be a number");
  double v = j.get<double>();
  if (!std::isfinite(v)) throw Error(ErrorCode::NonFinite, what);
  return v;
}

ResourceSignal parse_signal(const json& j) {
  if (!j.is_object() || !j.contains("type"))
    throw Error(ErrorCode::ParseError, "signal must be an object with a type");
  std::string type = j.at("type").get<std::string>();
  if (type == "coupled") {
    CoupledSignal s;
    for (const auto& e : j.at("mapping")) {
      if (!e.is_number_integer())
        throw Error(ErrorCode::ParseError, "mapping entries must be integers");
      s.mapping.push_back(e.get<int>() - 1); // external indices are 1-based
    }
    return s;
  }
  if (type == "constant") return ConstantSignal{rat_vector(j.at("Z0"), "Z0")};
  if (type == "piecewise") {
    PiecewiseSignal s;
    for (const auto& e : j.at("schedule"))
      s.schedule.push_back({finite_number(e.at("t"), "schedule.t"),
                            rat_vector(e.at("Z"), "schedule.Z")});
    return s;
  }
  if (type == "oscillator") {
    OscillatorSignal s;
    s.z_star = rat_vector(j.at("Zstar"), "Zstar");
    s.z_starstar = rat_vector(j.at("Zstarstar"), "Zstarstar");
    s.watch_low = j.at("watch_low").get<int>() - 1;
    s.watch_high = j.at("watch_high").get<int>() - 1;
    s.m = finite_number(j.at("m"), "m");
    return s;
  }
  throw Error(ErrorCode::ParseError, "unknown signal type: " + type);
}

json signal_to_json(const ResourceSignal& signal) {
  json j;
  if (const auto* c = std::get_if<CoupledSignal>(&signal)) {
    j["type"] = "coupled";
    json m = json::array();
    for (int i : c->mapping) m.push_back(i + 1);
    j["mapping"] = m;
  } else if (const auto* k = std::get_if<ConstantSignal>(&signal)) {
    j["type"] = "constant";
    json z = json::array();
    for (const auto& q : k->z0) z.push_back(to_string(q));
    j["Z0"] = z;
  } else if (const auto* p = std::get_if<PiecewiseSignal>(&signal)) {
    j["type"] = "piecewise";
    json sched = json::array();
    for (const auto& ph : p->schedule) {
      json z = json::array();
      for (const auto& q : ph.z) z.push_back(to_string(q));
      sched.push_back({{"t", ph.start}, {"Z", z}});
    }
    j["schedule"] = sched;
  } else if (const auto* o = std::get_if<OscillatorSignal>(&signal)) {
    j["type"] = "oscillator";
    json zs = json::array(), zss = json::array();
    for (const auto& q : o->z_star) zs.push_back(to_string(q));
    for (const auto& q : o->z_starstar) zss.push_back(to_string(q));
    j["Zstar"] = zs;
    j["Zstarstar"] = zss;
    j["watch_low"] = o->watch_low + 1;
    j["watch_high"] = o->watch_high + 1;
    j["m"] = o->m;
  }
  return j;
}

} // namespace

Config parse_config(const std::string& json_text) {
  json j;
  try {
    j = json::parse(json_text);
  } catch (const json::exception& e) {
    throw Error(ErrorCode::ParseError, e.what());
  }
  try {
    Config cfg;
    cfg.spec.d = j.at("d").get<int>();
    cfg.spec.dprime = j.at("dprime").get<int>();
    cfg.spec.C = rat_vector(j.at("C"), "C");
    if (!j.at("S").is_array())
      throw Error(ErrorCode::ParseError, "S must be an array of rows");
    for (const auto& row : j.at("S")) cfg.spec.S.push_back(rat_vector(row, "S"));
    cfg.signal = parse_signal(j.at("signal"));
    for (const auto& e : j.at("x0")) cfg.x0.push_back(finite_number(e, "x0"));
    cfg.horizon = finite_number(j.at("horizon"), "horizon");
    cfg.dt = finite_number(j.at("dt"), "dt");
    if (j.contains("beta")) cfg.beta = finite_number(j.at("beta"), "beta");

    validate(cfg.spec, cfg.signal);
    if ((int)cfg.x0.size() != cfg.spec.d)
      throw Error(ErrorCode::DimensionMismatch, "x0 must have length d");
    for (double v : cfg.x0)
      if (!(v > 0.0))
        throw Error(ErrorCode::NonPositiveStart, "x0 entries must be positive");
    if (!(cfg.dt > 0.0) || !(cfg.horizon >= 0.0))
      throw Error(ErrorCode::ParseError, "need dt > 0 and horizon >= 0");
    return cfg;
  } catch (const json::exception& e) {
    throw Error(ErrorCode::ParseError, e.what());
  }
}

Config load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::ParseError, "cannot open " + path);
  std::string text((std::istreambuf_iterator<char>(in)),
                   std::istreambuf_iterator<char>());
  return parse_config(text);
}

std::string config_to_json(const Config& cfg) {
  json j;
  j["d"] = cfg.spec.d;
  j["dprime"] = cfg.spec.dprime;
  json c = json::array();
  for (const auto& q : cfg.spec.C) c.push_back(to_string(q));
  j["C"] = c;
  json s = json::array();
  for (const auto& row : cfg.spec.S) {
    json r = json::array();
    for (const auto& q : row) r.push_back(to_string(q));
    s.push_back(r);
  }
  j["S"] = s;
  j["signal"] = signal_to_json(cfg.signal);
  j["x0"] = cfg.x0;
  j["horizon"] = cfg.horizon;
  j["dt"] = cfg.dt;
  if (cfg.beta) j["beta"] = *cfg.beta;
  return j.dump(2) + "\n";
}

void save_config(const Config& cfg, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw Error(ErrorCode::ParseError, "cannot write " + path);
  out << config_to_json(cfg);
}

} // namespace dieout
