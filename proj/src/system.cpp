#include "dieout/system.hpp"

#include <cmath>

namespace dieout {

const char* error_code_name(ErrorCode c) {
  switch (c) {
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::NonFinite: return "NonFinite";
    case ErrorCode::BadSignal: return "BadSignal";
    case ErrorCode::ZeroVector: return "ZeroVector";
    case ErrorCode::Balanced: return "Balanced";
    case ErrorCode::TooLarge: return "TooLarge";
    case ErrorCode::NotEnoughKernel: return "NotEnoughKernel";
    case ErrorCode::NotClosed: return "NotClosed";
    case ErrorCode::WrongOrientation: return "WrongOrientation";
    case ErrorCode::NoPositiveEntry: return "NoPositiveEntry";
    case ErrorCode::X0OutOfRange: return "X0OutOfRange";
    case ErrorCode::AllBalanced: return "AllBalanced";
    case ErrorCode::BetaMismatch: return "BetaMismatch";
    case ErrorCode::Empty: return "Empty";
    case ErrorCode::NotSquare: return "NotSquare";
    case ErrorCode::NotTrophic: return "NotTrophic";
    case ErrorCode::BadLevels: return "BadLevels";
    case ErrorCode::NonPositiveStart: return "NonPositiveStart";
    case ErrorCode::Blowup: return "Blowup";
    case ErrorCode::ParseError: return "ParseError";
  }
  return "Unknown";
}

void validate(const SystemSpec& spec, const ResourceSignal& signal) {
  if (spec.d <= 0 || spec.dprime <= 0)
    throw Error(ErrorCode::DimensionMismatch, "d and dprime must be positive");
  if ((int)spec.C.size() != spec.d)
    throw Error(ErrorCode::DimensionMismatch, "C must have length d");
  if ((int)spec.S.size() != spec.d)
    throw Error(ErrorCode::DimensionMismatch, "S must have d rows");
  for (const auto& row : spec.S)
    if ((int)row.size() != spec.dprime)
      throw Error(ErrorCode::DimensionMismatch, "S rows must have length dprime");

  auto check_level = [&](const RatVec& z, const char* what) {
    if ((int)z.size() != spec.dprime)
      throw Error(ErrorCode::DimensionMismatch,
                  std::string(what) + " must have length dprime");
  };

  if (const auto* c = std::get_if<CoupledSignal>(&signal)) {
    if ((int)c->mapping.size() != spec.dprime)
      throw Error(ErrorCode::DimensionMismatch, "mapping must have length dprime");
    for (int j : c->mapping)
      if (j < 0 || j >= spec.d)
        throw Error(ErrorCode::BadSignal, "mapping index out of range");
  } else if (const auto* k = std::get_if<ConstantSignal>(&signal)) {
    check_level(k->z0, "Z0");
  } else if (const auto* p = std::get_if<PiecewiseSignal>(&signal)) {
    if (p->schedule.empty())
      throw Error(ErrorCode::BadSignal, "piecewise schedule is empty");
    if (p->schedule.front().start != 0.0)
      throw Error(ErrorCode::BadSignal, "first piecewise phase must start at 0");
    double prev = -1.0;
    for (const auto& ph : p->schedule) {
      if (!std::isfinite(ph.start))
        throw Error(ErrorCode::NonFinite, "piecewise switch time");
      if (ph.start <= prev)
        throw Error(ErrorCode::BadSignal, "switch times must strictly increase");
      prev = ph.start;
      check_level(ph.z, "piecewise Z");
    }
  } else if (const auto* o = std::get_if<OscillatorSignal>(&signal)) {
    check_level(o->z_star, "Zstar");
    check_level(o->z_starstar, "Zstarstar");
    if (o->watch_low < 0 || o->watch_low >= spec.d || o->watch_high < 0 ||
        o->watch_high >= spec.d)
      throw Error(ErrorCode::BadSignal, "watch index out of range");
    if (o->watch_low == o->watch_high)
      throw Error(ErrorCode::BadSignal, "watch indices must be distinct");
    if (!(o->m > 0.0) || !std::isfinite(o->m))
      throw Error(ErrorCode::BadSignal, "threshold m must be positive and finite");
  }
}

std::vector<double> eval_signal(const ResourceSignal& signal, double t,
                                const std::vector<double>& x) {
  if (const auto* c = std::get_if<CoupledSignal>(&signal)) {
    std::vector<double> z(c->mapping.size());
    for (size_t j = 0; j < c->mapping.size(); ++j) z[j] = x.at(c->mapping[j]);
    return z;
  }
  if (const auto* k = std::get_if<ConstantSignal>(&signal)) {
    std::vector<double> z(k->z0.size());
    for (size_t j = 0; j < z.size(); ++j) z[j] = to_double(k->z0[j]);
    return z;
  }
  if (const auto* p = std::get_if<PiecewiseSignal>(&signal)) {
    const RatVec* cur = &p->schedule.front().z;
    for (const auto& ph : p->schedule)
      if (ph.start <= t) cur = &ph.z;
    std::vector<double> z(cur->size());
    for (size_t j = 0; j < z.size(); ++j) z[j] = to_double((*cur)[j]);
    return z;
  }
  throw Error(ErrorCode::BadSignal,
              "oscillator level depends on trajectory history; use simulate()");
}

} // namespace dieout
