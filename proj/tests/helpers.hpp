#ifndef DIEOUT_TESTS_HELPERS_HPP
#define DIEOUT_TESTS_HELPERS_HPP

#include "dieout/config.hpp"
#include "dieout/system.hpp"

#include <random>
#include <string>
#include <vector>

namespace testing {

/** mpq_class(p, q) does not reduce; GMP arithmetic assumes canonical form. */
inline dieout::Rational frac(long p, long q) {
  dieout::Rational r(p, q);
  r.canonicalize();
  return r;
}

inline dieout::SystemSpec make_spec(const std::vector<std::string>& C,
                                    const std::vector<std::vector<std::string>>& S) {
  dieout::SystemSpec spec;
  spec.d = (int)C.size();
  spec.dprime = S.empty() ? 0 : (int)S[0].size();
  for (const auto& c : C) spec.C.push_back(dieout::parse_rational(c));
  for (const auto& row : S) {
    dieout::RatVec r;
    for (const auto& s : row) r.push_back(dieout::parse_rational(s));
    spec.S.push_back(r);
  }
  return spec;
}

/** Small random rationals with a deliberate fraction of exact zeros so
 * random systems exercise degenerate supports too. */
inline dieout::SystemSpec random_spec(int d, int dprime, std::mt19937& rng,
                                      double zero_prob = 0.2) {
  std::uniform_int_distribution<int> num(-6, 6);
  std::uniform_int_distribution<int> den(1, 6);
  std::uniform_real_distribution<double> unif(0.0, 1.0);
  dieout::SystemSpec spec;
  spec.d = d;
  spec.dprime = dprime;
  for (int i = 0; i < d; ++i) {
    spec.C.push_back(frac(num(rng), den(rng)));
    dieout::RatVec row;
    for (int j = 0; j < dprime; ++j) {
      if (unif(rng) < zero_prob)
        row.push_back(dieout::Rational(0));
      else
        row.push_back(frac(num(rng), den(rng)));
    }
    spec.S.push_back(row);
  }
  return spec;
}

inline std::string config_path(const std::string& name) {
  return std::string(DIEOUT_CONFIG_DIR) + "/" + name;
}

} // namespace testing

#endif
