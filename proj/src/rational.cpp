#include "dieout/rational.hpp"

#include <cstdlib>
#include <stdexcept>

namespace dieout {

Rational parse_rational(const std::string& s) {
  if (s.empty()) throw std::invalid_argument("empty rational");
  // mpq_set_str accepts whitespace and hex-ish forms we do not want; be strict.
  auto digits_ok = [](const std::string& t) {
    if (t.empty()) return false;
    size_t i = (t[0] == '-' || t[0] == '+') ? 1 : 0;
    if (i == t.size()) return false;
    for (; i < t.size(); ++i)
      if (t[i] < '0' || t[i] > '9') return false;
    return true;
  };
  auto slash = s.find('/');
  if (slash == std::string::npos) {
    if (!digits_ok(s)) throw std::invalid_argument("bad rational: " + s);
  } else {
    std::string num = s.substr(0, slash), den = s.substr(slash + 1);
    if (!digits_ok(num) || !digits_ok(den) || den[0] == '-' || den[0] == '+')
      throw std::invalid_argument("bad rational: " + s);
  }
  mpq_class q;
  if (mpq_set_str(q.get_mpq_t(), s.c_str(), 10) != 0)
    throw std::invalid_argument("bad rational: " + s);
  if (q.get_den() == 0) throw std::invalid_argument("zero denominator: " + s);
  q.canonicalize();
  return q;
}

std::string to_string(const Rational& q) { return q.get_str(); }

double to_double(const Rational& q) { return q.get_d(); }

Rational pow_rational(const Rational& q, unsigned long e) {
  Rational r;
  mpz_pow_ui(r.get_num_mpz_t(), q.get_num_mpz_t(), e);
  mpz_pow_ui(r.get_den_mpz_t(), q.get_den_mpz_t(), e);
  r.canonicalize();
  return r;
}

int sign(const Rational& q) { return mpq_sgn(q.get_mpq_t()); }

Rational dot(const RatVec& a, const RatVec& b) {
  if (a.size() != b.size()) throw std::invalid_argument("dot: length mismatch");
  Rational s = 0;
  for (size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

RatVec canonical_integer_direction(const RatVec& v) {
  mpz_class den_lcm = 1;
  for (const auto& q : v)
    if (q != 0) mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), q.get_den_mpz_t());
  std::vector<mpz_class> w(v.size());
  mpz_class g = 0;
  for (size_t i = 0; i < v.size(); ++i) {
    Rational t = v[i] * den_lcm;
    w[i] = t.get_num(); // denominator is 1 after scaling
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), w[i].get_mpz_t());
  }
  if (g == 0) throw std::invalid_argument("canonical direction of zero vector");
  int first_sign = 0;
  for (const auto& z : w)
    if (z != 0) { first_sign = mpz_sgn(z.get_mpz_t()); break; }
  if (first_sign < 0) g = -g;
  RatVec out(v.size());
  for (size_t i = 0; i < v.size(); ++i) out[i] = Rational(w[i] / g);
  return out;
}

bool is_integer_vector(const RatVec& v) {
  for (const auto& q : v)
    if (q.get_den() != 1) return false;
  return true;
}

} // namespace dieout
