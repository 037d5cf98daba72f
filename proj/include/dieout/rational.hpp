#ifndef DIEOUT_RATIONAL_HPP
#define DIEOUT_RATIONAL_HPP

#include <gmpxx.h>
#include <string>
#include <vector>

namespace dieout {

using Rational = mpq_class;
using RatVec = std::vector<Rational>;
using RatMat = std::vector<RatVec>;

/** Parses "p", "-p" or "p/q" (base 10) into a canonical rational.
 * Throws std::invalid_argument on malformed input or q = 0. */
Rational parse_rational(const std::string& s);

/** Canonical text form: "p" or "p/q" with q > 0 and gcd(p,q) = 1. */
std::string to_string(const Rational& q);

double to_double(const Rational& q);

/** q^e for integer e >= 0. */
Rational pow_rational(const Rational& q, unsigned long e);

int sign(const Rational& q);

/** Exact dot product. Vectors must have equal length. */
Rational dot(const RatVec& a, const RatVec& b);

/** Scales v so all entries are coprime integers and the first nonzero
 * entry is positive. v must be nonzero. */
RatVec canonical_integer_direction(const RatVec& v);

bool is_integer_vector(const RatVec& v);

} // namespace dieout

#endif
