#pragma once

#include <gmpxx.h>

#include <string>

namespace coxfar {

// Arbitrary-precision rational, always canonical (lowest terms, positive
// denominator). mpq_class maintains the canonical form on every operation.
using Rational = mpq_class;

inline int sgn_of(const Rational& q) { return sgn(q); }

inline std::string to_string(const Rational& q) { return q.get_str(); }

inline double to_double(const Rational& q) { return q.get_d(); }

}  // namespace coxfar
