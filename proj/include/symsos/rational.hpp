#pragma once

#include <gmpxx.h>

#include <string>

namespace symsos {

// Exact rational coefficients. GMP keeps mpq_class canonical under
// arithmetic; only string construction needs an explicit canonicalize.
using Rational = mpq_class;

inline double to_double(const Rational& q) { return q.get_d(); }

inline std::string to_string(const Rational& q) { return q.get_str(); }

Rational rational_from_string(const std::string& s);

// Content-free sign: -1, 0, +1.
inline int sign(const Rational& q) { return sgn(q); }

}  // namespace symsos
