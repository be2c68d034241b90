#pragma once

#include <gmpxx.h>
#include <string>
#include <cstdint>

namespace wfrob {

/// Exact rational scalar. Always canonicalized (lowest terms, positive
/// denominator); zero is 0/1.
using Rational = mpq_class;

inline Rational rat(long num, long den = 1) {
  Rational r(num, den);
  r.canonicalize();
  return r;
}

/// Canonical text form "p/q", with "/1" omitted.
inline std::string to_string(const Rational& r) {
  if (r.get_den() == 1) return r.get_num().get_str();
  return r.get_num().get_str() + "/" + r.get_den().get_str();
}

inline double to_double(const Rational& r) { return r.get_d(); }

}  // namespace wfrob
