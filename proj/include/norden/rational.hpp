#ifndef NORDEN_RATIONAL_HPP
#define NORDEN_RATIONAL_HPP

#include <gmpxx.h>

#include <string>

#include "norden/errors.hpp"

namespace norden {

/// Exact rational scalar. Always kept canonical: denominator > 0,
/// gcd(|num|, den) = 1. All arithmetic between canonical values stays
/// canonical; only raw construction needs the helpers below.
using Scalar = mpq_class;

inline Scalar rat(long num, long den = 1) {
  if (den == 0) throw input_error("rational with zero denominator");
  Scalar q(num, den);
  q.canonicalize();
  return q;
}

/// Parses "p", "-p" or "p/q" (arbitrary precision). Throws input_error.
inline Scalar parse_scalar(const std::string& text) {
  if (text.empty()) throw input_error("empty rational literal");
  mpq_t raw;
  mpq_init(raw);
  if (mpq_set_str(raw, text.c_str(), 10) != 0) {
    mpq_clear(raw);
    throw input_error("bad rational literal: '" + text + "'");
  }
  if (mpz_sgn(mpq_denref(raw)) == 0) {
    mpq_clear(raw);
    throw input_error("zero denominator in rational literal: '" + text + "'");
  }
  Scalar q(raw);
  mpq_clear(raw);
  q.canonicalize();
  return q;
}

/// Canonical text form: "p" when the value is an integer, else "p/q".
inline std::string to_string(const Scalar& q) { return q.get_str(); }

inline int sign(const Scalar& q) { return sgn(q); }

}  // namespace norden

#endif
