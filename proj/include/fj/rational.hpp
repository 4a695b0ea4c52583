#ifndef FJ_RATIONAL_HPP
#define FJ_RATIONAL_HPP

#include <gmpxx.h>

#include <string>

#include "fj/errors.hpp"

namespace fj {

// All scalars in the engine sit over exact rationals. mpq_class is kept
// canonical (reduced, positive denominator) by GMP.
using Rational = mpq_class;
using Integer = mpz_class;

inline std::string rat_str(const Rational& r) { return r.get_str(); }

inline Rational rat_parse(const std::string& s) {
  Rational r;
  if (s.empty() || r.set_str(s, 10) != 0)
    throw ParseError("bad rational literal '" + s + "'");
  if (r.get_den() == 0) throw ParseError("zero denominator in '" + s + "'");
  r.canonicalize();
  return r;
}

inline bool is_integer(const Rational& r) { return r.get_den() == 1; }

// r - floor(r), a representative of r in [0,1)
inline Rational mod1(const Rational& r) {
  Integer fl;
  mpz_fdiv_q(fl.get_mpz_t(), r.get_num().get_mpz_t(), r.get_den().get_mpz_t());
  return r - Rational(fl);
}

inline Rational rat_floor_div(const Rational& a, const Rational& b) {
  // floor(a/b) as a rational integer, b > 0
  Rational q = a / b;
  Integer fl;
  mpz_fdiv_q(fl.get_mpz_t(), q.get_num().get_mpz_t(), q.get_den().get_mpz_t());
  return Rational(fl);
}

}  // namespace fj

#endif
