#ifndef FJ_CYCLOTOMIC_HPP
#define FJ_CYCLOTOMIC_HPP

#include <vector>

#include "fj/rational.hpp"

namespace fj {

// Exact element of the cyclotomic field Q(zeta_N), stored in the power basis
// 1, z, ..., z^{phi(N)-1} modulo the N-th cyclotomic polynomial. Mixed
// conductors are merged lazily to the lcm inside binary operations, so values
// of different conductors mix freely.
class Cyc {
 public:
  Cyc() : n_(1), c_(1, Rational(0)) {}
  Cyc(long v) : n_(1), c_(1, Rational(v)) {}
  Cyc(const Rational& v) : n_(1), c_(1, v) {}
  Cyc(unsigned long conductor, std::vector<Rational> coords);

  // zeta_n^pow (pow may be negative)
  static Cyc zeta(unsigned long n, long pow = 1);
  // e(r) = exp(2 pi i r) for rational r
  static Cyc e(const Rational& r);
  // exact square root of a positive integer (via Gauss sums and zeta_8)
  static Cyc sqrt_int(unsigned long n);
  static Cyc i_pow(long t);  // i^t

  unsigned long conductor() const { return n_; }
  const std::vector<Rational>& coords() const { return c_; }

  bool is_zero() const;
  bool is_rational() const;
  Rational rational_value() const;  // requires is_rational()

  Cyc embedded(unsigned long m) const;  // m must be a multiple of conductor
  Cyc reduced() const;                  // minimal-conductor representative
  Cyc conj() const;                     // complex conjugation zeta -> 1/zeta
  Cyc inverse() const;
  Cyc pow(long t) const;

  friend Cyc operator+(const Cyc& a, const Cyc& b);
  friend Cyc operator-(const Cyc& a, const Cyc& b);
  friend Cyc operator*(const Cyc& a, const Cyc& b);
  friend Cyc operator/(const Cyc& a, const Cyc& b);
  Cyc operator-() const;
  Cyc& operator+=(const Cyc& b) { return *this = *this + b; }
  Cyc& operator-=(const Cyc& b) { return *this = *this - b; }
  Cyc& operator*=(const Cyc& b) { return *this = *this * b; }
  Cyc& operator/=(const Cyc& b) { return *this = *this / b; }
  friend bool operator==(const Cyc& a, const Cyc& b);
  friend bool operator!=(const Cyc& a, const Cyc& b) { return !(a == b); }

 private:
  unsigned long n_;
  std::vector<Rational> c_;  // length phi(n_)
};

unsigned long euler_phi(unsigned long n);
unsigned long ulong_gcd(unsigned long a, unsigned long b);
unsigned long ulong_lcm(unsigned long a, unsigned long b);

// monic integer coefficients of the n-th cyclotomic polynomial, low to high
const std::vector<Rational>& cyclotomic_poly(unsigned long n);

}  // namespace fj

#endif
