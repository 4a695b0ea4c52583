#ifndef FJ_QSERIES_HPP
#define FJ_QSERIES_HPP

#include <map>
#include <utility>
#include <vector>

#include "fj/cyclotomic.hpp"
#include "fj/rational.hpp"

namespace fj {

// Truncated Laurent series in q with exponents in (1/denom)Z. All stored
// exponents are < prec; anything at or beyond prec is unknown, not zero.
struct QSeries {
  long denom = 1;
  Rational prec = 0;
  std::map<Rational, Cyc> c;

  void set(const Rational& e, const Cyc& v);
  void add(const Rational& e, const Cyc& v);
  Cyc coeff(const Rational& e) const;
  bool is_zero() const { return c.empty(); }
  Rational min_exp() const;  // 0 for the zero series
};

QSeries qs_const(const Cyc& v, const Rational& prec);
QSeries qs_add(const QSeries& a, const QSeries& b);
QSeries qs_sub(const QSeries& a, const QSeries& b);
QSeries qs_scale(const Cyc& s, const QSeries& a);
QSeries qs_mul(const QSeries& a, const QSeries& b);
QSeries qs_shift(const QSeries& a, const Rational& e);  // multiply by q^e
QSeries qs_truncate(const QSeries& a, const Rational& prec);
// multiplicative inverse of a Laurent series with invertible lowest term;
// if the lowest exponent is e, the result is exact below prec - 2e
QSeries qs_inverse(const QSeries& b);
QSeries qs_div(const QSeries& a, const QSeries& b);
QSeries qs_pow(const QSeries& a, long n);
bool qs_eq(const QSeries& a, const QSeries& b);  // on the common window

// Truncated series in q and zeta, exponents (n, r); finite zeta-support per
// q-order by construction.
struct QZSeries {
  long denom_q = 1, denom_z = 1;
  Rational prec = 0;  // q-precision
  std::map<std::pair<Rational, Rational>, Cyc> c;

  void set(const Rational& n, const Rational& r, const Cyc& v);
  void add(const Rational& n, const Rational& r, const Cyc& v);
  Cyc coeff(const Rational& n, const Rational& r) const;
  bool is_zero() const { return c.empty(); }
  Rational min_exp_q() const;
};

QZSeries qz_from_q(const QSeries& a);
QZSeries qz_const(const Cyc& v, const Rational& prec);
QZSeries qz_add(const QZSeries& a, const QZSeries& b);
QZSeries qz_sub(const QZSeries& a, const QZSeries& b);
QZSeries qz_scale(const Cyc& s, const QZSeries& a);
QZSeries qz_mul(const QZSeries& a, const QZSeries& b);
QZSeries qz_truncate(const QZSeries& a, const Rational& prec);
// divide by a pure q-series with invertible lowest coefficient
QZSeries qz_div_q(const QZSeries& a, const QSeries& b);
QZSeries qz_pow(const QZSeries& a, long n);
bool qz_eq(const QZSeries& a, const QZSeries& b);  // on the common window

// normalized Eisenstein series E_k = 1 - (2k/B_k) sum sigma_{k-1}(n) q^n
QSeries eisenstein_q(long k, const Rational& prec);
// Dedekind eta = q^{1/24} prod (1-q^n), exponents in (1/24)Z
QSeries eta_q(const Rational& prec);
// discriminant Delta = eta^24
QSeries delta_q(const Rational& prec);
// odd Jacobi theta: sum over r in Z+1/2 of (-1)^{floor(r)} q^{r^2/2} zeta^r
QZSeries theta11_qz(const Rational& prec);
// even thetas, kind in {2,3,4}, and their z=0 specializations
QZSeries theta_qz(int kind, const Rational& prec);
QSeries theta_q0(int kind, const Rational& prec);

std::vector<Rational> bernoulli_numbers(long upto);

}  // namespace fj

#endif
