#include "fj/qseries.hpp"

#include <algorithm>

#include "fj/errors.hpp"

namespace fj {

namespace {

long lcm_l(long a, long b) {
  return static_cast<long>(ulong_lcm(static_cast<unsigned long>(a),
                                     static_cast<unsigned long>(b)));
}

Rational min_or_zero(const Rational& m, bool empty) { return empty ? Rational(0) : m; }

}  // namespace

void QSeries::set(const Rational& e, const Cyc& v) {
  if (v.is_zero())
    c.erase(e);
  else
    c[e] = v;
}

void QSeries::add(const Rational& e, const Cyc& v) {
  if (v.is_zero()) return;
  auto it = c.find(e);
  if (it == c.end()) {
    c[e] = v;
  } else {
    it->second += v;
    if (it->second.is_zero()) c.erase(it);
  }
}

Cyc QSeries::coeff(const Rational& e) const {
  auto it = c.find(e);
  return it == c.end() ? Cyc() : it->second;
}

Rational QSeries::min_exp() const {
  return min_or_zero(c.empty() ? Rational(0) : c.begin()->first, c.empty());
}

QSeries qs_const(const Cyc& v, const Rational& prec) {
  QSeries s;
  s.prec = prec;
  s.set(Rational(0), v);
  return s;
}

QSeries qs_add(const QSeries& a, const QSeries& b) {
  QSeries s;
  s.denom = lcm_l(a.denom, b.denom);
  s.prec = std::min(a.prec, b.prec);
  for (const auto& [e, v] : a.c)
    if (e < s.prec) s.add(e, v);
  for (const auto& [e, v] : b.c)
    if (e < s.prec) s.add(e, v);
  return s;
}

QSeries qs_sub(const QSeries& a, const QSeries& b) {
  return qs_add(a, qs_scale(Cyc(-1l), b));
}

QSeries qs_scale(const Cyc& s, const QSeries& a) {
  QSeries r;
  r.denom = a.denom;
  r.prec = a.prec;
  if (s.is_zero()) return r;
  for (const auto& [e, v] : a.c) r.set(e, s * v);
  return r;
}

QSeries qs_mul(const QSeries& a, const QSeries& b) {
  QSeries s;
  s.denom = lcm_l(a.denom, b.denom);
  s.prec = std::min(a.prec + b.min_exp(), b.prec + a.min_exp());
  for (const auto& [ea, va] : a.c)
    for (const auto& [eb, vb] : b.c) {
      Rational e = ea + eb;
      if (e < s.prec) s.add(e, va * vb);
    }
  return s;
}

QSeries qs_shift(const QSeries& a, const Rational& e) {
  QSeries s;
  s.denom = lcm_l(a.denom, static_cast<long>(e.get_den().get_ui()));
  s.prec = a.prec + e;
  for (const auto& [x, v] : a.c) s.set(x + e, v);
  return s;
}

QSeries qs_truncate(const QSeries& a, const Rational& prec) {
  QSeries s;
  s.denom = a.denom;
  s.prec = std::min(a.prec, prec);
  for (const auto& [e, v] : a.c)
    if (e < s.prec) s.set(e, v);
  return s;
}

QSeries qs_inverse(const QSeries& b) {
  if (b.is_zero()) throw ZeroDivisor();
  Rational e = b.min_exp();
  Cyc c0 = b.c.begin()->second;
  // v = 1 + u with u of positive order
  QSeries v = qs_scale(c0.inverse(), qs_shift(b, -e));
  Rational vprec = b.prec - e;
  if (vprec <= 0) throw PrecisionTooLow("no terms left after normalizing divisor");
  v.prec = vprec;
  QSeries w = qs_const(Cyc(1l), vprec);
  w.denom = v.denom;
  // Newton iteration w <- w(2 - vw); the number of correct terms doubles
  Rational steps = vprec * v.denom;
  long iters = 1;
  Rational pw = 2;
  while (pw < steps * 2) {
    pw *= 2;
    ++iters;
  }
  for (long i = 0; i < iters; ++i) {
    QSeries t = qs_sub(qs_const(Cyc(2l), vprec), qs_mul(v, w));
    w = qs_mul(w, t);
    w.prec = vprec;
    w = qs_truncate(w, vprec);
  }
  QSeries inv = qs_scale(c0.inverse(), qs_shift(w, -e));
  inv.prec = b.prec - 2 * e;
  inv = qs_truncate(inv, inv.prec);
  return inv;
}

QSeries qs_div(const QSeries& a, const QSeries& b) { return qs_mul(a, qs_inverse(b)); }

QSeries qs_pow(const QSeries& a, long n) {
  QSeries r = qs_const(Cyc(1l), a.prec);
  r.denom = a.denom;
  QSeries base = a;
  long t = n;
  while (t) {
    if (t & 1) r = qs_mul(r, base);
    if (t >>= 1) base = qs_mul(base, base);
  }
  return r;
}

bool qs_eq(const QSeries& a, const QSeries& b) {
  Rational prec = std::min(a.prec, b.prec);
  for (const auto& [e, v] : a.c)
    if (e < prec && b.coeff(e) != v) return false;
  for (const auto& [e, v] : b.c)
    if (e < prec && a.coeff(e) != v) return false;
  return true;
}

void QZSeries::set(const Rational& n, const Rational& r, const Cyc& v) {
  if (v.is_zero())
    c.erase({n, r});
  else
    c[{n, r}] = v;
}

void QZSeries::add(const Rational& n, const Rational& r, const Cyc& v) {
  if (v.is_zero()) return;
  auto key = std::make_pair(n, r);
  auto it = c.find(key);
  if (it == c.end()) {
    c[key] = v;
  } else {
    it->second += v;
    if (it->second.is_zero()) c.erase(it);
  }
}

Cyc QZSeries::coeff(const Rational& n, const Rational& r) const {
  auto it = c.find({n, r});
  return it == c.end() ? Cyc() : it->second;
}

Rational QZSeries::min_exp_q() const {
  if (c.empty()) return Rational(0);
  return c.begin()->first.first;
}

QZSeries qz_from_q(const QSeries& a) {
  QZSeries s;
  s.denom_q = a.denom;
  s.prec = a.prec;
  for (const auto& [e, v] : a.c) s.set(e, Rational(0), v);
  return s;
}

QZSeries qz_const(const Cyc& v, const Rational& prec) {
  QZSeries s;
  s.prec = prec;
  s.set(Rational(0), Rational(0), v);
  return s;
}

QZSeries qz_add(const QZSeries& a, const QZSeries& b) {
  QZSeries s;
  s.denom_q = lcm_l(a.denom_q, b.denom_q);
  s.denom_z = lcm_l(a.denom_z, b.denom_z);
  s.prec = std::min(a.prec, b.prec);
  for (const auto& [k, v] : a.c)
    if (k.first < s.prec) s.add(k.first, k.second, v);
  for (const auto& [k, v] : b.c)
    if (k.first < s.prec) s.add(k.first, k.second, v);
  return s;
}

QZSeries qz_sub(const QZSeries& a, const QZSeries& b) {
  return qz_add(a, qz_scale(Cyc(-1l), b));
}

QZSeries qz_scale(const Cyc& s, const QZSeries& a) {
  QZSeries r;
  r.denom_q = a.denom_q;
  r.denom_z = a.denom_z;
  r.prec = a.prec;
  if (s.is_zero()) return r;
  for (const auto& [k, v] : a.c) r.set(k.first, k.second, s * v);
  return r;
}

QZSeries qz_mul(const QZSeries& a, const QZSeries& b) {
  QZSeries s;
  s.denom_q = lcm_l(a.denom_q, b.denom_q);
  s.denom_z = lcm_l(a.denom_z, b.denom_z);
  s.prec = std::min(a.prec + b.min_exp_q(), b.prec + a.min_exp_q());
  for (const auto& [ka, va] : a.c)
    for (const auto& [kb, vb] : b.c) {
      Rational n = ka.first + kb.first;
      if (n < s.prec) s.add(n, ka.second + kb.second, va * vb);
    }
  return s;
}

QZSeries qz_truncate(const QZSeries& a, const Rational& prec) {
  QZSeries s;
  s.denom_q = a.denom_q;
  s.denom_z = a.denom_z;
  s.prec = std::min(a.prec, prec);
  for (const auto& [k, v] : a.c)
    if (k.first < s.prec) s.set(k.first, k.second, v);
  return s;
}

QZSeries qz_div_q(const QZSeries& a, const QSeries& b) {
  return qz_mul(a, qz_from_q(qs_inverse(b)));
}

QZSeries qz_pow(const QZSeries& a, long n) {
  QZSeries r = qz_const(Cyc(1l), a.prec);
  r.denom_q = a.denom_q;
  r.denom_z = a.denom_z;
  QZSeries base = a;
  long t = n;
  while (t) {
    if (t & 1) r = qz_mul(r, base);
    if (t >>= 1) base = qz_mul(base, base);
  }
  return r;
}

bool qz_eq(const QZSeries& a, const QZSeries& b) {
  Rational prec = std::min(a.prec, b.prec);
  for (const auto& [k, v] : a.c)
    if (k.first < prec && b.coeff(k.first, k.second) != v) return false;
  for (const auto& [k, v] : b.c)
    if (k.first < prec && a.coeff(k.first, k.second) != v) return false;
  return true;
}

std::vector<Rational> bernoulli_numbers(long upto) {
  std::vector<Rational> B(upto + 1, Rational(0));
  B[0] = 1;
  std::vector<std::vector<Rational>> binom(upto + 2);
  for (long n = 0; n <= upto + 1; ++n) {
    binom[n].assign(n + 1, Rational(1));
    for (long k = 1; k < n; ++k) binom[n][k] = binom[n - 1][k - 1] + binom[n - 1][k];
  }
  for (long m = 1; m <= upto; ++m) {
    Rational s(0);
    for (long j = 0; j < m; ++j) s += binom[m + 1][j] * B[j];
    B[m] = -s / binom[m + 1][m];
  }
  return B;
}

QSeries eisenstein_q(long k, const Rational& prec) {
  if (k < 4 || k % 2 != 0) throw BadWeight("Eisenstein weight must be even and >= 4");
  auto B = bernoulli_numbers(k);
  Rational factor = Rational(-2 * k) / B[k];
  QSeries s;
  s.prec = prec;
  s.set(Rational(0), Cyc(1l));
  for (long n = 1; Rational(n) < prec; ++n) {
    Integer sigma(0);
    for (long d = 1; d <= n; ++d)
      if (n % d == 0) {
        Integer dk(1);
        for (long j = 0; j < k - 1; ++j) dk *= d;
        sigma += dk;
      }
    s.set(Rational(n), Cyc(factor * Rational(sigma)));
  }
  return s;
}

QSeries eta_q(const Rational& prec) {
  QSeries s;
  s.denom = 24;
  s.prec = prec;
  s.set(Rational(1, 24), Cyc(1l));
  for (long n = 1; Rational(n) + Rational(1, 24) < prec; ++n) {
    QSeries f;
    f.prec = prec;
    f.set(Rational(0), Cyc(1l));
    f.set(Rational(n), Cyc(-1l));
    s = qs_mul(s, f);
    s.prec = prec;
    s = qs_truncate(s, prec);
  }
  return s;
}

QSeries delta_q(const Rational& prec) {
  QSeries eta = eta_q(prec + 1);
  QSeries d = qs_pow(eta, 24);
  d.denom = 1;
  return qs_truncate(d, prec);
}

QZSeries theta11_qz(const Rational& prec) {
  QZSeries s;
  s.denom_q = 8;
  s.denom_z = 2;
  s.prec = prec;
  for (long t = 1;; t += 2) {  // r = t/2
    Rational r(t, 2);
    Rational n = r * r / 2;
    if (n >= prec) break;
    Cyc sign = (((t - 1) / 2) % 2 == 0) ? Cyc(1l) : Cyc(-1l);
    s.set(n, r, sign);
    s.set(n, -r, -sign);
  }
  return s;
}

QZSeries theta_qz(int kind, const Rational& prec) {
  QZSeries s;
  s.denom_q = 8;
  s.denom_z = 2;
  s.prec = prec;
  if (kind == 2) {
    for (long t = 1;; t += 2) {
      Rational r(t, 2);
      Rational n = r * r / 2;
      if (n >= prec) break;
      s.set(n, r, Cyc(1l));
      s.set(n, -r, Cyc(1l));
    }
  } else if (kind == 3 || kind == 4) {
    s.set(Rational(0), Rational(0), Cyc(1l));
    for (long r = 1;; ++r) {
      Rational n = Rational(r * r, 2);
      if (n >= prec) break;
      Cyc v = (kind == 4 && r % 2) ? Cyc(-1l) : Cyc(1l);
      s.set(n, Rational(r), v);
      s.set(n, Rational(-r), v);
    }
  } else {
    throw Error("BadTheta", "kind must be 2, 3 or 4");
  }
  return s;
}

QSeries theta_q0(int kind, const Rational& prec) {
  QZSeries z = theta_qz(kind, prec);
  QSeries s;
  s.denom = 8;
  s.prec = prec;
  for (const auto& [k, v] : z.c) s.add(k.first, v);
  return s;
}

}  // namespace fj
