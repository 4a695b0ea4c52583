#include "fj/cyclotomic.hpp"

#include <algorithm>
#include <map>

#include "fj/errors.hpp"

namespace fj {

namespace {

using Poly = std::vector<Rational>;  // low to high, trailing zeros trimmed

void trim(Poly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

Poly poly_mul(const Poly& a, const Poly& b) {
  if (a.empty() || b.empty()) return {};
  Poly r(a.size() + b.size() - 1, Rational(0));
  for (size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (size_t j = 0; j < b.size(); ++j) {
      if (b[j] == 0) continue;
      r[i + j] += a[i] * b[j];
    }
  }
  trim(r);
  return r;
}

// remainder of a modulo b, b nonzero
Poly poly_rem(Poly a, const Poly& b) {
  trim(a);
  const size_t db = b.size() - 1;
  const Rational& lead = b.back();
  while (a.size() > db) {
    Rational f = a.back() / lead;
    size_t shift = a.size() - 1 - db;
    for (size_t j = 0; j < b.size(); ++j) a[shift + j] -= f * b[j];
    trim(a);
    if (a.empty()) break;
  }
  return a;
}

// exact quotient, assumes b | a
Poly poly_div_exact(Poly a, const Poly& b) {
  trim(a);
  const size_t db = b.size() - 1;
  const Rational& lead = b.back();
  Poly q;
  if (a.size() <= db) return q;
  q.assign(a.size() - db, Rational(0));
  while (a.size() > db) {
    Rational f = a.back() / lead;
    size_t shift = a.size() - 1 - db;
    q[shift] = f;
    for (size_t j = 0; j < b.size(); ++j) a[shift + j] -= f * b[j];
    trim(a);
    if (a.empty()) break;
  }
  return q;
}

// extended gcd over Q[x]: returns (g, u) with u*a + v*b = g, g the gcd
void poly_xgcd(Poly a, Poly b, Poly& g, Poly& u) {
  Poly u0{Rational(1)}, u1{};
  trim(a);
  trim(b);
  while (!b.empty()) {
    // a = q*b + r
    Poly r = a;
    const size_t db = b.size() - 1;
    const Rational& lead = b.back();
    Poly q;
    trim(r);
    if (r.size() > db) {
      q.assign(r.size() - db, Rational(0));
      while (r.size() > db) {
        Rational f = r.back() / lead;
        size_t shift = r.size() - 1 - db;
        q[shift] = f;
        for (size_t j = 0; j < b.size(); ++j) r[shift + j] -= f * b[j];
        trim(r);
        if (r.empty()) break;
      }
    }
    Poly u2 = u0;
    Poly qu1 = poly_mul(q, u1);
    if (qu1.size() < u2.size()) qu1.resize(u2.size(), Rational(0));
    if (u2.size() < qu1.size()) u2.resize(qu1.size(), Rational(0));
    for (size_t i = 0; i < u2.size(); ++i) u2[i] -= qu1[i];
    trim(u2);
    u0 = u1;
    u1 = u2;
    a = b;
    b = r;
  }
  g = a;
  u = u0;
}

std::vector<unsigned long> divisors(unsigned long n) {
  std::vector<unsigned long> d;
  for (unsigned long i = 1; i * i <= n; ++i)
    if (n % i == 0) {
      d.push_back(i);
      if (i != n / i) d.push_back(n / i);
    }
  std::sort(d.begin(), d.end());
  return d;
}

}  // namespace

unsigned long ulong_gcd(unsigned long a, unsigned long b) {
  while (b) {
    unsigned long t = a % b;
    a = b;
    b = t;
  }
  return a;
}

unsigned long ulong_lcm(unsigned long a, unsigned long b) {
  return a / ulong_gcd(a, b) * b;
}

unsigned long euler_phi(unsigned long n) {
  unsigned long result = n;
  for (unsigned long p = 2; p * p <= n; ++p)
    if (n % p == 0) {
      while (n % p == 0) n /= p;
      result -= result / p;
    }
  if (n > 1) result -= result / n;
  return result;
}

const std::vector<Rational>& cyclotomic_poly(unsigned long n) {
  static std::map<unsigned long, Poly> cache;
  auto it = cache.find(n);
  if (it != cache.end()) return it->second;
  // Phi_n = (x^n - 1) / prod_{d|n, d<n} Phi_d
  Poly num(n + 1, Rational(0));
  num[0] = -1;
  num[n] = 1;
  for (unsigned long d : divisors(n))
    if (d < n) num = poly_div_exact(num, cyclotomic_poly(d));
  return cache.emplace(n, std::move(num)).first->second;
}

Cyc::Cyc(unsigned long conductor, std::vector<Rational> coords)
    : n_(conductor), c_(std::move(coords)) {
  const size_t deg = euler_phi(n_);
  if (c_.size() > deg) {
    Poly r = poly_rem(c_, cyclotomic_poly(n_));
    c_ = std::move(r);
  }
  c_.resize(deg, Rational(0));
}

Cyc Cyc::zeta(unsigned long n, long pow) {
  long m = pow % static_cast<long>(n);
  if (m < 0) m += static_cast<long>(n);
  std::vector<Rational> c(static_cast<size_t>(m) + 1, Rational(0));
  c.back() = 1;
  return Cyc(n, std::move(c));
}

Cyc Cyc::e(const Rational& r) {
  Rational m = mod1(r);
  unsigned long den = m.get_den().get_ui();
  long num = m.get_num().get_si();
  return zeta(den, num);
}

Cyc Cyc::i_pow(long t) { return zeta(4, t); }

namespace {

// sqrt(p) for prime p, via the quadratic Gauss sum (zeta_8 for p = 2)
Cyc sqrt_prime(unsigned long p) {
  if (p == 2) return Cyc::zeta(8) + Cyc::zeta(8, -1);
  // sum_a (a|p) zeta_p^a = sqrt(p) if p = 1 mod 4, i*sqrt(p) if p = 3 mod 4
  Cyc g(0l);
  for (unsigned long a = 1; a < p; ++a) {
    unsigned long sq = 1, base = a % p;
    unsigned long ex = (p - 1) / 2;
    while (ex) {  // Euler criterion
      if (ex & 1) sq = sq * base % p;
      base = base * base % p;
      ex >>= 1;
    }
    g += (sq == 1) ? Cyc::zeta(p, static_cast<long>(a))
                   : -Cyc::zeta(p, static_cast<long>(a));
  }
  return (p % 4 == 1) ? g : g * Cyc::i_pow(-1);
}

}  // namespace

Cyc Cyc::sqrt_int(unsigned long n) {
  if (n == 0) return Cyc(0l);
  Cyc res(1l);
  auto absorb = [&res](unsigned long p, unsigned long e) {
    Rational pe(1);
    for (unsigned long j = 0; j < e / 2; ++j) pe *= static_cast<long>(p);
    res *= Cyc(pe);
    if (e % 2) res *= sqrt_prime(p);
  };
  for (unsigned long p = 2; p * p <= n; ++p) {
    if (n % p) continue;
    unsigned long e = 0;
    while (n % p == 0) {
      n /= p;
      ++e;
    }
    absorb(p, e);
  }
  if (n > 1) absorb(n, 1);
  return res;
}

bool Cyc::is_zero() const {
  for (const auto& x : c_)
    if (x != 0) return false;
  return true;
}

bool Cyc::is_rational() const {
  Cyc r = reduced();
  return r.n_ == 1;
}

Rational Cyc::rational_value() const {
  Cyc r = reduced();
  if (r.n_ != 1) throw Error("NotRational", "value is not rational");
  return r.c_[0];
}

Cyc Cyc::embedded(unsigned long m) const {
  if (m == n_) return *this;
  if (m % n_ != 0) throw Error("BadConductor", "not a multiple of conductor");
  unsigned long k = m / n_;
  std::vector<Rational> p((c_.size() - 1) * k + 1, Rational(0));
  for (size_t j = 0; j < c_.size(); ++j) p[j * k] = c_[j];
  return Cyc(m, std::move(p));
}

Cyc Cyc::conj() const {
  if (n_ <= 2) return *this;
  std::vector<Rational> p(n_, Rational(0));
  p[0] = c_[0];
  for (size_t j = 1; j < c_.size(); ++j) p[n_ - j] = c_[j];
  return Cyc(n_, std::move(p));
}

namespace {

// substitute zeta_n -> zeta_n^a (gcd(a,n)=1), used for Galois-fixedness tests
Cyc galois(const Cyc& v, unsigned long a) {
  unsigned long n = v.conductor();
  std::vector<Rational> q(n, Rational(0));
  for (size_t j = 0; j < v.coords().size(); ++j)
    q[(j * a) % n] += v.coords()[j];
  return Cyc(n, std::move(q));
}

// solve sum_j x_j basis[j] = target over Q, dense small system
bool solve_membership(const std::vector<std::vector<Rational>>& basis,
                      const std::vector<Rational>& target,
                      std::vector<Rational>& sol) {
  size_t rows = target.size(), cols = basis.size();
  std::vector<std::vector<Rational>> a(rows,
                                       std::vector<Rational>(cols + 1, Rational(0)));
  for (size_t j = 0; j < cols; ++j)
    for (size_t i = 0; i < rows; ++i) a[i][j] = basis[j][i];
  for (size_t i = 0; i < rows; ++i) a[i][cols] = target[i];
  std::vector<size_t> pivot_of_col(cols, SIZE_MAX);
  size_t prow = 0;
  for (size_t col = 0; col < cols && prow < rows; ++col) {
    size_t sel = SIZE_MAX;
    for (size_t i = prow; i < rows; ++i)
      if (a[i][col] != 0) {
        sel = i;
        break;
      }
    if (sel == SIZE_MAX) continue;
    std::swap(a[prow], a[sel]);
    Rational inv = 1 / a[prow][col];
    for (size_t j = col; j <= cols; ++j) a[prow][j] *= inv;
    for (size_t i = 0; i < rows; ++i) {
      if (i == prow || a[i][col] == 0) continue;
      Rational f = a[i][col];
      for (size_t j = col; j <= cols; ++j) a[i][j] -= f * a[prow][j];
    }
    pivot_of_col[col] = prow;
    ++prow;
  }
  for (size_t i = prow; i < rows; ++i)
    if (a[i][cols] != 0) return false;
  sol.assign(cols, Rational(0));
  for (size_t col = 0; col < cols; ++col)
    if (pivot_of_col[col] != SIZE_MAX) sol[col] = a[pivot_of_col[col]][cols];
  return true;
}

}  // namespace

Cyc Cyc::reduced() const {
  if (n_ == 1) return *this;
  for (unsigned long d : divisors(n_)) {
    if (d == n_) break;
    // v in Q(zeta_d) iff fixed by all sigma_a with a = 1 mod d, gcd(a,n)=1
    bool fixed = true;
    for (unsigned long a = 1 + d; a < n_ && fixed; a += d)
      if (ulong_gcd(a, n_) == 1 && galois(*this, a) != *this) fixed = false;
    if (!fixed) continue;
    // express in the power basis of Q(zeta_d) inside Q(zeta_n)
    unsigned long k = n_ / d;
    size_t dd = euler_phi(d);
    std::vector<std::vector<Rational>> basis;
    for (size_t j = 0; j < dd; ++j)
      basis.push_back(Cyc::zeta(n_, static_cast<long>(j * k)).coords());
    std::vector<Rational> sol;
    if (solve_membership(basis, c_, sol)) return Cyc(d, std::move(sol));
  }
  return *this;
}

Cyc operator+(const Cyc& a, const Cyc& b) {
  unsigned long m = ulong_lcm(a.n_, b.n_);
  Cyc x = a.embedded(m), y = b.embedded(m);
  for (size_t i = 0; i < x.c_.size(); ++i) x.c_[i] += y.c_[i];
  return x;
}

Cyc operator-(const Cyc& a, const Cyc& b) {
  unsigned long m = ulong_lcm(a.n_, b.n_);
  Cyc x = a.embedded(m), y = b.embedded(m);
  for (size_t i = 0; i < x.c_.size(); ++i) x.c_[i] -= y.c_[i];
  return x;
}

Cyc Cyc::operator-() const {
  Cyc x = *this;
  for (auto& v : x.c_) v = -v;
  return x;
}

Cyc operator*(const Cyc& a, const Cyc& b) {
  unsigned long m = ulong_lcm(a.n_, b.n_);
  if (m == 1) return Cyc(a.c_[0] * b.c_[0]);
  Cyc x = a.embedded(m), y = b.embedded(m);
  Poly p = poly_mul(x.c_, y.c_);
  return Cyc(m, std::move(p));
}

Cyc Cyc::inverse() const {
  if (is_zero()) throw DivisionByZero();
  if (n_ == 1) return Cyc(Rational(1) / c_[0]);
  Poly g, u;
  Poly a = c_;
  trim(a);
  poly_xgcd(a, cyclotomic_poly(n_), g, u);
  // g is a nonzero constant (Phi_n irreducible)
  Rational inv = 1 / g[0];
  for (auto& v : u) v *= inv;
  return Cyc(n_, std::move(u));
}

Cyc operator/(const Cyc& a, const Cyc& b) { return a * b.inverse(); }

bool operator==(const Cyc& a, const Cyc& b) {
  unsigned long m = ulong_lcm(a.n_, b.n_);
  return a.embedded(m).c_ == b.embedded(m).c_;
}

Cyc Cyc::pow(long t) const {
  if (t < 0) return inverse().pow(-t);
  Cyc r(1l), base = *this;
  while (t) {
    if (t & 1) r *= base;
    base *= base;
    t >>= 1;
  }
  return r;
}

}  // namespace fj
