#include "fj/jacobi.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <tuple>

#include "fj/errors.hpp"
#include "fj/linalg.hpp"

namespace fj {

void JacobiForm::set(const Rational& n, const Rational& r, std::vector<Cyc> v) {
  bool zero = true;
  for (const auto& x : v)
    if (!x.is_zero()) {
      zero = false;
      break;
    }
  if (zero)
    table.erase({n, r});
  else
    table[{n, r}] = std::move(v);
}

void JacobiForm::add(const Rational& n, const Rational& r, const std::vector<Cyc>& v) {
  auto key = std::make_pair(n, r);
  auto it = table.find(key);
  if (it == table.end()) {
    set(n, r, v);
    return;
  }
  for (std::size_t i = 0; i < v.size(); ++i) it->second[i] += v[i];
  bool zero = true;
  for (const auto& x : it->second)
    if (!x.is_zero()) {
      zero = false;
      break;
    }
  if (zero) table.erase(it);
}

std::vector<Cyc> JacobiForm::coeff(const Rational& n, const Rational& r) const {
  auto it = table.find({n, r});
  if (it != table.end()) return it->second;
  return std::vector<Cyc>(rep_dim, Cyc());
}

Rational JacobiForm::min_exp_q() const {
  return table.empty() ? Rational(0) : table.begin()->first.first;
}

JacobiForm jacobi_from_qz(const QZSeries& s, const Rational& weight,
                          const Rational& index, Support support) {
  JacobiForm f;
  f.weight = weight;
  f.index = index;
  f.prec = s.prec;
  f.support = support;
  f.denom_n = s.denom_q;
  f.denom_r = s.denom_z;
  for (const auto& [k, v] : s.c) f.set(k.first, k.second, {v});
  return f;
}

JacobiForm jacobi_from_q(const QSeries& s, const Rational& weight) {
  JacobiForm f;
  f.weight = weight;
  f.index = 0;
  f.prec = s.prec;
  f.denom_n = s.denom;
  for (const auto& [e, v] : s.c) f.set(e, Rational(0), {v});
  return f;
}

QZSeries jacobi_to_qz(const JacobiForm& f, std::size_t component) {
  QZSeries s;
  s.denom_q = f.denom_n;
  s.denom_z = f.denom_r;
  s.prec = f.prec;
  for (const auto& [k, v] : f.table) s.set(k.first, k.second, v[component]);
  return s;
}

JacobiForm jacobi_add(const JacobiForm& a, const JacobiForm& b) {
  if (a.weight != b.weight || a.index != b.index || a.rep_dim != b.rep_dim)
    throw IncompatibleShapes("sum of Jacobi forms of different type");
  JacobiForm f = a;
  f.prec = std::min(a.prec, b.prec);
  f.support = (a.support == Support::weak || b.support == Support::weak)
                  ? Support::weak
                  : Support::holomorphic;
  f.table.clear();
  for (const auto& [k, v] : a.table)
    if (k.first < f.prec) f.set(k.first, k.second, v);
  for (const auto& [k, v] : b.table)
    if (k.first < f.prec) f.add(k.first, k.second, v);
  return f;
}

JacobiForm jacobi_scale(const Cyc& s, const JacobiForm& a) {
  JacobiForm f = a;
  f.table.clear();
  if (s.is_zero()) return f;
  for (const auto& [k, v] : a.table) {
    std::vector<Cyc> w = v;
    for (auto& x : w) x *= s;
    f.set(k.first, k.second, std::move(w));
  }
  return f;
}

JacobiForm jacobi_mul(const JacobiForm& a, const JacobiForm& b) {
  if (a.rep_dim != 1 && b.rep_dim != 1)
    throw IncompatibleShapes("at least one factor must be scalar");
  const JacobiForm& scalar = (a.rep_dim == 1) ? a : b;
  const JacobiForm& vec = (a.rep_dim == 1) ? b : a;
  JacobiForm f;
  f.weight = a.weight + b.weight;
  f.index = a.index + b.index;
  f.rep_dim = vec.rep_dim;
  f.prec = std::min(a.prec + b.min_exp_q(), b.prec + a.min_exp_q());
  f.support = (a.support == Support::weak || b.support == Support::weak)
                  ? Support::weak
                  : Support::holomorphic;
  f.period = std::max(a.period, b.period);
  f.denom_n = static_cast<long>(ulong_lcm(a.denom_n, b.denom_n));
  f.denom_r = static_cast<long>(ulong_lcm(a.denom_r, b.denom_r));
  for (const auto& [ks, vs] : scalar.table)
    for (const auto& [kv, vv] : vec.table) {
      Rational n = ks.first + kv.first;
      if (n >= f.prec) continue;
      std::vector<Cyc> w = vv;
      for (auto& x : w) x *= vs[0];
      f.add(n, ks.second + kv.second, w);
    }
  return f;
}

namespace {

// expansions of the two weak generators as q,zeta-series
std::pair<QZSeries, QZSeries> weak_gen_qz(const Rational& prec) {
  static std::map<Rational, std::pair<QZSeries, QZSeries>> cache;
  auto it = cache.find(prec);
  if (it != cache.end()) return it->second;

  Rational p = prec + 2;  // headroom for the eta/theta quotients
  QZSeries th = theta11_qz(p);
  QSeries eta6 = qs_pow(eta_q(p), 6);
  QZSeries phi_m2 = qz_truncate(qz_div_q(qz_mul(th, th), eta6), prec);

  QZSeries phi_0;
  phi_0.prec = p;
  for (int kind : {2, 3, 4}) {
    QZSeries num = theta_qz(kind, p);
    phi_0 = qz_add(phi_0, qz_div_q(qz_mul(num, num), qs_pow(theta_q0(kind, p), 2)));
  }
  phi_0 = qz_truncate(qz_scale(Cyc(4l), phi_0), prec);

  for (const QZSeries* s : {&phi_m2, &phi_0})
    for (const auto& [k, v] : s->c)
      if (!is_integer(k.first) || !is_integer(k.second))
        throw Error("InternalError", "weak generator has fractional exponents");
  phi_m2.denom_q = phi_m2.denom_z = 1;
  phi_0.denom_q = phi_0.denom_z = 1;
  return cache.emplace(prec, std::make_pair(phi_m2, phi_0)).first->second;
}

const QSeries& e_power(int which, long exp, const Rational& prec) {
  static std::map<std::tuple<int, long, Rational>, QSeries> cache;
  auto key = std::make_tuple(which, exp, prec);
  auto it = cache.find(key);
  if (it != cache.end()) return it->second;
  QSeries base = eisenstein_q(which, prec);
  return cache.emplace(key, qs_pow(base, exp)).first->second;
}

const QZSeries& phi_power(int which, long exp, const Rational& prec) {
  static std::map<std::tuple<int, long, Rational>, QZSeries> cache;
  auto key = std::make_tuple(which, exp, prec);
  auto it = cache.find(key);
  if (it != cache.end()) return it->second;
  auto gens = weak_gen_qz(prec);
  const QZSeries& base = (which == 0) ? gens.first : gens.second;
  return cache.emplace(key, qz_pow(base, exp)).first->second;
}

// E4^a E6^b phi_{-2,1}^{c1} phi_{0,1}^{c2}
QZSeries weak_monomial(long a, long b, long c1, long c2, const Rational& prec) {
  QZSeries s = qz_const(Cyc(1l), prec);
  if (a) s = qz_mul(s, qz_from_q(e_power(4, a, prec)));
  if (b) s = qz_mul(s, qz_from_q(e_power(6, b, prec)));
  if (c1) s = qz_mul(s, phi_power(0, c1, prec));
  if (c2) s = qz_mul(s, phi_power(1, c2, prec));
  return qz_truncate(s, prec);
}

std::vector<JacobiForm> echelonize_forms(const std::vector<JacobiForm>& forms) {
  if (forms.empty()) return {};
  Rational prec = forms[0].prec;
  for (const auto& f : forms) prec = std::min(prec, f.prec);
  std::set<FourierKey> keys;
  for (const auto& f : forms)
    for (const auto& [k, v] : f.table)
      if (k.first < prec) keys.insert(k);
  std::vector<FourierKey> cols(keys.begin(), keys.end());
  std::map<FourierKey, std::size_t> col_of;
  for (std::size_t j = 0; j < cols.size(); ++j) col_of[cols[j]] = j;
  long d = forms[0].rep_dim;
  SparseMatrix m(forms.size(), cols.size() * d);
  for (std::size_t i = 0; i < forms.size(); ++i)
    for (const auto& [k, v] : forms[i].table) {
      if (k.first >= prec) continue;
      for (long t = 0; t < d; ++t) m.set(i, col_of[k] * d + t, v[t]);
    }
  auto rows = m.echelon_rows();
  std::vector<JacobiForm> out;
  for (const auto& row : rows) {
    JacobiForm f = forms[0];
    f.prec = prec;
    f.table.clear();
    for (const auto& [j, v] : row) {
      FourierKey k = cols[j / d];
      auto cur = f.coeff(k.first, k.second);
      cur[j % d] = v;
      f.set(k.first, k.second, cur);
    }
    out.push_back(std::move(f));
  }
  return out;
}

}  // namespace

std::pair<JacobiForm, JacobiForm> weak_generators(const Rational& prec) {
  auto [a, b] = weak_gen_qz(prec);
  JacobiForm fm2 = jacobi_from_qz(a, Rational(-2), Rational(1), Support::weak);
  JacobiForm f0 = jacobi_from_qz(b, Rational(0), Rational(1), Support::weak);
  return {fm2, f0};
}

std::vector<JacobiForm> jacobi_basis(long k, long m, const Rational& prec) {
  if (k % 2 != 0)
    throw UnsupportedWeight("jacobi_basis supports even integral weight only");
  if (m < 0) throw Error("BadIndex", "index must be nonnegative");

  if (m == 0) {
    std::vector<JacobiForm> mono;
    for (long b = 0; 6 * b <= k; ++b) {
      if ((k - 6 * b) % 4) continue;
      long a = (k - 6 * b) / 4;
      QSeries s = qs_const(Cyc(1l), prec);
      if (a) s = qs_mul(s, e_power(4, a, prec));
      if (b) s = qs_mul(s, e_power(6, b, prec));
      mono.push_back(jacobi_from_q(qs_truncate(s, prec), Rational(k)));
    }
    return echelonize_forms(mono);
  }

  Rational prec_hi = prec + 2;
  struct Mono {
    long a, b, c1, c2;
  };
  std::vector<Mono> monos;
  for (long c1 = 0; c1 <= m; ++c1) {
    long c2 = m - c1;
    long w = k + 2 * c1;
    if (w < 0) continue;
    for (long b = 0; 6 * b <= w; ++b) {
      if ((w - 6 * b) % 4) continue;
      monos.push_back({(w - 6 * b) / 4, b, c1, c2});
    }
  }
  if (monos.empty()) return {};

  std::vector<QZSeries> expansions;
  expansions.reserve(monos.size());
  for (const auto& mo : monos)
    expansions.push_back(weak_monomial(mo.a, mo.b, mo.c1, mo.c2, prec_hi));

  // holomorphy constraints: coefficients with r^2 > 4mn must vanish
  std::set<FourierKey> bad_lo, bad_hi;
  for (const auto& s : expansions)
    for (const auto& [key, v] : s.c)
      if (key.second * key.second > 4 * m * key.first) {
        bad_hi.insert(key);
        if (key.first < prec) bad_lo.insert(key);
      }
  auto kernel_for = [&](const std::set<FourierKey>& bad) {
    SparseMatrix mat(bad.size(), monos.size());
    std::size_t i = 0;
    for (const auto& key : bad) {
      for (std::size_t j = 0; j < monos.size(); ++j)
        mat.set(i, j, expansions[j].coeff(key.first, key.second));
      ++i;
    }
    return mat.kernel_basis();
  };
  auto klo = kernel_for(bad_lo);
  auto khi = kernel_for(bad_hi);
  if (klo.size() != khi.size())
    throw PrecisionTooLow("jacobi_basis dimension not stabilized; raise precision");

  std::vector<JacobiForm> forms;
  for (const auto& v : khi) {
    QZSeries acc;
    acc.prec = prec;
    for (std::size_t j = 0; j < monos.size(); ++j)
      if (!v[j].is_zero()) acc = qz_add(acc, qz_scale(v[j], qz_truncate(expansions[j], prec)));
    acc.prec = prec;
    forms.push_back(jacobi_from_qz(acc, Rational(k), Rational(m), Support::holomorphic));
  }
  return echelonize_forms(forms);
}

namespace {

// all (n, r) with 4mn - r^2 = disc and r = r0 mod step, n < prec
std::vector<FourierKey> periodicity_class(const Rational& m, const Rational& disc,
                                          const Rational& r0, const Rational& step,
                                          const Rational& prec) {
  std::vector<FourierKey> out;
  for (int dir : {0, 1}) {
    for (long j = dir ? -1 : 0;; dir ? --j : ++j) {
      Rational r = r0 + step * j;
      Rational n = (disc + r * r) / (4 * m);
      if (n >= prec) break;
      out.push_back({n, r});
    }
  }
  return out;
}

}  // namespace

ValidationReport validate_jacobi(const JacobiForm& f) {
  ValidationReport rep;
  for (const auto& [k, v] : f.table) {
    const auto& [n, r] = k;
    if (v.size() != static_cast<std::size_t>(f.rep_dim))
      rep.issues.push_back({"coefficient vector has wrong length", n, r});
    if (n < 0) rep.issues.push_back({"negative q-exponent", n, r});
    if (f.support == Support::holomorphic && r * r > 4 * f.index * n)
      rep.issues.push_back({"support violation: r^2 > 4mn", n, r});
    Rational dn = n * f.denom_n, dr = r * f.denom_r;
    if (!is_integer(dn) || !is_integer(dr))
      rep.issues.push_back({"exponent denominator exceeds declared bound", n, r});
  }
  if (f.support == Support::holomorphic && f.index > 0) {
    // coefficients depend only on (4mn - r^2, r mod 2m*period)
    Rational step = 2 * f.index * f.period;
    std::map<std::pair<Rational, Rational>, std::pair<FourierKey, std::vector<Cyc>>> rep_of;
    for (const auto& [k, v] : f.table) {
      Rational disc = 4 * f.index * k.first - k.second * k.second;
      Rational rmod = k.second - step * rat_floor_div(k.second, step);
      auto cls = std::make_pair(disc, rmod);
      auto it = rep_of.find(cls);
      if (it == rep_of.end())
        rep_of[cls] = {k, v};
      else if (it->second.second != v)
        rep.issues.push_back({"periodicity violation", k.first, k.second});
    }
    // stored class members must be present wherever the class value is nonzero
    for (const auto& [cls, kv] : rep_of) {
      for (const auto& key :
           periodicity_class(f.index, cls.first, cls.second, step, f.prec)) {
        if (key.first < 0) continue;
        if (f.table.find(key) == f.table.end())
          rep.issues.push_back({"periodicity violation (missing partner)", key.first,
                                key.second});
      }
    }
  }
  return rep;
}

}  // namespace fj
