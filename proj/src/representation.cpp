#include "fj/representation.hpp"

#include "fj/errors.hpp"

namespace fj {

Representation rep_trivial() {
  Representation r;
  r.dim = 1;
  r.level = 1;
  r.delta = r.c1 = r.c2 = mat_identity(1);
  return r;
}

Representation rep_trivial_power(long d) {
  Representation r;
  r.dim = d;
  r.level = 1;
  r.delta = r.c1 = r.c2 = mat_identity(d);
  return r;
}

Representation rep_dual(const Representation& rho) {
  Representation r;
  r.dim = rho.dim;
  r.level = rho.level;
  r.delta = mat_transpose(mat_inverse(rho.delta));
  r.c1 = mat_transpose(mat_inverse(rho.c1));
  r.c2 = mat_transpose(mat_inverse(rho.c2));
  return r;
}

Representation rep_tensor(const Representation& rho, const Representation& sigma) {
  Representation r;
  r.dim = rho.dim * sigma.dim;
  r.level = static_cast<long>(ulong_lcm(rho.level, sigma.level));
  r.delta = mat_kron(rho.delta, sigma.delta);
  r.c1 = mat_kron(rho.c1, sigma.c1);
  r.c2 = mat_kron(rho.c2, sigma.c2);
  return r;
}

Representation rep_hom(const Representation& rho, const Representation& sigma) {
  return rep_tensor(rep_dual(rho), sigma);
}

Representation rep_dsum(const Representation& rho, const Representation& sigma) {
  Representation r;
  r.dim = rho.dim + sigma.dim;
  r.level = static_cast<long>(ulong_lcm(rho.level, sigma.level));
  r.delta = mat_dsum(rho.delta, sigma.delta);
  r.c1 = mat_dsum(rho.c1, sigma.c1);
  r.c2 = mat_dsum(rho.c2, sigma.c2);
  return r;
}

Cyc i_pow_2k(const Rational& k) {
  Rational t = 2 * k;
  if (!is_integer(t))
    throw BadWeight("i^{2k} needs half-integral k");
  return Cyc::i_pow(t.get_num().get_si());
}

std::vector<std::vector<Cyc>> invariant_subspace(const Representation& rho,
                                                 const Rational& k) {
  Rational t = 2 * k;
  if (!is_integer(t)) throw BadWeight("weight must be half-integral");
  bool odd = mpz_odd_p(t.get_num().get_mpz_t());
  Cyc sign = odd ? Cyc(-1l) : Cyc(1l);
  std::size_t n = rho.dim;
  SparseMatrix m(2 * n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      Cyc a = rho.c1[i][j];
      if (i == j) a -= Cyc(1l);
      m.set(i, j, a);
      Cyc b = rho.c2[i][j];
      if (i == j) b -= sign;
      m.set(n + i, j, b);
    }
  return m.kernel_basis();
}

RepReport verify_representation(const Representation& rho) {
  RepReport rep;
  auto n = static_cast<std::size_t>(rho.dim);
  auto check_shape = [&](const Mat& m, const char* name) {
    if (m.size() != n) {
      rep.issues.push_back(std::string(name) + ": wrong shape");
      return false;
    }
    for (const auto& row : m)
      if (row.size() != n) {
        rep.issues.push_back(std::string(name) + ": wrong shape");
        return false;
      }
    return true;
  };
  if (!check_shape(rho.delta, "delta") || !check_shape(rho.c1, "c1") ||
      !check_shape(rho.c2, "c2"))
    return rep;
  Mat id = mat_identity(n);
  for (auto [m, name] : {std::pair<const Mat*, const char*>{&rho.delta, "delta"},
                         {&rho.c1, "c1"},
                         {&rho.c2, "c2"}})
    if (!mat_eq(mat_mul(*m, mat_conj_transpose(*m)), id))
      rep.issues.push_back(std::string(name) + ": not unitary");
  if (!mat_eq(mat_mul(rho.c1, rho.c1), id))
    rep.issues.push_back("c1: not an involution");
  if (!mat_eq(mat_mul(rho.c2, rho.c2), id))
    rep.issues.push_back("c2: not an involution");
  if (!mat_eq(mat_mul(rho.c1, rho.c2), mat_mul(rho.c2, rho.c1)))
    rep.issues.push_back("center images do not commute");
  if (!mat_eq(mat_mul(rho.delta, rho.delta), rho.c2))
    rep.issues.push_back("delta^2 != image of (1,-1)");
  return rep;
}

long DiscriminantForm::order() const {
  long n = 1;
  for (long d : orders) n *= d;
  return n;
}

long DiscriminantForm::level() const {
  Integer l(1);
  for (const auto& e : elements()) {
    Rational q = q_of(e);
    mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), q.get_den().get_mpz_t());
  }
  return l.get_si();
}

std::vector<std::vector<long>> DiscriminantForm::elements() const {
  std::vector<std::vector<long>> out;
  std::vector<long> cur(orders.size(), 0);
  while (true) {
    out.push_back(cur);
    std::size_t i = orders.size();
    while (i > 0) {
      --i;
      if (++cur[i] < orders[i]) break;
      cur[i] = 0;
      if (i == 0) return out;
    }
    if (orders.empty()) return out;
  }
}

Rational DiscriminantForm::q_of(const std::vector<long>& x) const {
  Rational s(0);
  for (std::size_t i = 0; i < orders.size(); ++i) {
    s += Rational(x[i]) * Rational(x[i]) * q_gen[i];
    for (std::size_t j = i + 1; j < orders.size(); ++j)
      s += Rational(x[i]) * Rational(x[j]) * bilinear[i][j];
  }
  return mod1(s);
}

Rational DiscriminantForm::b_of(const std::vector<long>& x,
                                const std::vector<long>& y) const {
  Rational s(0);
  for (std::size_t i = 0; i < orders.size(); ++i)
    for (std::size_t j = 0; j < orders.size(); ++j)
      s += Rational(x[i]) * Rational(y[j]) * bilinear[i][j];
  return mod1(s);
}

DiscReport verify_discriminant_form(const DiscriminantForm& d) {
  DiscReport rep;
  std::size_t s = d.orders.size();
  if (d.q_gen.size() != s || d.bilinear.size() != s)
    rep.issues.push_back("field sizes disagree");
  for (std::size_t i = 0; i + 1 < s; ++i)
    if (d.orders[i + 1] % d.orders[i])
      rep.issues.push_back("orders are not a divisibility chain");
  for (std::size_t i = 0; i < s && rep.ok(); ++i) {
    if (mod1(d.bilinear[i][i] - 2 * d.q_gen[i]) != 0)
      rep.issues.push_back("diagonal cross term differs from 2q");
    // q(x + d_i g_i) = q(x): 2 d_i q_i and d_i^2 q_i integral, d_i b_ij integral
    if (mod1(Rational(2 * d.orders[i]) * d.q_gen[i]) != 0 ||
        mod1(Rational(d.orders[i]) * Rational(d.orders[i]) * d.q_gen[i]) != 0)
      rep.issues.push_back("order inconsistent with q denominator");
    for (std::size_t j = 0; j < s; ++j) {
      if (mod1(d.bilinear[i][j] - d.bilinear[j][i]) != 0)
        rep.issues.push_back("bilinear form not symmetric");
      if (mod1(Rational(d.orders[i]) * d.bilinear[i][j]) != 0)
        rep.issues.push_back("order inconsistent with bilinear denominator");
    }
  }
  return rep;
}

WeilImages weil_rep_genus1(const DiscriminantForm& d) {
  auto els = d.elements();
  std::size_t n = els.size();
  WeilImages w;
  w.T = mat_zero(n, n);
  w.S = mat_zero(n, n);
  for (std::size_t i = 0; i < n; ++i) w.T[i][i] = Cyc::e(d.q_of(els[i]));
  Cyc pref = Cyc::e(Rational(-d.signature_mod8, 8)) *
             Cyc::sqrt_int(static_cast<unsigned long>(n)).inverse();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      w.S[i][j] = pref * Cyc::e(-d.b_of(els[i], els[j]));
  return w;
}

Representation weil_rep_genus2(const DiscriminantForm& d, const Cyc& delta_scalar) {
  if (d.signature_mod8 % 2)
    throw Error("UnsupportedSignature",
                "genus-2 named images are provided for even signature only");
  auto els = d.elements();
  std::size_t n = els.size();
  // index of an element in lex order
  auto index_of = [&](const std::vector<long>& x) {
    std::size_t idx = 0;
    for (std::size_t i = 0; i < d.orders.size(); ++i)
      idx = idx * d.orders[i] + static_cast<std::size_t>(x[i]);
    return idx;
  };
  auto neg = [&](const std::vector<long>& x) {
    std::vector<long> y(x.size());
    for (std::size_t i = 0; i < x.size(); ++i)
      y[i] = (d.orders[i] - x[i]) % d.orders[i];
    return y;
  };
  Representation r;
  r.dim = static_cast<long>(n * n);
  r.level = d.level();
  r.delta = mat_zero(n * n, n * n);
  r.c1 = mat_zero(n * n, n * n);
  r.c2 = mat_zero(n * n, n * n);
  // square of the genus-1 center scalar e(-sig/4); equals 1 for even signature
  Cyc c1_scalar = Cyc::e(Rational(-d.signature_mod8, 2));
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      std::size_t src = a * n + b;
      r.delta[b * n + a][src] = delta_scalar;
      std::size_t na = index_of(neg(els[a])), nb = index_of(neg(els[b]));
      r.c1[na * n + nb][src] = c1_scalar;
      r.c2[src][src] = delta_scalar * delta_scalar;
    }
  return r;
}

}  // namespace fj
