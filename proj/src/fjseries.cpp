#include "fj/fjseries.hpp"

#include <algorithm>

#include "fj/errors.hpp"

namespace fj {

namespace {

long lcm_l(long a, long b) { return static_cast<long>(ulong_lcm(a, b)); }

// bilinear combination of two coefficient tables under `combine`, with the
// usual bookkeeping (weight and index add, precisions min, support weak if
// either factor is weak)
template <class F>
JacobiForm jf_bilinear(const JacobiForm& a, const JacobiForm& b, long out_dim,
                       F combine) {
  JacobiForm r;
  r.weight = a.weight + b.weight;
  r.index = a.index + b.index;
  r.rep_dim = out_dim;
  r.prec = std::min(a.prec, b.prec);
  r.support = (a.support == Support::weak || b.support == Support::weak)
                  ? Support::weak
                  : Support::holomorphic;
  r.period = lcm_l(a.period, b.period);
  r.denom_n = lcm_l(a.denom_n, b.denom_n);
  r.denom_r = lcm_l(a.denom_r, b.denom_r);
  for (const auto& [ka, va] : a.table)
    for (const auto& [kb, vb] : b.table) {
      Rational n = ka.first + kb.first;
      if (n >= r.prec) continue;
      r.add(n, ka.second + kb.second, combine(va, vb));
    }
  return r;
}

void jf_accumulate(JacobiForm& acc, const JacobiForm& t) {
  acc.prec = std::min(acc.prec, t.prec);
  if (t.support == Support::weak) acc.support = Support::weak;
  acc.period = lcm_l(acc.period, t.period);
  acc.denom_n = lcm_l(acc.denom_n, t.denom_n);
  acc.denom_r = lcm_l(acc.denom_r, t.denom_r);
  for (const auto& [k, v] : t.table)
    if (k.first < acc.prec) acc.add(k.first, k.second, v);
}

QSeries index0_qseries(const JacobiForm& f) {
  QSeries s;
  s.denom = f.denom_n;
  s.prec = f.prec;
  for (const auto& [k, v] : f.table) {
    if (k.second != 0)
      throw IncompatibleShapes("index-0 coefficient has zeta-dependence");
    s.add(k.first, v[0]);
  }
  return s;
}

QZSeries qz_zero(const Rational& prec) {
  QZSeries z;
  z.prec = prec;
  return z;
}

}  // namespace

FormalFJSeries fj_zero(const Rational& k, const Representation& rep, long trunc,
                       const Rational& qprec) {
  FormalFJSeries f;
  f.weight = k;
  f.rep = rep;
  f.trunc = trunc;
  f.qprec = qprec;
  f.coeffs.resize(trunc + 1);
  for (long m = 0; m <= trunc; ++m) {
    f.coeffs[m].weight = k;
    f.coeffs[m].index = m;
    f.coeffs[m].rep_dim = rep.dim;
    f.coeffs[m].prec = qprec;
  }
  return f;
}

FormalFJSeries fj_one(long trunc, const Rational& qprec) {
  FormalFJSeries f = fj_zero(Rational(0), rep_trivial(), trunc, qprec);
  f.coeffs[0].set(Rational(0), Rational(0), {Cyc(1l)});
  return f;
}

FormalFJSeries fj_add(const FormalFJSeries& a, const FormalFJSeries& b) {
  if (a.weight != b.weight) throw BadWeight("summands have different weights");
  if (a.rep.dim != b.rep.dim) throw IncompatibleShapes("summand dimensions differ");
  if (a.qprec != b.qprec) throw IncompatiblePrecision("summand q-precisions differ");
  FormalFJSeries r = fj_zero(a.weight, a.rep, std::min(a.trunc, b.trunc), a.qprec);
  for (long m = 0; m <= r.trunc; ++m) {
    jf_accumulate(r.coeffs[m], a.coeffs[m]);
    jf_accumulate(r.coeffs[m], b.coeffs[m]);
  }
  return r;
}

FormalFJSeries fj_scale(const Cyc& s, const FormalFJSeries& a) {
  FormalFJSeries r = a;
  for (auto& f : r.coeffs) f = jacobi_scale(s, f);
  return r;
}

FormalFJSeries fj_tensor(const FormalFJSeries& f, const FormalFJSeries& g) {
  if (f.qprec != g.qprec) throw IncompatiblePrecision("factors have different q-precisions");
  FormalFJSeries r = fj_zero(f.weight + g.weight, rep_tensor(f.rep, g.rep),
                             std::min(f.trunc, g.trunc), f.qprec);
  auto kron = [&](const std::vector<Cyc>& va, const std::vector<Cyc>& vb) {
    std::vector<Cyc> out(va.size() * vb.size(), Cyc(0l));
    for (std::size_t i = 0; i < va.size(); ++i)
      for (std::size_t j = 0; j < vb.size(); ++j) out[i * vb.size() + j] = va[i] * vb[j];
    return out;
  };
  for (long m = 0; m <= r.trunc; ++m)
    for (long j = std::max(0l, m - g.trunc); j <= std::min(m, f.trunc); ++j)
      jf_accumulate(r.coeffs[m],
                    jf_bilinear(f.coeffs[j], g.coeffs[m - j], r.rep.dim, kron));
  return r;
}

FormalFJSeries fj_pair(const FormalFJSeries& g, const FormalFJSeries& f,
                       const Representation& sigma) {
  if (g.qprec != f.qprec) throw IncompatiblePrecision("factors have different q-precisions");
  long drho = f.rep.dim, dsig = sigma.dim;
  if (g.rep.dim != drho * dsig)
    throw IncompatibleShapes("series is not Hom-valued for these shapes");
  FormalFJSeries r =
      fj_zero(g.weight + f.weight, sigma, std::min(g.trunc, f.trunc), g.qprec);
  auto apply = [&](const std::vector<Cyc>& hom, const std::vector<Cyc>& v) {
    std::vector<Cyc> out(dsig, Cyc(0l));
    for (long a = 0; a < drho; ++a)
      for (long b = 0; b < dsig; ++b) out[b] += hom[a * dsig + b] * v[a];
    return out;
  };
  for (long m = 0; m <= r.trunc; ++m)
    for (long j = std::max(0l, m - f.trunc); j <= std::min(m, g.trunc); ++j)
      jf_accumulate(r.coeffs[m],
                    jf_bilinear(g.coeffs[j], f.coeffs[m - j], dsig, apply));
  return r;
}

FormalFJSeries fj_pair(const FormalFJSeries& g, const FormalFJSeries& f) {
  if (f.rep.dim == 0 || g.rep.dim % f.rep.dim)
    throw IncompatibleShapes("series is not Hom-valued for these shapes");
  return fj_pair(g, f, rep_trivial_power(g.rep.dim / f.rep.dim));
}

SymmetryReport fj_is_symmetric(const FormalFJSeries& f) {
  SymmetryReport rep;
  Cyc i2k = i_pow_2k(f.weight);
  long denr = 1;
  for (const auto& c : f.coeffs) denr = lcm_l(denr, c.denom_r);
  for (long m = 0; m <= f.trunc; ++m)
    for (long n = 0; n <= f.trunc; ++n) {
      bool lhs_in = Rational(n) < f.coeffs[m].prec;
      bool rhs_in = Rational(m) < f.coeffs[n].prec;
      long rmax = 0;
      while ((rmax + 1) * (rmax + 1) <= 4 * m * n * denr * denr) ++rmax;
      for (long rr = -rmax; rr <= rmax; ++rr) {
        Rational r(rr, denr);
        if (!lhs_in || !rhs_in) {
          ++rep.skipped;
          continue;
        }
        std::vector<Cyc> lhs = f.coeffs[m].coeff(Rational(n), r);
        std::vector<Cyc> rhs = mat_apply(f.rep.delta, f.coeffs[n].coeff(Rational(m), r));
        bool eq = true;
        for (std::size_t c = 0; c < lhs.size() && eq; ++c)
          eq = (lhs[c] == i2k * rhs[c]);
        if (!eq) {
          rep.symmetric = false;
          rep.m = m;
          rep.n = n;
          rep.r = r;
          return rep;
        }
      }
    }
  return rep;
}

MeromorphicFJSeries fj_invert(const FormalFJSeries& f) {
  if (f.rep.dim != 1)
    throw IncompatibleShapes("inversion needs a scalar series");
  QSeries phi0 = index0_qseries(f.coeffs[0]);
  if (phi0.is_zero())
    throw NonInvertibleLeadingCoefficient("phi_0 vanishes identically");
  QSeries chi0q = qs_inverse(phi0);  // throws on non-invertible lowest term
  MeromorphicFJSeries r;
  r.weight = -f.weight;
  r.rep = f.rep;
  r.trunc = f.trunc;
  r.coeffs.assign(f.trunc + 1, {});
  QZSeries chi0 = qz_from_q(chi0q);
  r.coeffs[0] = {chi0};
  for (long m = 1; m <= f.trunc; ++m) {
    QZSeries acc = qz_mul(jacobi_to_qz(f.coeffs[1]), r.coeffs[m - 1][0]);
    for (long j = 2; j <= m; ++j)
      acc = qz_add(acc, qz_mul(jacobi_to_qz(f.coeffs[j]), r.coeffs[m - j][0]));
    r.coeffs[m] = {qz_scale(Cyc(-1l), qz_mul(chi0, acc))};
  }
  return r;
}

MeromorphicFJSeries fj_mero_mul(const MeromorphicFJSeries& a, const FormalFJSeries& b) {
  long dim;
  if (b.rep.dim == 1)
    dim = a.rep.dim;
  else if (a.rep.dim == 1)
    dim = b.rep.dim;
  else
    throw IncompatibleShapes("one factor must be scalar");
  MeromorphicFJSeries r;
  r.weight = a.weight + b.weight;
  r.rep = (b.rep.dim == 1) ? a.rep : b.rep;
  r.trunc = std::min(a.trunc, b.trunc);
  r.coeffs.assign(r.trunc + 1, std::vector<QZSeries>(dim));
  for (long m = 0; m <= r.trunc; ++m)
    for (long c = 0; c < dim; ++c) {
      QZSeries acc;
      bool first = true;
      for (long j = std::max(0l, m - b.trunc); j <= std::min(m, a.trunc); ++j) {
        QZSeries am = a.coeffs[j][a.rep.dim == 1 ? 0 : c];
        QZSeries bm = jacobi_to_qz(b.coeffs[m - j], b.rep.dim == 1 ? 0 : c);
        QZSeries t = qz_mul(am, bm);
        acc = first ? t : qz_add(acc, t);
        first = false;
      }
      if (first) acc = qz_zero(b.qprec);
      r.coeffs[m][c] = acc;
    }
  return r;
}

MeromorphicFJSeries fj_mero_mul(const FormalFJSeries& a, const MeromorphicFJSeries& b) {
  return fj_mero_mul(b, a);
}

MeromorphicFJSeries fj_meromorphic_expansion(const FormalFJSeries& g,
                                             const FormalFJSeries& h) {
  return fj_mero_mul(fj_invert(h), g);
}

bool mero_eq(const MeromorphicFJSeries& a, const MeromorphicFJSeries& b) {
  if (a.rep.dim != b.rep.dim) return false;
  long t = std::min(a.trunc, b.trunc);
  for (long m = 0; m <= t; ++m)
    for (long c = 0; c < a.rep.dim; ++c)
      if (!qz_eq(a.coeffs[m][c], b.coeffs[m][c])) return false;
  return true;
}

bool mero_is_one(const MeromorphicFJSeries& a) {
  if (a.rep.dim != 1) return false;
  for (long m = 0; m <= a.trunc; ++m) {
    const QZSeries& s = a.coeffs[m][0];
    QZSeries want = (m == 0) ? qz_const(Cyc(1l), s.prec) : qz_zero(s.prec);
    if (!qz_eq(s, want)) return false;
  }
  return true;
}

}  // namespace fj
