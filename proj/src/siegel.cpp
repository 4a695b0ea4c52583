#include "fj/siegel.hpp"

#include <algorithm>

#include "fj/errors.hpp"

namespace fj {

namespace {

bool vec_zero(const std::vector<Cyc>& v) {
  for (const auto& x : v)
    if (!x.is_zero()) return false;
  return true;
}

}  // namespace

std::vector<Cyc> SiegelForm::coeff(const Rational& n, const Rational& r,
                                   const Rational& m) const {
  auto it = coeffs.find({n, r, m});
  if (it != coeffs.end()) return it->second;
  return std::vector<Cyc>(rep.dim, Cyc(0l));
}

SiegelForm fj_to_siegel(const FormalFJSeries& f) {
  SymmetryReport sym = fj_is_symmetric(f);
  if (!sym.symmetric) throw NotSymmetric(sym.m, sym.n, rat_str(sym.r));
  SiegelForm F;
  F.weight = f.weight;
  F.rep = f.rep;
  F.trunc = f.trunc;
  F.qprec = f.qprec;
  for (long m = 0; m <= f.trunc; ++m) {
    long width = 2 * m * f.coeffs[m].period;
    for (const auto& [key, v] : f.coeffs[m].table) {
      if (vec_zero(v)) continue;
      Rational n = key.first, r = key.second;
      Rational r0 = r, n0 = n;
      if (m > 0) {
        // reduce r into [0, 2m*period) along the class of 4mn - r^2
        r0 = r - Rational(width) * rat_floor_div(r, Rational(width));
        n0 = n + (r0 * r0 - r * r) / Rational(4 * m);
      }
      auto it = F.coeffs.find({n0, r0, Rational(m)});
      if (it == F.coeffs.end()) {
        F.coeffs.emplace(std::make_tuple(n0, r0, Rational(m)), v);
      } else {
        for (std::size_t c = 0; c < v.size(); ++c)
          if (!(it->second[c] == v[c]))
            throw Error("InconsistentTable",
                        "periodicity classes carry conflicting values");
      }
    }
  }
  return F;
}

FormalFJSeries siegel_to_fj(const SiegelForm& F) {
  long period = 1;  // table keys are already class representatives
  FormalFJSeries f = fj_zero(F.weight, F.rep, F.trunc, F.qprec);
  for (const auto& [key, v] : F.coeffs) {
    auto [n0, r0, mr] = key;
    long m = mr.get_num().get_si();
    if (m == 0) {
      if (n0 < f.qprec) f.coeffs[0].set(n0, r0, v);
      continue;
    }
    Rational width(2 * m * period);
    Rational disc = Rational(4 * m) * n0 - r0 * r0;
    for (long dir : {0, 1}) {
      for (long j = dir ? -1 : 0;; dir ? --j : ++j) {
        Rational r = r0 + width * j;
        Rational n = (disc + r * r) / Rational(4 * m);
        if (n >= f.qprec) break;
        f.coeffs[m].set(n, r, v);
      }
    }
  }
  return f;
}

namespace {

struct Solve {
  long dimension = 0;
  std::vector<FormalFJSeries> basis;
};

Solve solve_once(const Rational& k, const Representation& rho, long M,
                 const Rational& N) {
  if (!is_integer(k) || mpz_odd_p(Rational(k).get_num().get_mpz_t()))
    throw UnsupportedWeight("scalar Jacobi bases need even integral weight");
  long kk = Rational(k).get_num().get_si();
  auto V = invariant_subspace(rho, k);
  std::vector<std::vector<JacobiForm>> bases(M + 1);
  std::vector<std::size_t> offset(M + 2, 0);
  long d = static_cast<long>(V.size());
  for (long m = 0; m <= M; ++m) {
    bases[m] = jacobi_basis(kk, m, N);
    offset[m + 1] = offset[m] + bases[m].size() * V.size();
  }
  std::size_t unknowns = offset[M + 1];
  Solve out;
  if (unknowns == 0 || d == 0) return out;

  Cyc i2k = i_pow_2k(k);
  Mat delta_v;  // action of i^{2k} delta on the V-coordinates' ambient space
  delta_v = mat_scale(i2k, rho.delta);

  // rows: one per (m, n, r, component); columns: (m, basis index, V index)
  std::vector<std::map<std::size_t, Cyc>> rows;
  for (long m = 0; m <= M; ++m)
    for (long n = m; n <= M; ++n) {
      if (Rational(n) >= N || Rational(m) >= N) continue;
      long rmax = 0;
      while ((rmax + 1) * (rmax + 1) <= 4 * m * n) ++rmax;
      for (long r = -rmax; r <= rmax; ++r)
        for (long comp = 0; comp < rho.dim; ++comp) {
          std::map<std::size_t, Cyc> row;
          auto put = [&](std::size_t col, const Cyc& val) {
            if (val.is_zero()) return;
            auto [it, fresh] = row.emplace(col, val);
            if (!fresh) it->second += val;
          };
          for (std::size_t i = 0; i < bases[m].size(); ++i) {
            Cyc a = bases[m][i].coeff(Rational(n), Rational(r))[0];
            if (a.is_zero()) continue;
            for (long j = 0; j < d; ++j)
              put(offset[m] + i * d + j, a * V[j][comp]);
          }
          for (std::size_t i = 0; i < bases[n].size(); ++i) {
            Cyc a = bases[n][i].coeff(Rational(m), Rational(r))[0];
            if (a.is_zero()) continue;
            for (long j = 0; j < d; ++j) {
              Cyc w(0l);
              for (long t = 0; t < rho.dim; ++t) w += delta_v[comp][t] * V[j][t];
              put(offset[n] + i * d + j, -(a * w));
            }
          }
          for (auto it = row.begin(); it != row.end();)
            it = it->second.is_zero() ? row.erase(it) : std::next(it);
          if (!row.empty()) rows.push_back(std::move(row));
        }
    }

  SparseMatrix mat(rows.size(), unknowns);
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (const auto& [j, v] : rows[i]) mat.set(i, j, v);
  auto kernel = mat.kernel_basis();

  out.dimension = static_cast<long>(kernel.size());
  for (const auto& vec : kernel) {
    FormalFJSeries f = fj_zero(k, rho, M, N);
    for (long m = 0; m <= M; ++m)
      for (std::size_t i = 0; i < bases[m].size(); ++i)
        for (long j = 0; j < d; ++j) {
          Cyc x = vec[offset[m] + i * d + j];
          if (x.is_zero()) continue;
          for (const auto& [key, val] : bases[m][i].table) {
            std::vector<Cyc> add(rho.dim, Cyc(0l));
            for (long comp = 0; comp < rho.dim; ++comp)
              add[comp] = x * val[0] * V[j][comp];
            f.coeffs[m].add(key.first, key.second, add);
          }
        }
    out.basis.push_back(std::move(f));
  }
  return out;
}

}  // namespace

SymmetricSpace symmetric_space(const Rational& k, const Representation& rho,
                               long M, const Rational& N, bool stabilize) {
  Solve base = solve_once(k, rho, M, N);
  if (stabilize) {
    Solve refined = solve_once(k, rho, M + 1, N + 2);
    if (refined.dimension != base.dimension)
      throw PrecisionTooLow("symmetric-space dimension has not stabilized");
  }
  SymmetricSpace s;
  s.dimension = base.dimension;
  s.basis = std::move(base.basis);
  return s;
}

long expected_dimension(long k) {
  if (k < 0 || k > 40 || k % 2) throw BadWeight("expected_dimension needs even k in [0, 40]");
  std::vector<long> c(k + 1, 0);
  c[0] = 1;
  for (long g : {4, 6, 10, 12})
    for (long t = g; t <= k; ++t) c[t] += c[t - g];
  return c[k];
}

}  // namespace fj
