#include "fj/lattice.hpp"

#include <cstdlib>

#include "fj/errors.hpp"

namespace fj {

namespace {

using RatMat = std::vector<std::vector<Rational>>;

IntMat int_identity(std::size_t n) {
  IntMat m(n, std::vector<Integer>(n, 0));
  for (std::size_t i = 0; i < n; ++i) m[i][i] = 1;
  return m;
}

RatMat rat_inverse(const IntMat& a) {
  std::size_t n = a.size();
  RatMat m(n, std::vector<Rational>(n)), inv(n, std::vector<Rational>(n, 0));
  for (std::size_t i = 0; i < n; ++i) {
    inv[i][i] = 1;
    for (std::size_t j = 0; j < n; ++j) m[i][j] = Rational(a[i][j]);
  }
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    while (piv < n && m[piv][col] == 0) ++piv;
    if (piv == n) throw DegenerateGram("matrix is singular");
    std::swap(m[piv], m[col]);
    std::swap(inv[piv], inv[col]);
    Rational d = m[col][col];
    for (std::size_t j = 0; j < n; ++j) {
      m[col][j] /= d;
      inv[col][j] /= d;
    }
    for (std::size_t i = 0; i < n; ++i) {
      if (i == col || m[i][col] == 0) continue;
      Rational f = m[i][col];
      for (std::size_t j = 0; j < n; ++j) {
        m[i][j] -= f * m[col][j];
        inv[i][j] -= f * inv[col][j];
      }
    }
  }
  return inv;
}

}  // namespace

SmithResult smith_normal_form(const IntMat& a) {
  std::size_t rows = a.size(), cols = rows ? a[0].size() : 0;
  SmithResult s{a, int_identity(rows), int_identity(cols)};
  IntMat& d = s.d;

  auto swap_rows = [&](std::size_t i, std::size_t j) {
    std::swap(d[i], d[j]);
    std::swap(s.u[i], s.u[j]);
  };
  auto swap_cols = [&](std::size_t i, std::size_t j) {
    for (auto& row : d) std::swap(row[i], row[j]);
    for (auto& row : s.v) std::swap(row[i], row[j]);
  };
  auto add_row = [&](std::size_t dst, std::size_t src, const Integer& f) {
    for (std::size_t j = 0; j < cols; ++j) d[dst][j] += f * d[src][j];
    for (std::size_t j = 0; j < rows; ++j) s.u[dst][j] += f * s.u[src][j];
  };
  auto add_col = [&](std::size_t dst, std::size_t src, const Integer& f) {
    for (std::size_t i = 0; i < rows; ++i) d[i][dst] += f * d[i][src];
    for (std::size_t i = 0; i < cols; ++i) s.v[i][dst] += f * s.v[i][src];
  };
  auto negate_row = [&](std::size_t i) {
    for (auto& x : d[i]) x = -x;
    for (auto& x : s.u[i]) x = -x;
  };

  std::size_t t = 0;
  for (; t < rows && t < cols; ++t) {
    // pick the nonzero pivot of least absolute value in the remaining block
    std::size_t pi = t, pj = t;
    bool found = false;
    for (std::size_t i = t; i < rows; ++i)
      for (std::size_t j = t; j < cols; ++j)
        if (d[i][j] != 0 && (!found || abs(d[i][j]) < abs(d[pi][pj]))) {
          pi = i;
          pj = j;
          found = true;
        }
    if (!found) break;
    swap_rows(t, pi);
    swap_cols(t, pj);
    bool dirty = true;
    while (dirty) {
      dirty = false;
      for (std::size_t i = t + 1; i < rows; ++i)
        if (d[i][t] != 0) {
          Integer q = d[i][t] / d[t][t];
          add_row(i, t, -q);
          if (d[i][t] != 0) {
            swap_rows(t, i);
            dirty = true;
          }
        }
      for (std::size_t j = t + 1; j < cols; ++j)
        if (d[t][j] != 0) {
          Integer q = d[t][j] / d[t][t];
          add_col(j, t, -q);
          if (d[t][j] != 0) {
            swap_cols(t, j);
            dirty = true;
          }
        }
    }
    if (d[t][t] < 0) negate_row(t);
  }
  // enforce the divisibility chain
  for (bool again = true; again;) {
    again = false;
    for (std::size_t i = 0; i + 1 < t; ++i)
      if (d[i + 1][i + 1] % d[i][i] != 0) {
        // fold d[i+1][i+1] into position (i,i) and redo the local pivot
        add_col(i, i + 1, 1);
        Integer a0 = d[i][i], b0 = d[i + 1][i];
        Integer g, x, y;
        mpz_gcdext(g.get_mpz_t(), x.get_mpz_t(), y.get_mpz_t(), a0.get_mpz_t(),
                   b0.get_mpz_t());
        // rows: (i) <- x*(i) + y*(i+1); (i+1) <- (i+1) - (b0/g)*(new i)
        for (std::size_t j = 0; j < cols; ++j) {
          Integer ni = x * d[i][j] + y * d[i + 1][j];
          d[i + 1][j] = (a0 / g) * d[i + 1][j] - (b0 / g) * d[i][j];
          d[i][j] = ni;
        }
        for (std::size_t j = 0; j < rows; ++j) {
          Integer ni = x * s.u[i][j] + y * s.u[i + 1][j];
          s.u[i + 1][j] = (a0 / g) * s.u[i + 1][j] - (b0 / g) * s.u[i][j];
          s.u[i][j] = ni;
        }
        // clear the remaining off-diagonal entries in the 2x2 block
        Integer q = d[i][i + 1] / d[i][i];
        add_col(i + 1, i, -q);
        if (d[i + 1][i + 1] < 0) negate_row(i + 1);
        again = true;
      }
  }
  return s;
}

std::pair<long, long> inertia(const RatMat& a) {
  RatMat m = a;
  std::size_t n = m.size();
  long pos = 0, neg = 0;
  for (std::size_t t = 0; t < n; ++t) {
    if (m[t][t] == 0) {
      // find a usable diagonal entry, else mix in a row with m[i][t] != 0
      std::size_t i = t + 1;
      while (i < n && m[i][i] == 0) ++i;
      if (i < n) {
        std::swap(m[i], m[t]);
        for (auto& row : m) std::swap(row[i], row[t]);
      } else {
        for (i = t + 1; i < n && m[i][t] == 0; ++i) {
        }
        if (i == n) continue;  // whole row/column zero: rank deficiency
        for (std::size_t j = t; j < n; ++j) m[t][j] += m[i][j];
        for (std::size_t j = t; j < n; ++j) m[j][t] += m[j][i];
      }
    }
    Rational p = m[t][t];
    (p > 0 ? pos : neg)++;
    for (std::size_t i = t + 1; i < n; ++i) {
      Rational f = m[i][t] / p;
      if (f == 0) continue;
      for (std::size_t j = t; j < n; ++j) m[i][j] -= f * m[t][j];
      for (std::size_t j = t; j < n; ++j) m[j][i] -= f * m[j][t];
    }
  }
  return {pos, neg};
}

DiscriminantForm discriminant_form(const EvenLattice& l) {
  std::size_t n = l.gram.size();
  for (const auto& row : l.gram)
    if (row.size() != n) throw IncompatibleShapes("gram matrix is not square");
  for (std::size_t i = 0; i < n; ++i) {
    if (mpz_odd_p(l.gram[i][i].get_mpz_t()))
      throw Error("NotEven", "gram diagonal must be even");
    for (std::size_t j = 0; j < n; ++j)
      if (l.gram[i][j] != l.gram[j][i])
        throw IncompatibleShapes("gram matrix is not symmetric");
  }

  RatMat rg(n, std::vector<Rational>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) rg[i][j] = Rational(l.gram[i][j]);
  auto [pos, neg] = inertia(rg);
  if (pos + neg < static_cast<long>(n)) throw DegenerateGram("gram matrix is singular");
  if (pos != l.sig_pos || neg != l.sig_neg)
    throw IncompatibleShapes("declared signature does not match the gram matrix");

  SmithResult s = smith_normal_form(l.gram);
  RatMat ginv = rat_inverse(l.gram);
  RatMat uinv = rat_inverse(s.u);
  // L'/L = Z^n / G Z^n via x -> Gx; with U G V = D the i-th cyclic factor
  // Z/d_i is generated by G^{-1} (column i of U^{-1})
  DiscriminantForm d;
  d.signature_mod8 = ((pos - neg) % 8 + 8) % 8;
  std::vector<std::vector<Rational>> gens;
  for (std::size_t i = 0; i < n; ++i) {
    if (s.d[i][i] == 1) continue;
    std::vector<Rational> g(n, Rational(0));
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b) g[b] += ginv[b][a] * uinv[a][i];
    gens.push_back(g);
    d.orders.push_back(s.d[i][i].get_si());
  }
  std::size_t m = gens.size();
  d.q_gen.resize(m);
  d.bilinear.assign(m, std::vector<Rational>(m));
  auto pair = [&](const std::vector<Rational>& x, const std::vector<Rational>& y) {
    Rational r(0);
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b)
        r += x[a] * Rational(l.gram[a][b]) * y[b];
    return r;
  };
  for (std::size_t i = 0; i < m; ++i) {
    d.q_gen[i] = mod1(pair(gens[i], gens[i]) / 2);
    for (std::size_t j = 0; j < m; ++j)
      d.bilinear[i][j] = mod1(pair(gens[i], gens[j]));
  }
  return d;
}

long s_space_dim(const DiscriminantForm& d, long r) {
  long n = 1;
  for (long i = 0; i < r; ++i) n *= d.order();
  return n;
}

}  // namespace fj
