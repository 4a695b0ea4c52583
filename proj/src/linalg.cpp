#include "fj/linalg.hpp"

#include <algorithm>

#include "fj/errors.hpp"

namespace fj {

std::size_t SparseMatrix::nnz() const {
  std::size_t n = 0;
  for (const auto& r : row_) n += r.size();
  return n;
}

void SparseMatrix::set(std::size_t i, std::size_t j, const Cyc& v) {
  if (v.is_zero())
    row_[i].erase(j);
  else
    row_[i][j] = v;
}

void SparseMatrix::add(std::size_t i, std::size_t j, const Cyc& v) {
  if (v.is_zero()) return;
  auto it = row_[i].find(j);
  if (it == row_[i].end()) {
    row_[i][j] = v;
  } else {
    it->second += v;
    if (it->second.is_zero()) row_[i].erase(it);
  }
}

Cyc SparseMatrix::get(std::size_t i, std::size_t j) const {
  auto it = row_[i].find(j);
  return it == row_[i].end() ? Cyc() : it->second;
}

std::vector<Cyc> SparseMatrix::apply(const std::vector<Cyc>& v) const {
  std::vector<Cyc> out(rows_, Cyc());
  for (std::size_t i = 0; i < rows_; ++i)
    for (const auto& [j, a] : row_[i]) out[i] += a * v[j];
  return out;
}

std::vector<std::size_t> SparseMatrix::rref(
    std::vector<std::map<std::size_t, Cyc>>& r) const {
  std::vector<std::size_t> pivots;       // pivot column of each echelon row
  std::vector<std::size_t> order;        // rows already placed, in echelon order
  std::vector<bool> used(r.size(), false);
  for (std::size_t col = 0; col < cols_; ++col) {
    // first unused row with a nonzero entry in this column
    std::size_t sel = SIZE_MAX;
    for (std::size_t i = 0; i < r.size(); ++i) {
      if (used[i]) continue;
      auto it = r[i].find(col);
      if (it != r[i].end()) {
        sel = i;
        break;
      }
    }
    if (sel == SIZE_MAX) continue;
    Cyc inv = r[sel].at(col).inverse();
    for (auto& [j, v] : r[sel]) v *= inv;
    for (std::size_t i = 0; i < r.size(); ++i) {
      if (i == sel) continue;
      auto it = r[i].find(col);
      if (it == r[i].end()) continue;
      Cyc f = it->second;
      for (const auto& [j, v] : r[sel]) {
        Cyc nv = (j == col) ? Cyc() : [&] {
          auto jt = r[i].find(j);
          Cyc cur = jt == r[i].end() ? Cyc() : jt->second;
          return cur - f * v;
        }();
        if (nv.is_zero())
          r[i].erase(j);
        else
          r[i][j] = nv;
      }
    }
    used[sel] = true;
    order.push_back(sel);
    pivots.push_back(col);
  }
  // reorder rows into echelon order
  std::vector<std::map<std::size_t, Cyc>> out;
  out.reserve(r.size());
  for (std::size_t i : order) out.push_back(std::move(r[i]));
  r = std::move(out);
  return pivots;
}

std::vector<std::map<std::size_t, Cyc>> SparseMatrix::echelon_rows() const {
  auto r = row_;
  rref(r);
  return r;
}

std::size_t SparseMatrix::rank() const {
  auto r = row_;
  return rref(r).size();
}

std::vector<std::vector<Cyc>> SparseMatrix::kernel_basis() const {
  auto r = row_;
  std::vector<std::size_t> pivots = rref(r);
  std::vector<bool> is_pivot(cols_, false);
  for (std::size_t p : pivots) is_pivot[p] = true;
  std::vector<std::vector<Cyc>> basis;
  for (std::size_t f = 0; f < cols_; ++f) {
    if (is_pivot[f]) continue;
    std::vector<Cyc> v(cols_, Cyc());
    v[f] = Cyc(1l);
    for (std::size_t i = 0; i < pivots.size(); ++i) {
      auto it = r[i].find(f);
      if (it != r[i].end()) v[pivots[i]] = -it->second;
    }
    basis.push_back(std::move(v));
  }
  return basis;
}

Mat mat_identity(std::size_t n) {
  Mat m(n, std::vector<Cyc>(n, Cyc()));
  for (std::size_t i = 0; i < n; ++i) m[i][i] = Cyc(1l);
  return m;
}

Mat mat_zero(std::size_t r, std::size_t c) { return Mat(r, std::vector<Cyc>(c, Cyc())); }

Mat mat_mul(const Mat& a, const Mat& b) {
  std::size_t n = a.size(), k = b.size(), m = b.empty() ? 0 : b[0].size();
  if (!a.empty() && a[0].size() != k)
    throw IncompatibleShapes("matrix product shapes");
  Mat c = mat_zero(n, m);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t l = 0; l < k; ++l) {
      if (a[i][l].is_zero()) continue;
      for (std::size_t j = 0; j < m; ++j) c[i][j] += a[i][l] * b[l][j];
    }
  return c;
}

Mat mat_add(const Mat& a, const Mat& b) {
  Mat c = a;
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < a[i].size(); ++j) c[i][j] += b[i][j];
  return c;
}

Mat mat_scale(const Cyc& s, const Mat& a) {
  Mat c = a;
  for (auto& row : c)
    for (auto& v : row) v *= s;
  return c;
}

Mat mat_transpose(const Mat& a) {
  if (a.empty()) return a;
  Mat c = mat_zero(a[0].size(), a.size());
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < a[i].size(); ++j) c[j][i] = a[i][j];
  return c;
}

Mat mat_conj(const Mat& a) {
  Mat c = a;
  for (auto& row : c)
    for (auto& v : row) v = v.conj();
  return c;
}

Mat mat_conj_transpose(const Mat& a) { return mat_transpose(mat_conj(a)); }

Mat mat_kron(const Mat& a, const Mat& b) {
  std::size_t ar = a.size(), ac = ar ? a[0].size() : 0;
  std::size_t br = b.size(), bc = br ? b[0].size() : 0;
  Mat c = mat_zero(ar * br, ac * bc);
  for (std::size_t i = 0; i < ar; ++i)
    for (std::size_t j = 0; j < ac; ++j) {
      if (a[i][j].is_zero()) continue;
      for (std::size_t k = 0; k < br; ++k)
        for (std::size_t l = 0; l < bc; ++l)
          c[i * br + k][j * bc + l] = a[i][j] * b[k][l];
    }
  return c;
}

Mat mat_dsum(const Mat& a, const Mat& b) {
  std::size_t ar = a.size(), ac = ar ? a[0].size() : 0;
  std::size_t br = b.size(), bc = br ? b[0].size() : 0;
  Mat c = mat_zero(ar + br, ac + bc);
  for (std::size_t i = 0; i < ar; ++i)
    for (std::size_t j = 0; j < ac; ++j) c[i][j] = a[i][j];
  for (std::size_t i = 0; i < br; ++i)
    for (std::size_t j = 0; j < bc; ++j) c[ar + i][ac + j] = b[i][j];
  return c;
}

Mat mat_inverse(const Mat& a) {
  std::size_t n = a.size();
  Mat w = a, inv = mat_identity(n);
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t sel = SIZE_MAX;
    for (std::size_t i = col; i < n; ++i)
      if (!w[i][col].is_zero()) {
        sel = i;
        break;
      }
    if (sel == SIZE_MAX) throw DivisionByZero("singular matrix");
    std::swap(w[col], w[sel]);
    std::swap(inv[col], inv[sel]);
    Cyc f = w[col][col].inverse();
    for (std::size_t j = 0; j < n; ++j) {
      w[col][j] *= f;
      inv[col][j] *= f;
    }
    for (std::size_t i = 0; i < n; ++i) {
      if (i == col || w[i][col].is_zero()) continue;
      Cyc g = w[i][col];
      for (std::size_t j = 0; j < n; ++j) {
        w[i][j] -= g * w[col][j];
        inv[i][j] -= g * inv[col][j];
      }
    }
  }
  return inv;
}

bool mat_eq(const Mat& a, const Mat& b) {
  if (a.size() != b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i].size() != b[i].size()) return false;
    for (std::size_t j = 0; j < a[i].size(); ++j)
      if (a[i][j] != b[i][j]) return false;
  }
  return true;
}

std::vector<Cyc> mat_apply(const Mat& a, const std::vector<Cyc>& v) {
  std::vector<Cyc> out(a.size(), Cyc());
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < v.size(); ++j) out[i] += a[i][j] * v[j];
  return out;
}

bool in_span(const std::vector<std::vector<Cyc>>& span, const std::vector<Cyc>& v) {
  if (span.empty()) {
    for (const auto& x : v)
      if (!x.is_zero()) return false;
    return true;
  }
  std::size_t len = v.size();
  SparseMatrix with(len, span.size() + 1), without(len, span.size());
  for (std::size_t j = 0; j < span.size(); ++j)
    for (std::size_t i = 0; i < len; ++i) {
      with.set(i, j, span[j][i]);
      without.set(i, j, span[j][i]);
    }
  for (std::size_t i = 0; i < len; ++i) with.set(i, span.size(), v[i]);
  return with.rank() == without.rank();
}

}  // namespace fj
