#ifndef FJ_LINALG_HPP
#define FJ_LINALG_HPP

#include <cstddef>
#include <map>
#include <vector>

#include "fj/cyclotomic.hpp"

namespace fj {

// Sparse matrix over cyclotomic scalars; zero entries are never stored.
class SparseMatrix {
 public:
  SparseMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), row_(rows) {}

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  std::size_t nnz() const;

  void set(std::size_t i, std::size_t j, const Cyc& v);
  void add(std::size_t i, std::size_t j, const Cyc& v);
  Cyc get(std::size_t i, std::size_t j) const;
  const std::map<std::size_t, Cyc>& row(std::size_t i) const { return row_[i]; }

  std::size_t rank() const;
  // basis of the right kernel, in reduced echelon normal form, ordered by
  // ascending free column; deterministic
  std::vector<std::vector<Cyc>> kernel_basis() const;

  std::vector<Cyc> apply(const std::vector<Cyc>& v) const;

  // nonzero rows of the reduced row echelon form, in echelon order
  std::vector<std::map<std::size_t, Cyc>> echelon_rows() const;

 private:
  std::size_t rows_, cols_;
  std::vector<std::map<std::size_t, Cyc>> row_;

  // returns pivot columns of the reduced row echelon form (in place on a copy)
  std::vector<std::size_t> rref(std::vector<std::map<std::size_t, Cyc>>& r) const;
};

// small dense matrices for representation images
using Mat = std::vector<std::vector<Cyc>>;

Mat mat_identity(std::size_t n);
Mat mat_zero(std::size_t r, std::size_t c);
Mat mat_mul(const Mat& a, const Mat& b);
Mat mat_add(const Mat& a, const Mat& b);
Mat mat_scale(const Cyc& s, const Mat& a);
Mat mat_transpose(const Mat& a);
Mat mat_conj(const Mat& a);
Mat mat_conj_transpose(const Mat& a);
Mat mat_kron(const Mat& a, const Mat& b);
Mat mat_dsum(const Mat& a, const Mat& b);
Mat mat_inverse(const Mat& a);  // throws DivisionByZero if singular
bool mat_eq(const Mat& a, const Mat& b);
std::vector<Cyc> mat_apply(const Mat& a, const std::vector<Cyc>& v);

// true if v lies in the span of the given vectors (all of equal length)
bool in_span(const std::vector<std::vector<Cyc>>& span, const std::vector<Cyc>& v);

}  // namespace fj

#endif
