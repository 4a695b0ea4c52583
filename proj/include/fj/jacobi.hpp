#ifndef FJ_JACOBI_HPP
#define FJ_JACOBI_HPP

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "fj/qseries.hpp"

namespace fj {

enum class Support { holomorphic, weak };

using FourierKey = std::pair<Rational, Rational>;  // (n, r)
using FourierTable = std::map<FourierKey, std::vector<Cyc>>;

// A Jacobi form of weight k and index m as a sparse coefficient table
// (n, r) -> vector of length rep_dim, truncated in q. Holomorphic forms
// satisfy the support bound r^2 <= 4mn; weak forms only have finite
// zeta-support per q-order.
struct JacobiForm {
  Rational weight;
  Rational index;
  long rep_dim = 1;
  Rational prec = 0;
  Support support = Support::holomorphic;
  long period = 1;    // coefficients depend on (4mn - r^2, r mod 2m*period)
  long denom_n = 1;   // declared exponent denominator bounds
  long denom_r = 1;
  FourierTable table;

  void set(const Rational& n, const Rational& r, std::vector<Cyc> v);
  void add(const Rational& n, const Rational& r, const std::vector<Cyc>& v);
  std::vector<Cyc> coeff(const Rational& n, const Rational& r) const;
  bool is_zero() const { return table.empty(); }
  Rational min_exp_q() const;
};

JacobiForm jacobi_from_qz(const QZSeries& s, const Rational& weight,
                          const Rational& index, Support support);
JacobiForm jacobi_from_q(const QSeries& s, const Rational& weight);
QZSeries jacobi_to_qz(const JacobiForm& f, std::size_t component = 0);

JacobiForm jacobi_add(const JacobiForm& a, const JacobiForm& b);
JacobiForm jacobi_scale(const Cyc& s, const JacobiForm& a);
// product; at least one factor must be scalar (rep_dim 1)
JacobiForm jacobi_mul(const JacobiForm& a, const JacobiForm& b);

// the standard weak generators phi_{-2,1} (constant term zeta - 2 + 1/zeta)
// and phi_{0,1} (constant term zeta + 10 + 1/zeta)
std::pair<JacobiForm, JacobiForm> weak_generators(const Rational& prec);

// echelonized basis of J_{k,m} for even k, computed inside the weak span
// E4^a E6^b phi_{-2,1}^{c1} phi_{0,1}^{c2}; deterministic ordering. The
// reported dimension has stabilized at two consecutive even precisions.
std::vector<JacobiForm> jacobi_basis(long k, long m, const Rational& prec);

struct ValidationIssue {
  std::string what;
  Rational n, r;
};
struct ValidationReport {
  std::vector<ValidationIssue> issues;
  bool ok() const { return issues.empty(); }
};
ValidationReport validate_jacobi(const JacobiForm& f);

}  // namespace fj

#endif
