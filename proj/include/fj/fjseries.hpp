#ifndef FJ_FJSERIES_HPP
#define FJ_FJSERIES_HPP

#include <vector>

#include "fj/jacobi.hpp"
#include "fj/representation.hpp"

namespace fj {

// Formal Fourier-Jacobi series: a finite sequence phi_0 .. phi_M of Jacobi
// forms of common weight k, with phi_m of index m and values in C^{rep.dim},
// all truncated at the shared q-precision qprec.
struct FormalFJSeries {
  Rational weight;
  Representation rep;
  long trunc = 0;     // M
  Rational qprec = 0; // N
  std::vector<JacobiForm> coeffs;  // size trunc + 1, coeffs[m].index = m
};

FormalFJSeries fj_zero(const Rational& k, const Representation& rep, long trunc,
                       const Rational& qprec);
// the constant series 1 (weight 0, trivial rep)
FormalFJSeries fj_one(long trunc, const Rational& qprec);

FormalFJSeries fj_add(const FormalFJSeries& a, const FormalFJSeries& b);
FormalFJSeries fj_scale(const Cyc& s, const FormalFJSeries& a);

// graded tensor product: weight adds, rep = rep_tensor, coefficient of q'^M
// is the convolution sum of Kronecker products
FormalFJSeries fj_tensor(const FormalFJSeries& f, const FormalFJSeries& g);

// pairing of a Hom(rho, sigma)-valued series with a rho-valued series; hom
// coordinate a*dim(sigma)+b is the matrix entry (b, a)
FormalFJSeries fj_pair(const FormalFJSeries& g, const FormalFJSeries& f);
// explicit target representation when sigma is not of trivial type
FormalFJSeries fj_pair(const FormalFJSeries& g, const FormalFJSeries& f,
                       const Representation& sigma);

struct SymmetryReport {
  bool symmetric = true;
  long m = 0, n = 0;   // first violating triple, lex on (m, n, r)
  Rational r;
  long skipped = 0;    // coefficient pairs outside a shared q-window
};
// checks c(phi_m; n, r) = i^{2k} rho(delta) c(phi_n; m, r) for all
// m, n <= M and r^2 <= 4mn within the q-precision
SymmetryReport fj_is_symmetric(const FormalFJSeries& f);

// Laurent-style expansion in q' with meromorphic (QZSeries) coefficients;
// component m carries index m and its own validity window.
struct MeromorphicFJSeries {
  Rational weight;
  Representation rep;
  long trunc = 0;
  std::vector<std::vector<QZSeries>> coeffs;  // [m][component]
};

// multiplicative inverse of a scalar series whose phi_0 has an invertible
// lowest coefficient; coefficient m of the result has weight -k and index m
MeromorphicFJSeries fj_invert(const FormalFJSeries& f);

// expansion of g / h for scalar h
MeromorphicFJSeries fj_meromorphic_expansion(const FormalFJSeries& g,
                                             const FormalFJSeries& h);

// products with a scalar factor, in either order
MeromorphicFJSeries fj_mero_mul(const MeromorphicFJSeries& a, const FormalFJSeries& b);
MeromorphicFJSeries fj_mero_mul(const FormalFJSeries& a, const MeromorphicFJSeries& b);

// equality on the common validity windows, up to min(trunc)
bool mero_eq(const MeromorphicFJSeries& a, const MeromorphicFJSeries& b);
bool mero_is_one(const MeromorphicFJSeries& a);

}  // namespace fj

#endif
