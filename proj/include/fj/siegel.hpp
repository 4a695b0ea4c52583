#ifndef FJ_SIEGEL_HPP
#define FJ_SIEGEL_HPP

#include <map>
#include <tuple>
#include <vector>

#include "fj/fjseries.hpp"

namespace fj {

// Fourier coefficient table a(T) over T = [[n, r/2], [r/2, m]] >= 0, with r
// normalized into the fundamental window 0 <= r < 2m*period before storage.
struct SiegelForm {
  Rational weight;
  Representation rep;
  long trunc = 0;      // bound on m
  Rational qprec = 0;  // window bound on n
  std::map<std::tuple<Rational, Rational, Rational>, std::vector<Cyc>>
      coeffs;  // (n, r, m) -> value

  std::vector<Cyc> coeff(const Rational& n, const Rational& r, const Rational& m) const;
};

// table a([[n, r/2],[r/2, m]]) := c(phi_m; n, r); requires a symmetric input
SiegelForm fj_to_siegel(const FormalFJSeries& f);
// inverse on the image: slices the table at fixed m and unfolds the r-window
FormalFJSeries siegel_to_fj(const SiegelForm& F);

struct SymmetricSpace {
  long dimension = 0;
  std::vector<FormalFJSeries> basis;
};
// exact kernel of the symmetry constraints on (jacobi_basis tensor V_rho(k))
// coordinates; with stabilize the dimension must be unchanged at (M+1, N+2)
SymmetricSpace symmetric_space(const Rational& k, const Representation& rho,
                               long M, const Rational& N, bool stabilize = true);

// coefficient of t^k in 1/((1-t^4)(1-t^6)(1-t^10)(1-t^12)); k even, 0..40
long expected_dimension(long k);

}  // namespace fj

#endif
