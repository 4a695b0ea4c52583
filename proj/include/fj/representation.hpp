#ifndef FJ_REPRESENTATION_HPP
#define FJ_REPRESENTATION_HPP

#include <string>
#include <vector>

#include "fj/linalg.hpp"

namespace fj {

// A finite-dimensional unitary representation given extensionally by the
// images of the named elements the engine consumes: delta (the coordinate
// swap with metaplectic component i) and the center elements (-1,1), (1,-1).
struct Representation {
  long dim = 1;
  long level = 1;
  Mat delta;  // image of delta, including the cocycle component
  Mat c1;     // image of (-1, 1)
  Mat c2;     // image of (1, -1); delta^2 = c2 in the metaplectic group
};

Representation rep_trivial();
Representation rep_trivial_power(long d);  // trivial^d = dsum of d trivials
Representation rep_dual(const Representation& rho);
Representation rep_tensor(const Representation& rho, const Representation& sigma);
// Hom(V_rho, V_sigma) = dual(rho) tensor sigma; the hom coordinate
// a*dim(sigma)+b corresponds to the matrix entry (b, a)
Representation rep_hom(const Representation& rho, const Representation& sigma);
Representation rep_dsum(const Representation& rho, const Representation& sigma);

// i^{2k} with the branch fixed as e^{pi i k}; 2k must be integral
Cyc i_pow_2k(const Rational& k);

// exact basis of V_rho(k) = {v : c1 v = v, c2 v = (-1)^{2k} v}, echelonized
std::vector<std::vector<Cyc>> invariant_subspace(const Representation& rho,
                                                 const Rational& k);

struct RepReport {
  std::vector<std::string> issues;
  bool ok() const { return issues.empty(); }
};
RepReport verify_representation(const Representation& rho);

// Finite quadratic module L'/L: invariant-factor generators with a
// Q/Z-valued quadratic form and its bilinear cross terms.
struct DiscriminantForm {
  std::vector<long> orders;                     // d1 | d2 | ..., each > 1
  std::vector<Rational> q_gen;                  // q(g_i) mod 1
  std::vector<std::vector<Rational>> bilinear;  // b(g_i, g_j) mod 1, symmetric
  long signature_mod8 = 0;

  long order() const;
  long level() const;  // smallest N with N q = 0
  std::vector<std::vector<long>> elements() const;  // lex order, deterministic
  Rational q_of(const std::vector<long>& x) const;
  Rational b_of(const std::vector<long>& x, const std::vector<long>& y) const;
};

struct DiscReport {
  std::vector<std::string> issues;
  bool ok() const { return issues.empty(); }
};
DiscReport verify_discriminant_form(const DiscriminantForm& d);

struct WeilImages {
  Mat S, T;
};
// genus-1 Weil representation: T diagonal by e(q), S the normalized
// Gauss-sum matrix e(-sig/8)/sqrt(|D|) * (e(-b(x,y)))
WeilImages weil_rep_genus1(const DiscriminantForm& d);

// genus-2 named-element images on functions (L'/L)^2: delta acts by the
// coordinate swap composed with a configurable eighth-root-of-unity scalar
// (default 1). Supported for even signature, where the action factors
// through the symplectic group.
Representation weil_rep_genus2(const DiscriminantForm& d,
                               const Cyc& delta_scalar = Cyc(1l));

}  // namespace fj

#endif
