#ifndef FJ_LATTICE_HPP
#define FJ_LATTICE_HPP

#include <vector>

#include "fj/rational.hpp"
#include "fj/representation.hpp"

namespace fj {

using IntMat = std::vector<std::vector<Integer>>;

// Even lattice given by its Gram matrix (symmetric, even diagonal) and its
// declared signature; the signature is cross-checked against the Gram
// matrix by exact rational diagonalization.
struct EvenLattice {
  IntMat gram;
  long sig_pos = 0, sig_neg = 0;
};

struct SmithResult {
  IntMat d, u, v;  // u * a * v = d, u and v unimodular, d_1 | d_2 | ...
};
SmithResult smith_normal_form(const IntMat& a);

// inertia (positive, negative) of a symmetric rational matrix
std::pair<long, long> inertia(const std::vector<std::vector<Rational>>& a);

// L'/L with its Q/Z quadratic form, invariant factors ascending
DiscriminantForm discriminant_form(const EvenLattice& l);

// dim of the space of functions (L'/L)^r -> C
long s_space_dim(const DiscriminantForm& d, long r);

}  // namespace fj

#endif
