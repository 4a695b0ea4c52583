#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"
#include "fj/errors.hpp"
#include "fj/fjseries.hpp"

using namespace fj;

namespace {

// scalar series of weight 4 with phi_m drawn from the holomorphic bases
FormalFJSeries weight4_series(long trunc, const Rational& prec) {
  FormalFJSeries f = fj_zero(Rational(4), rep_trivial(), trunc, prec);
  for (long m = 0; m <= trunc; ++m) {
    auto b = jacobi_basis(4, m, prec);
    if (!b.empty()) f.coeffs[m] = b[0];
  }
  return f;
}

}  // namespace

TEST_CASE("tensor with the constant series 1 is the identity") {
  Rational n(5);
  FormalFJSeries f = weight4_series(2, n);
  FormalFJSeries r = fj_tensor(f, fj_one(2, n));
  CHECK(r.weight == f.weight);
  CHECK(r.rep.dim == 1);
  CHECK(r.trunc == 2);
  for (long m = 0; m <= 2; ++m)
    for (const auto& [k, v] : f.coeffs[m].table)
      CHECK(r.coeffs[m].coeff(k.first, k.second)[0] == v[0]);
}

TEST_CASE("tensor bookkeeping and the q'^2 convolution oracle") {
  Rational n(5);
  FormalFJSeries f = weight4_series(2, n), g = weight4_series(2, n);
  FormalFJSeries t = fj_tensor(f, g);
  CHECK(t.weight == Rational(8));
  CHECK(t.rep.dim == 1);
  // independent convolution at m=2, probe a handful of (n, r)
  for (auto [pn, pr] : {std::pair<long, long>{1, 0}, {2, 1}, {1, 2}}) {
    Cyc want(0l);
    for (long j = 0; j <= 2; ++j)
      for (const auto& [ka, va] : f.coeffs[j].table)
        for (const auto& [kb, vb] : g.coeffs[2 - j].table)
          if (ka.first + kb.first == pn && ka.second + kb.second == pr)
            want += va[0] * vb[0];
    CHECK(t.coeffs[2].coeff(Rational(pn), Rational(pr))[0] == want);
  }
  FormalFJSeries other = weight4_series(2, Rational(4));
  CHECK_THROWS_AS(fj_tensor(f, other), IncompatiblePrecision);
}

TEST_CASE("pairing: identity-valued constant, and the scalar case") {
  Rational n(5);
  FormalFJSeries f = weight4_series(2, n);
  // identity of Hom(C, C) is the scalar constant 1
  FormalFJSeries idser = fj_one(2, n);
  FormalFJSeries p = fj_pair(idser, f);
  for (long m = 0; m <= 2; ++m)
    for (const auto& [k, v] : f.coeffs[m].table)
      CHECK(p.coeffs[m].coeff(k.first, k.second)[0] == v[0]);
  // all-trivial pairing agrees with the tensor values
  FormalFJSeries t = fj_tensor(f, f), q = fj_pair(f, f);
  for (long m = 0; m <= 2; ++m)
    for (const auto& [k, v] : t.coeffs[m].table)
      CHECK(q.coeffs[m].coeff(k.first, k.second)[0] == v[0]);
  CHECK_THROWS_AS(fj_pair(f, weight4_series(2, n), rep_trivial_power(2)),
                  IncompatibleShapes);
}

TEST_CASE("symmetry check: hand-built pass and fail, deterministic violation") {
  FormalFJSeries f = fj_zero(Rational(4), rep_trivial(), 1, Rational(3));
  f.coeffs[0].set(Rational(1), Rational(0), {Cyc(7l)});
  f.coeffs[1].set(Rational(0), Rational(0), {Cyc(7l)});
  f.coeffs[1].set(Rational(1), Rational(0), {Cyc(3l)});
  auto rep = fj_is_symmetric(f);
  CHECK(rep.symmetric);

  f.coeffs[1].set(Rational(0), Rational(0), {Cyc(6l)});
  rep = fj_is_symmetric(f);
  CHECK_FALSE(rep.symmetric);
  CHECK(rep.m == 0);
  CHECK(rep.n == 1);
  CHECK(rep.r == 0);

  // zero series passes for any weight
  CHECK(fj_is_symmetric(fj_zero(Rational(4), rep_trivial(), 2, Rational(3))).symmetric);
}

TEST_CASE("odd weight forces the diagonal to vanish") {
  FormalFJSeries f = fj_zero(Rational(1), rep_trivial(), 1, Rational(3));
  f.coeffs[1].set(Rational(1), Rational(0), {Cyc(1l)});
  auto rep = fj_is_symmetric(f);
  CHECK_FALSE(rep.symmetric);
  CHECK(rep.m == 1);
  CHECK(rep.n == 1);
}

TEST_CASE("inversion: constants and the geometric series") {
  Rational n(6);
  FormalFJSeries one = fj_one(2, n);
  CHECK(mero_is_one(fj_invert(one)));

  // f = 1 + phi_1 q' with phi_1 in J_{0,1}-weak position: use the weight-4
  // series shifted to start at 1
  FormalFJSeries f = fj_one(2, n);
  auto b41 = jacobi_basis(4, 1, n);
  REQUIRE(!b41.empty());
  f.coeffs[1] = b41[0];
  MeromorphicFJSeries inv = fj_invert(f);
  // chi_1 = -phi_1, chi_2 = phi_1^2
  QZSeries p1 = jacobi_to_qz(b41[0]);
  CHECK(qz_eq(inv.coeffs[1][0], qz_scale(Cyc(-1l), p1)));
  CHECK(qz_eq(inv.coeffs[2][0], qz_mul(p1, p1)));
  CHECK(mero_is_one(fj_mero_mul(inv, f)));
  CHECK(mero_is_one(fj_mero_mul(f, inv)));
}

TEST_CASE("inversion with phi_0 = E4 matches the q-series oracle") {
  Rational n(6);
  FormalFJSeries f = weight4_series(2, n);
  MeromorphicFJSeries inv = fj_invert(f);
  // 1/E4 = 1 - 240q + 55440q^2 - ...
  CHECK(inv.weight == Rational(-4));
  CHECK(inv.coeffs[0][0].coeff(Rational(0), Rational(0)) == Cyc(1l));
  CHECK(inv.coeffs[0][0].coeff(Rational(1), Rational(0)) == Cyc(-240l));
  CHECK(inv.coeffs[0][0].coeff(Rational(2), Rational(0)) == Cyc(55440l));
  CHECK(mero_is_one(fj_mero_mul(inv, f)));
  CHECK(mero_is_one(fj_mero_mul(f, inv)));

  FormalFJSeries z = fj_zero(Rational(4), rep_trivial(), 2, n);
  CHECK_THROWS_AS(fj_invert(z), NonInvertibleLeadingCoefficient);
}

TEST_CASE("meromorphic expansion: g/g = 1, cancellation, well-definedness") {
  Rational n(6);
  FormalFJSeries g = weight4_series(2, n);
  CHECK(mero_is_one(fj_meromorphic_expansion(g, g)));

  // (g*h)/h agrees with the expansion of g
  FormalFJSeries h = weight4_series(2, n);
  h.coeffs[1] = jacobi_basis(4, 1, n)[0];
  FormalFJSeries gh = fj_tensor(g, h);
  MeromorphicFJSeries lhs = fj_meromorphic_expansion(gh, h);
  MeromorphicFJSeries g_plain = fj_mero_mul(fj_invert(fj_one(2, n)), g);
  CHECK(mero_eq(lhs, g_plain));

  // g/h = (g*w)/(h*w) for a scalar test series w
  FormalFJSeries w = weight4_series(2, n);
  w.coeffs[2] = jacobi_basis(4, 2, n)[0];
  MeromorphicFJSeries direct = fj_meromorphic_expansion(g, h);
  MeromorphicFJSeries mixed = fj_meromorphic_expansion(fj_tensor(g, w), fj_tensor(h, w));
  CHECK(mero_eq(direct, mixed));
}
