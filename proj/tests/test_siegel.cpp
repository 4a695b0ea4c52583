#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"
#include "fj/errors.hpp"
#include "fj/siegel.hpp"

using namespace fj;

TEST_CASE("expected_dimension against the generating function") {
  CHECK(expected_dimension(0) == 1);
  CHECK(expected_dimension(2) == 0);
  CHECK(expected_dimension(4) == 1);
  CHECK(expected_dimension(6) == 1);
  CHECK(expected_dimension(8) == 1);
  CHECK(expected_dimension(10) == 2);
  CHECK(expected_dimension(12) == 3);
  CHECK(expected_dimension(16) == 4);  // 4^4, 4+12, 6+10, 4+6+6
  CHECK_THROWS_AS(expected_dimension(3), BadWeight);
  CHECK_THROWS_AS(expected_dimension(42), BadWeight);
}

TEST_CASE("solver dimensions match the oracle for trivial rep") {
  for (long k : {0l, 2l, 4l, 6l, 10l}) {
    auto s = symmetric_space(Rational(k), rep_trivial(), 4, Rational(6), false);
    CHECK(s.dimension == expected_dimension(k));
    CHECK(s.basis.size() == static_cast<std::size_t>(s.dimension));
  }
  CHECK_THROWS_AS(symmetric_space(Rational(5), rep_trivial(), 2, Rational(4), false),
                  UnsupportedWeight);
}

TEST_CASE("solver basis elements are symmetric and validate") {
  auto s = symmetric_space(Rational(10), rep_trivial(), 4, Rational(6), false);
  REQUIRE(s.dimension == 2);
  for (const auto& f : s.basis) {
    CHECK(fj_is_symmetric(f).symmetric);
    for (const auto& phi : f.coeffs) CHECK(validate_jacobi(phi).ok());
  }
}

TEST_CASE("graded algebra: product of solutions lies in the bigger space") {
  auto s4 = symmetric_space(Rational(4), rep_trivial(), 4, Rational(6), false);
  auto s6 = symmetric_space(Rational(6), rep_trivial(), 4, Rational(6), false);
  REQUIRE(s4.dimension == 1);
  REQUIRE(s6.dimension == 1);
  FormalFJSeries prod = fj_tensor(s4.basis[0], s6.basis[0]);
  CHECK(fj_is_symmetric(prod).symmetric);
  auto s10 = symmetric_space(Rational(10), rep_trivial(), 4, Rational(6), false);
  // membership by row reduction over all stored coefficients
  std::vector<std::tuple<long, Rational, Rational>> keys;
  for (long m = 0; m <= 4; ++m)
    for (const auto& s : s10.basis)
      for (const auto& [k, v] : s.coeffs[m].table) keys.emplace_back(m, k.first, k.second);
  for (long m = 0; m <= 4; ++m)
    for (const auto& [k, v] : prod.coeffs[m].table) keys.emplace_back(m, k.first, k.second);
  std::sort(keys.begin(), keys.end());
  keys.erase(std::unique(keys.begin(), keys.end()), keys.end());
  auto flatten = [&](const FormalFJSeries& f) {
    std::vector<Cyc> v;
    for (const auto& [m, n, r] : keys) v.push_back(f.coeffs[m].coeff(n, r)[0]);
    return v;
  };
  std::vector<std::vector<Cyc>> span;
  for (const auto& s : s10.basis) span.push_back(flatten(s));
  CHECK(in_span(span, flatten(prod)));
}

TEST_CASE("stabilized solve agrees and reports through PrecisionTooLow path") {
  auto s = symmetric_space(Rational(4), rep_trivial(), 4, Rational(6), true);
  CHECK(s.dimension == 1);
}

TEST_CASE("siegel table round-trips") {
  auto s = symmetric_space(Rational(10), rep_trivial(), 4, Rational(6), false);
  for (const auto& f : s.basis) {
    SiegelForm F = fj_to_siegel(f);
    // normalized keys: 0 <= r < 2m, and r = 0 at m = 0
    for (const auto& [key, v] : F.coeffs) {
      auto [n, r, m] = key;
      CHECK(r >= 0);
      if (m == 0)
        CHECK(r == 0);
      else
        CHECK(r < 2 * m);
      CHECK(Rational(4) * m * n >= r * r);
    }
    FormalFJSeries back = siegel_to_fj(F);
    CHECK(fj_is_symmetric(back).symmetric);
    for (long m = 0; m <= f.trunc; ++m) {
      for (const auto& [k, v] : f.coeffs[m].table)
        CHECK(back.coeffs[m].coeff(k.first, k.second)[0] == v[0]);
      for (const auto& [k, v] : back.coeffs[m].table)
        CHECK(f.coeffs[m].coeff(k.first, k.second)[0] == v[0]);
    }
    // table-level round trip the other way
    SiegelForm F2 = fj_to_siegel(back);
    CHECK(F2.coeffs.size() == F.coeffs.size());
    for (const auto& [key, v] : F.coeffs) {
      auto it = F2.coeffs.find(key);
      REQUIRE(it != F2.coeffs.end());
      CHECK(it->second[0] == v[0]);
    }
  }
}

TEST_CASE("swap invariance of the stored table for trivial rep, even weight") {
  auto s = symmetric_space(Rational(10), rep_trivial(), 4, Rational(6), false);
  SiegelForm F = fj_to_siegel(s.basis[0]);
  for (const auto& [key, v] : F.coeffs) {
    auto [n, r, m] = key;
    if (n > F.trunc || m >= F.qprec) continue;  // swapped entry out of window
    // a([[n, r/2],[r/2, m]]) = a([[m, r/2],[r/2, n]])
    Rational r0 = r, n0 = m;
    if (n > 0) {
      Rational width(2);
      width *= n;
      r0 = r - width * rat_floor_div(r, width);
      n0 = m + (r0 * r0 - r * r) / (Rational(4) * n);
    }
    CHECK(F.coeff(n0, r0, n)[0] == v[0]);
  }
}

TEST_CASE("fj_to_siegel rejects asymmetric input") {
  FormalFJSeries f = fj_zero(Rational(4), rep_trivial(), 1, Rational(3));
  f.coeffs[0].set(Rational(1), Rational(0), {Cyc(1l)});
  CHECK_THROWS_AS(fj_to_siegel(f), NotSymmetric);
}

TEST_CASE("zero series maps to the empty table") {
  SiegelForm F = fj_to_siegel(fj_zero(Rational(4), rep_trivial(), 2, Rational(4)));
  CHECK(F.coeffs.empty());
}
