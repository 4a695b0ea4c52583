#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <random>

#include "doctest.h"
#include "fj/cyclotomic.hpp"
#include "fj/errors.hpp"

using namespace fj;

namespace {

// random small cyclotomic number, conductor from a fixed pool
Cyc random_cyc(std::mt19937_64& rng) {
  static const unsigned long conds[] = {1, 2, 3, 4, 6, 8, 12};
  unsigned long n = conds[rng() % 7];
  std::vector<Rational> c(euler_phi(n));
  for (auto& x : c) x = Rational(static_cast<long>(rng() % 21) - 10, 1 + rng() % 6);
  for (auto& x : c) x.canonicalize();
  return Cyc(n, std::move(c));
}

}  // namespace

TEST_CASE("zeta powers and basic identities") {
  CHECK(Cyc::zeta(4) * Cyc::zeta(4) == Cyc(-1l));  // i^2 = -1
  CHECK(Cyc::zeta(3).pow(3) == Cyc(1l));
  CHECK(Cyc::zeta(8).pow(8) == Cyc(1l));
  CHECK(Cyc::zeta(5) + Cyc::zeta(5, 2) + Cyc::zeta(5, 3) + Cyc::zeta(5, 4) == Cyc(-1l));
}

TEST_CASE("division and field axioms") {
  Cyc a = Cyc::zeta(8) + Cyc(Rational(3, 2));
  CHECK(a / a == Cyc(1l));
  CHECK_THROWS_AS(a / Cyc(0l), DivisionByZero);
  // (1+z8)(1-z8) = 1 - z8^2
  Cyc lhs = (Cyc(1l) + Cyc::zeta(8)) * (Cyc(1l) - Cyc::zeta(8));
  CHECK(lhs == Cyc(1l) - Cyc::zeta(8, 2));
}

TEST_CASE("conductor embedding round-trips") {
  Cyc a = Cyc::zeta(6) + Cyc(2l);
  Cyc b = a.embedded(24);
  CHECK(b.conductor() == 24);
  CHECK(b == a);
  // zeta_6 = -zeta_3^2, so the minimal conductor is 3
  CHECK(b.reduced().conductor() == 3);
  CHECK(b.reduced() == a);
  CHECK(Cyc::zeta(12, 2).reduced().conductor() == 3);
}

TEST_CASE("canonical form is idempotent") {
  // x^4 reduces mod Phi_5 and stays reduced
  std::vector<Rational> c(5, Rational(0));
  c[4] = 1;
  Cyc a(5, c);
  CHECK(a.coords().size() == 4);
  Cyc b(5, a.coords());
  CHECK(a == b);
}

TEST_CASE("conjugation and unitarity of roots of unity") {
  for (unsigned long n : {3ul, 4ul, 8ul, 12ul}) {
    Cyc z = Cyc::zeta(n);
    CHECK(z * z.conj() == Cyc(1l));
  }
}

TEST_CASE("exact integer square roots") {
  for (unsigned long n : {1ul, 2ul, 3ul, 4ul, 5ul, 6ul, 8ul, 9ul, 12ul}) {
    Cyc s = Cyc::sqrt_int(n);
    CHECK(s * s == Cyc(static_cast<long>(n)));
  }
}

TEST_CASE("arithmetic is exact on random values") {
  std::mt19937_64 rng(12345);
  for (int t = 0; t < 200; ++t) {
    Cyc a = random_cyc(rng), b = random_cyc(rng);
    CHECK((a + b) - b == a);
    if (!b.is_zero()) CHECK((a * b) / b == a);
  }
}

TEST_CASE("rationality detection") {
  CHECK(Cyc(Rational(7, 3)).is_rational());
  CHECK((Cyc::zeta(8) + Cyc::zeta(8, -1)).reduced().conductor() == 8);
  CHECK_FALSE(Cyc::zeta(3).is_rational());
  Cyc two = Cyc::sqrt_int(2) * Cyc::sqrt_int(2);
  CHECK(two.is_rational());
  CHECK(two.rational_value() == 2);
}
