#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"
#include "fj/errors.hpp"
#include "fj/serialize.hpp"
#include "fj/siegel.hpp"

using namespace fj;

namespace {

// byte-identical write/read/write round-trip
template <class T, class From>
void roundtrip(const T& value, From from) {
  std::string a = dumps(to_json(value));
  T back = from(loads(a));
  std::string b = dumps(to_json(back));
  CHECK(a == b);
}

}  // namespace

TEST_CASE("cyclotomic values round-trip byte-identically") {
  roundtrip(Cyc(Rational(-7, 3)), cyc_from_json);
  roundtrip(Cyc::zeta(12, 5) + Cyc::zeta(8, 3), cyc_from_json);
  roundtrip(Cyc::sqrt_int(12), cyc_from_json);
  // serialization canonicalizes to the reduced conductor
  Json j = to_json(Cyc::zeta(12, 2));  // = zeta_6, reduces to conductor 3
  CHECK(j.at("conductor").get<unsigned long>() == 3);
}

TEST_CASE("q-series and q-zeta-series round-trip") {
  roundtrip(eisenstein_q(4, Rational(8)), qseries_from_json);
  roundtrip(eta_q(Rational(5)), qseries_from_json);
  roundtrip(theta11_qz(Rational(4)), qzseries_from_json);
}

TEST_CASE("jacobi forms round-trip") {
  auto [pm2, p0] = weak_generators(Rational(4));
  roundtrip(pm2, jacobi_from_json);
  roundtrip(p0, jacobi_from_json);
  for (const auto& f : jacobi_basis(10, 1, Rational(5))) roundtrip(f, jacobi_from_json);
}

TEST_CASE("representations and discriminant forms round-trip") {
  roundtrip(rep_trivial_power(3), rep_from_json);
  DiscriminantForm d;
  d.orders = {2, 2};
  d.q_gen = {Rational(1, 4), Rational(1, 4)};
  d.bilinear = {{Rational(1, 2), Rational(0)}, {Rational(0), Rational(1, 2)}};
  d.signature_mod8 = 2;
  roundtrip(d, disc_from_json);
  roundtrip(weil_rep_genus2(d), rep_from_json);
}

TEST_CASE("formal series and siegel tables round-trip") {
  auto s = symmetric_space(Rational(10), rep_trivial(), 3, Rational(5), false);
  REQUIRE(!s.basis.empty());
  roundtrip(s.basis[0], fjseries_from_json);
  roundtrip(fj_to_siegel(s.basis[0]), siegel_from_json);
}

TEST_CASE("malformed input raises ParseError") {
  CHECK_THROWS_AS(loads("{not json"), ParseError);
  Json j = to_json(Cyc(1l));
  j["coords"] = Json::array({"1/0x"});
  CHECK_THROWS(cyc_from_json(j));
}
