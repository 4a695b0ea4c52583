#include "fj/serialize.hpp"

#include "fj/errors.hpp"

namespace fj {

namespace {

Json rat(const Rational& r) { return rat_str(r); }
Rational unrat(const Json& j) { return rat_parse(j.get<std::string>()); }

Json vec_json(const std::vector<Cyc>& v) {
  Json a = Json::array();
  for (const auto& x : v) a.push_back(to_json(x));
  return a;
}

std::vector<Cyc> vec_from(const Json& j) {
  std::vector<Cyc> v;
  for (const auto& x : j) v.push_back(cyc_from_json(x));
  return v;
}

Json mat_json(const Mat& m) {
  Json a = Json::array();
  for (const auto& row : m) a.push_back(vec_json(row));
  return a;
}

Mat mat_from(const Json& j) {
  Mat m;
  for (const auto& row : j) m.push_back(vec_from(row));
  return m;
}

}  // namespace

Json to_json(const Cyc& v) {
  Cyc r = v.reduced();
  Json coords = Json::array();
  for (const auto& c : r.coords()) coords.push_back(rat(c));
  return Json{{"conductor", r.conductor()}, {"coords", coords}};
}

Cyc cyc_from_json(const Json& j) {
  std::vector<Rational> coords;
  for (const auto& c : j.at("coords")) coords.push_back(unrat(c));
  return Cyc(j.at("conductor").get<unsigned long>(), std::move(coords));
}

Json to_json(const QSeries& s) {
  Json terms = Json::array();
  for (const auto& [e, v] : s.c)
    terms.push_back(Json{{"e", rat(e)}, {"value", to_json(v)}});
  return Json{{"denom", s.denom}, {"prec", rat(s.prec)}, {"terms", terms}};
}

QSeries qseries_from_json(const Json& j) {
  QSeries s;
  s.denom = j.at("denom").get<long>();
  s.prec = unrat(j.at("prec"));
  for (const auto& t : j.at("terms"))
    s.set(unrat(t.at("e")), cyc_from_json(t.at("value")));
  return s;
}

Json to_json(const QZSeries& s) {
  Json terms = Json::array();
  for (const auto& [k, v] : s.c)
    terms.push_back(Json{{"n", rat(k.first)}, {"r", rat(k.second)}, {"value", to_json(v)}});
  return Json{{"denom_q", s.denom_q},
              {"denom_z", s.denom_z},
              {"prec", rat(s.prec)},
              {"terms", terms}};
}

QZSeries qzseries_from_json(const Json& j) {
  QZSeries s;
  s.denom_q = j.at("denom_q").get<long>();
  s.denom_z = j.at("denom_z").get<long>();
  s.prec = unrat(j.at("prec"));
  for (const auto& t : j.at("terms"))
    s.set(unrat(t.at("n")), unrat(t.at("r")), cyc_from_json(t.at("value")));
  return s;
}

Json to_json(const JacobiForm& f) {
  Json table = Json::array();
  for (const auto& [k, v] : f.table)
    table.push_back(Json{{"n", rat(k.first)}, {"r", rat(k.second)}, {"value", vec_json(v)}});
  return Json{{"weight", rat(f.weight)},
              {"index", rat(f.index)},
              {"rep_dim", f.rep_dim},
              {"prec", rat(f.prec)},
              {"support", f.support == Support::weak ? "weak" : "holomorphic"},
              {"period", f.period},
              {"denom_n", f.denom_n},
              {"denom_r", f.denom_r},
              {"table", table}};
}

JacobiForm jacobi_from_json(const Json& j) {
  JacobiForm f;
  f.weight = unrat(j.at("weight"));
  f.index = unrat(j.at("index"));
  f.rep_dim = j.at("rep_dim").get<long>();
  f.prec = unrat(j.at("prec"));
  std::string sup = j.at("support").get<std::string>();
  if (sup != "weak" && sup != "holomorphic") throw ParseError("bad support tag");
  f.support = sup == "weak" ? Support::weak : Support::holomorphic;
  f.period = j.at("period").get<long>();
  f.denom_n = j.at("denom_n").get<long>();
  f.denom_r = j.at("denom_r").get<long>();
  for (const auto& t : j.at("table"))
    f.set(unrat(t.at("n")), unrat(t.at("r")), vec_from(t.at("value")));
  return f;
}

Json to_json(const Representation& r) {
  return Json{{"dim", r.dim},
              {"level", r.level},
              {"delta", mat_json(r.delta)},
              {"c1", mat_json(r.c1)},
              {"c2", mat_json(r.c2)}};
}

Representation rep_from_json(const Json& j) {
  Representation r;
  r.dim = j.at("dim").get<long>();
  r.level = j.at("level").get<long>();
  r.delta = mat_from(j.at("delta"));
  r.c1 = mat_from(j.at("c1"));
  r.c2 = mat_from(j.at("c2"));
  return r;
}

Json to_json(const DiscriminantForm& d) {
  Json q = Json::array(), b = Json::array();
  for (const auto& x : d.q_gen) q.push_back(rat(x));
  for (const auto& row : d.bilinear) {
    Json r = Json::array();
    for (const auto& x : row) r.push_back(rat(x));
    b.push_back(r);
  }
  return Json{{"orders", d.orders},
              {"q_gen", q},
              {"bilinear", b},
              {"signature_mod8", d.signature_mod8}};
}

DiscriminantForm disc_from_json(const Json& j) {
  DiscriminantForm d;
  d.orders = j.at("orders").get<std::vector<long>>();
  for (const auto& x : j.at("q_gen")) d.q_gen.push_back(unrat(x));
  for (const auto& row : j.at("bilinear")) {
    d.bilinear.emplace_back();
    for (const auto& x : row) d.bilinear.back().push_back(unrat(x));
  }
  d.signature_mod8 = j.at("signature_mod8").get<long>();
  return d;
}

Json to_json(const FormalFJSeries& f) {
  Json coeffs = Json::array();
  for (const auto& c : f.coeffs) coeffs.push_back(to_json(c));
  return Json{{"weight", rat(f.weight)},
              {"rep", to_json(f.rep)},
              {"M", f.trunc},
              {"N", rat(f.qprec)},
              {"coeffs", coeffs}};
}

FormalFJSeries fjseries_from_json(const Json& j) {
  FormalFJSeries f;
  f.weight = unrat(j.at("weight"));
  f.rep = rep_from_json(j.at("rep"));
  f.trunc = j.at("M").get<long>();
  f.qprec = unrat(j.at("N"));
  for (const auto& c : j.at("coeffs")) f.coeffs.push_back(jacobi_from_json(c));
  if (f.coeffs.size() != static_cast<std::size_t>(f.trunc) + 1)
    throw ParseError("coefficient count does not match M");
  return f;
}

Json to_json(const SiegelForm& f) {
  Json coeffs = Json::array();
  for (const auto& [k, v] : f.coeffs) {
    auto [n, r, m] = k;
    coeffs.push_back(Json{
        {"n", rat(n)}, {"r", rat(r)}, {"m", rat(m)}, {"value", vec_json(v)}});
  }
  return Json{{"weight", rat(f.weight)},
              {"rep", to_json(f.rep)},
              {"M", f.trunc},
              {"N", rat(f.qprec)},
              {"coeffs", coeffs}};
}

SiegelForm siegel_from_json(const Json& j) {
  SiegelForm f;
  f.weight = unrat(j.at("weight"));
  f.rep = rep_from_json(j.at("rep"));
  f.trunc = j.at("M").get<long>();
  f.qprec = unrat(j.at("N"));
  for (const auto& t : j.at("coeffs"))
    f.coeffs.emplace(
        std::make_tuple(unrat(t.at("n")), unrat(t.at("r")), unrat(t.at("m"))),
        vec_from(t.at("value")));
  return f;
}

std::string dumps(const Json& j) { return j.dump(2) + "\n"; }

Json loads(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(e.what());
  }
}

}  // namespace fj
