#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"

#include "fj/errors.hpp"
#include "fj/serialize.hpp"
#include "fj/siegel.hpp"

namespace {

constexpr const char* kVersion = "0.1.0";

using fj::Json;

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw fj::Error("IOError", "cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

// FNV-1a, for reproducible input digests in manifests
std::string digest(const std::string& bytes) {
  unsigned long long h = 1469598103934665603ull;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 1099511628211ull;
  }
  char buf[32];
  std::snprintf(buf, sizeof buf, "fnv1a:%016llx", h);
  return buf;
}

long env_threads() {
  const char* v = std::getenv("FJ_ENGINE_THREADS");
  if (!v) return 1;
  long n = std::atol(v);
  return n > 0 ? n : 1;
}

struct Emitter {
  std::string command;
  Json params = Json::object();
  Json inputs = Json::object();
  std::string out_path;

  Json load(const std::string& path) {
    std::string bytes = read_file(path);
    inputs[path] = digest(bytes);
    return fj::loads(bytes);
  }

  void emit(Json artifact) {
    Json doc{{"artifact", std::move(artifact)},
             {"manifest", Json{{"version", kVersion},
                               {"command", command},
                               {"params", params},
                               {"inputs", inputs},
                               {"threads", env_threads()}}}};
    std::string text = fj::dumps(doc);
    if (out_path.empty()) {
      std::cout << text;
    } else {
      std::ofstream out(out_path, std::ios::binary);
      if (!out) throw fj::Error("IOError", "cannot write " + out_path);
      out << text;
    }
  }
};

Json mero_json(const fj::MeromorphicFJSeries& m) {
  Json coeffs = Json::array();
  for (const auto& comp : m.coeffs) {
    Json row = Json::array();
    for (const auto& s : comp) row.push_back(fj::to_json(s));
    coeffs.push_back(row);
  }
  return Json{{"weight", fj::rat_str(m.weight)},
              {"rep", fj::to_json(m.rep)},
              {"M", m.trunc},
              {"coeffs", coeffs}};
}

fj::IntMat read_gram(const std::string& path) {
  std::istringstream in(read_file(path));
  fj::IntMat g;
  std::string line;
  while (std::getline(in, line)) {
    std::istringstream row(line);
    std::vector<fj::Integer> r;
    std::string tok;
    while (row >> tok) r.emplace_back(tok);
    if (!r.empty()) g.push_back(std::move(r));
  }
  if (g.empty()) throw fj::ParseError("empty gram matrix in " + path);
  return g;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact engine for genus-2 formal Fourier-Jacobi series"};
  app.set_version_flag("--version", kVersion);
  app.require_subcommand(1);

  long k = 0, m = 0, M = 2, max_k = 12;
  std::string N = "6";
  std::string in_a, in_b, rep_path, out_path;
  bool stabilize = true;

  auto* jacobi = app.add_subcommand("jacobi", "Jacobi form spaces");
  auto* jbasis = jacobi->add_subcommand("basis", "echelonized basis of J_{k,m}");
  jbasis->add_option("-k", k, "weight")->required();
  jbasis->add_option("-m", m, "index")->required();
  jbasis->add_option("-N", N, "q-precision")->required();
  jbasis->add_option("-o,--out", out_path, "output file (default stdout)");

  auto* fjc = app.add_subcommand("fj", "formal Fourier-Jacobi series algebra");
  auto* fcheck = fjc->add_subcommand("check", "symmetry check of a series file");
  fcheck->add_option("path", in_a)->required()->check(CLI::ExistingFile);
  auto* ftensor = fjc->add_subcommand("tensor", "tensor product of two series");
  ftensor->add_option("a", in_a)->required()->check(CLI::ExistingFile);
  ftensor->add_option("b", in_b)->required()->check(CLI::ExistingFile);
  ftensor->add_option("-o,--out", out_path);
  auto* fpair = fjc->add_subcommand("pair", "pair a Hom-valued series with a series");
  fpair->add_option("g", in_a)->required()->check(CLI::ExistingFile);
  fpair->add_option("f", in_b)->required()->check(CLI::ExistingFile);
  fpair->add_option("-o,--out", out_path);
  auto* finvert = fjc->add_subcommand("invert", "formal Laurent inverse");
  finvert->add_option("path", in_a)->required()->check(CLI::ExistingFile);
  finvert->add_option("-o,--out", out_path);
  auto* fquot = fjc->add_subcommand("quotient", "meromorphic expansion of g/h");
  fquot->add_option("numerator", in_a)->required()->check(CLI::ExistingFile);
  fquot->add_option("denominator", in_b)->required()->check(CLI::ExistingFile);
  fquot->add_option("-o,--out", out_path);

  auto* siegel = app.add_subcommand("siegel", "symmetric series and dimensions");
  auto* ssolve = siegel->add_subcommand("solve", "solve the symmetry constraints");
  ssolve->add_option("-k", k, "weight")->required();
  ssolve->add_option("-M", M, "index truncation")->required();
  ssolve->add_option("-N", N, "q-precision")->required();
  ssolve->add_option("--rep", rep_path, "representation file (default trivial)")
      ->check(CLI::ExistingFile);
  ssolve->add_flag("--stabilize,!--no-stabilize", stabilize,
                   "require dimension stability at (M+1, N+2)");
  ssolve->add_option("-o,--out", out_path);
  auto* sdims = siegel->add_subcommand("dims", "expected dimension table");
  sdims->add_option("--max-k", max_k, "largest weight")->required();
  sdims->add_option("-o,--out", out_path);

  auto* lattice = app.add_subcommand("lattice", "even lattices");
  auto* ldisc = lattice->add_subcommand("disc", "discriminant form of a gram matrix");
  ldisc->add_option("gram", in_a, "text file, one matrix row per line")
      ->required()
      ->check(CLI::ExistingFile);
  ldisc->add_option("-o,--out", out_path);

  auto* weil = app.add_subcommand("weil", "Weil representation images");
  auto* wg1 = weil->add_subcommand("genus1", "S and T on a discriminant form");
  wg1->add_option("disc", in_a)->required()->check(CLI::ExistingFile);
  wg1->add_option("-o,--out", out_path);

  CLI11_PARSE(app, argc, argv);

  Emitter em;
  em.out_path = out_path;
  try {
    if (jbasis->parsed()) {
      em.command = "jacobi basis";
      em.params = {{"k", k}, {"m", m}, {"N", N}};
      auto basis = fj::jacobi_basis(k, m, fj::rat_parse(N));
      Json arr = Json::array();
      for (const auto& f : basis) arr.push_back(fj::to_json(f));
      em.emit(Json{{"dimension", basis.size()}, {"basis", arr}});
    } else if (fcheck->parsed()) {
      em.command = "fj check";
      Json art = em.load(in_a).at("artifact");
      // accept a single series or a solver-emitted basis file
      std::vector<fj::FormalFJSeries> series;
      if (art.contains("basis"))
        for (const auto& b : art.at("basis")) series.push_back(fj::fjseries_from_json(b));
      else
        series.push_back(fj::fjseries_from_json(art));
      Json results = Json::array();
      bool all = true;
      long skipped = 0;
      for (const auto& f : series) {
        auto rep = fj::fj_is_symmetric(f);
        all = all && rep.symmetric;
        skipped += rep.skipped;
        Json r{{"symmetric", rep.symmetric}};
        if (!rep.symmetric)
          r["violation"] = Json{{"m", rep.m}, {"n", rep.n}, {"r", fj::rat_str(rep.r)}};
        results.push_back(r);
      }
      em.emit(Json{{"symmetric", all}, {"skipped", skipped}, {"elements", results}});
    } else if (ftensor->parsed() || fpair->parsed()) {
      em.command = ftensor->parsed() ? "fj tensor" : "fj pair";
      auto a = fj::fjseries_from_json(em.load(in_a).at("artifact"));
      auto b = fj::fjseries_from_json(em.load(in_b).at("artifact"));
      auto r = ftensor->parsed() ? fj::fj_tensor(a, b) : fj::fj_pair(a, b);
      em.emit(fj::to_json(r));
    } else if (finvert->parsed()) {
      em.command = "fj invert";
      auto f = fj::fjseries_from_json(em.load(in_a).at("artifact"));
      em.emit(mero_json(fj::fj_invert(f)));
    } else if (fquot->parsed()) {
      em.command = "fj quotient";
      auto g = fj::fjseries_from_json(em.load(in_a).at("artifact"));
      auto h = fj::fjseries_from_json(em.load(in_b).at("artifact"));
      em.emit(mero_json(fj::fj_meromorphic_expansion(g, h)));
    } else if (ssolve->parsed()) {
      em.command = "siegel solve";
      em.params = {{"k", k}, {"M", M}, {"N", N}, {"stabilize", stabilize}};
      fj::Representation rho = fj::rep_trivial();
      if (!rep_path.empty()) rho = fj::rep_from_json(em.load(rep_path).at("artifact"));
      auto s = fj::symmetric_space(fj::Rational(k), rho, M, fj::rat_parse(N), stabilize);
      Json arr = Json::array();
      for (const auto& f : s.basis) arr.push_back(fj::to_json(f));
      em.emit(Json{{"dimension", s.dimension}, {"basis", arr}});
    } else if (sdims->parsed()) {
      em.command = "siegel dims";
      em.params = {{"max_k", max_k}};
      Json table = Json::array();
      for (long w = 0; w <= max_k; w += 2)
        table.push_back(Json{{"k", w}, {"dimension", fj::expected_dimension(w)}});
      em.emit(Json{{"dims", table}});
    } else if (ldisc->parsed()) {
      em.command = "lattice disc";
      std::string bytes = read_file(in_a);
      em.inputs[in_a] = digest(bytes);
      fj::IntMat g = read_gram(in_a);
      std::vector<std::vector<fj::Rational>> rg(g.size());
      for (std::size_t i = 0; i < g.size(); ++i)
        for (const auto& x : g[i]) rg[i].emplace_back(x);
      auto [p, q] = fj::inertia(rg);
      fj::EvenLattice l{g, p, q};
      em.emit(fj::to_json(fj::discriminant_form(l)));
    } else if (wg1->parsed()) {
      em.command = "weil genus1";
      auto d = fj::disc_from_json(em.load(in_a).at("artifact"));
      auto issues = fj::verify_discriminant_form(d);
      if (!issues.ok())
        throw fj::Error("InvalidDiscriminantForm", issues.issues.front());
      auto w = fj::weil_rep_genus1(d);
      Json s = Json::array(), t = Json::array();
      for (const auto& row : w.S) {
        Json r = Json::array();
        for (const auto& x : row) r.push_back(fj::to_json(x));
        s.push_back(r);
      }
      for (const auto& row : w.T) {
        Json r = Json::array();
        for (const auto& x : row) r.push_back(fj::to_json(x));
        t.push_back(r);
      }
      em.emit(Json{{"S", s}, {"T", t}});
    }
  } catch (const fj::Error& e) {
    std::cerr << fj::dumps(Json{{"error", Json{{"code", e.code}, {"message", e.what()}}}});
    return 1;
  } catch (const nlohmann::json::exception& e) {
    std::cerr << fj::dumps(Json{{"error", Json{{"code", "ParseError"}, {"message", e.what()}}}});
    return 1;
  }
  return 0;
}
