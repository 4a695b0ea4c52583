// Acceptance suite: one pass/fail line per criterion, nonzero exit on failure.
#include <functional>
#include <iostream>
#include <random>
#include <vector>

#include "fj/errors.hpp"
#include "fj/lattice.hpp"
#include "fj/serialize.hpp"
#include "fj/siegel.hpp"

using namespace fj;

namespace {

int failures = 0;

void report(int num, const char* what, bool ok) {
  std::cout << "criterion " << num << " (" << what << "): "
            << (ok ? "PASS" : "FAIL") << std::endl;
  if (!ok) ++failures;
}

bool run(int num, const char* what, const std::function<bool()>& body) {
  bool ok = false;
  try {
    ok = body();
  } catch (const std::exception& e) {
    std::cout << "criterion " << num << " raised: " << e.what() << std::endl;
  }
  report(num, what, ok);
  return ok;
}

// stack scalar series of a common weight into a trivial^d-valued series
FormalFJSeries stack(const std::vector<FormalFJSeries>& parts) {
  long d = static_cast<long>(parts.size());
  FormalFJSeries out = fj_zero(parts[0].weight, rep_trivial_power(d),
                               parts[0].trunc, parts[0].qprec);
  for (long c = 0; c < d; ++c)
    for (long m = 0; m <= out.trunc; ++m)
      for (const auto& [k, v] : parts[c].coeffs[m].table) {
        std::vector<Cyc> val(d, Cyc(0l));
        val[c] = v[0];
        out.coeffs[m].add(k.first, k.second, val);
      }
  return out;
}

DiscriminantForm disc_of(const IntMat& gram) {
  std::vector<std::vector<Rational>> rg(gram.size());
  for (std::size_t i = 0; i < gram.size(); ++i)
    for (const auto& x : gram[i]) rg[i].emplace_back(x);
  auto [p, q] = inertia(rg);
  return discriminant_form(EvenLattice{gram, p, q});
}

}  // namespace

int main() {
  // shared solver bases at modest truncation for the property suites
  long M = 4;
  Rational N(6);
  std::map<long, std::vector<FormalFJSeries>> bases;
  for (long k : {4l, 6l, 10l, 12l})
    bases[k] = symmetric_space(Rational(k), rep_trivial(), M, N, false).basis;

  run(1, "symmetric_space dimensions match the Igusa oracle", [&] {
    std::vector<long> ks = {0, 2, 4, 6, 8, 10, 12};
    std::vector<long> want = {1, 0, 1, 1, 1, 2, 3};
    for (std::size_t i = 0; i < ks.size(); ++i) {
      auto s = symmetric_space(Rational(ks[i]), rep_trivial(), 6, Rational(8), true);
      if (s.dimension != want[i] || s.dimension != expected_dimension(ks[i]))
        return false;
    }
    return true;
  });

  run(2, "tensor products of symmetric series are symmetric", [&] {
    std::mt19937 rng(20260823);
    std::vector<long> ks = {4, 6, 10};
    for (int t = 0; t < 50; ++t) {
      long k1 = ks[rng() % 3], k2 = ks[rng() % 3];
      const auto& b1 = bases[k1];
      const auto& b2 = bases[k2];
      FormalFJSeries f = b1[rng() % b1.size()];
      FormalFJSeries g = b2[rng() % b2.size()];
      // random small rational rescale keeps the symmetry constraints exact
      f = fj_scale(Cyc(Rational(1 + (long)(rng() % 5), 1 + (long)(rng() % 3))), f);
      FormalFJSeries p = fj_tensor(f, g);
      if (p.weight != Rational(k1 + k2)) return false;
      for (long m = 0; m <= p.trunc; ++m)
        if (p.coeffs[m].index != Rational(m) || p.coeffs[m].weight != p.weight)
          return false;
      if (!fj_is_symmetric(p).symmetric) return false;
    }
    return true;
  });

  run(3, "Hom-valued pairings of symmetric series are symmetric", [&] {
    for (long d = 1; d <= 3; ++d) {
      // f over trivial^d from weight-12 scalar solutions (3 available)
      std::vector<FormalFJSeries> fparts, gparts;
      for (long c = 0; c < d; ++c) fparts.push_back(bases[12][c % bases[12].size()]);
      FormalFJSeries f = stack(fparts);
      // g over Hom(trivial^d, trivial^e) with e = 2
      long e = 2;
      for (long c = 0; c < d * e; ++c) gparts.push_back(bases[10][c % bases[10].size()]);
      FormalFJSeries g = stack(gparts);
      g.rep = rep_hom(rep_trivial_power(d), rep_trivial_power(e));
      FormalFJSeries p = fj_pair(g, f);
      if (p.rep.dim != e || p.weight != Rational(22)) return false;
      if (!fj_is_symmetric(p).symmetric) return false;
    }
    return true;
  });

  run(4, "inversion round-trips and quotient well-definedness", [&] {
    std::mt19937 rng(424242);
    // invertible phi_0 choices: 1, E4, E6, and a Delta-shifted unit
    std::vector<std::pair<long, QSeries>> heads;
    heads.emplace_back(0, qs_const(Cyc(1l), N));
    heads.emplace_back(4, eisenstein_q(4, N));
    heads.emplace_back(6, eisenstein_q(6, N));
    heads.emplace_back(12, qs_add(delta_q(N), qs_const(Cyc(1l), N)));
    for (int t = 0; t < 20; ++t) {
      auto& [k, head] = heads[rng() % heads.size()];
      FormalFJSeries f = fj_zero(Rational(k), rep_trivial(), 2, N);
      for (const auto& [e, v] : head.c) f.coeffs[0].set(e, Rational(0), {v});
      for (long m = 1; m <= 2; ++m) {
        auto jb = jacobi_basis(k, m, N);
        if (!jb.empty())
          f.coeffs[m] = jacobi_scale(Cyc((long)(rng() % 7) - 3), jb[rng() % jb.size()]);
      }
      MeromorphicFJSeries inv = fj_invert(f);
      if (!mero_is_one(fj_mero_mul(f, inv))) return false;
      if (!mero_is_one(fj_mero_mul(inv, f))) return false;
    }
    // quotient independence of the common factor
    FormalFJSeries g = bases[10][0], h = bases[4][0], w = bases[6][0];
    MeromorphicFJSeries direct = fj_meromorphic_expansion(g, h);
    MeromorphicFJSeries via = fj_meromorphic_expansion(fj_tensor(g, w), fj_tensor(h, w));
    return mero_eq(direct, via);
  });

  run(5, "symmetry involution on V_rho(k) for constructed reps", [&] {
    std::vector<Representation> reps = {rep_trivial(), rep_trivial_power(3)};
    DiscriminantForm d22 = disc_of({{2, 0}, {0, 2}});
    reps.push_back(weil_rep_genus2(d22));
    reps.push_back(weil_rep_genus2(d22, Cyc::zeta(4, 1)));
    reps.push_back(rep_dual(reps[2]));
    reps.push_back(rep_tensor(reps[0], reps[3]));
    for (const auto& rho : reps) {
      if (!verify_representation(rho).ok()) return false;
      for (long twice_k = 1; twice_k <= 24; ++twice_k) {
        Rational k(twice_k, 2);
        Cyc i2k = i_pow_2k(k);
        Mat A = mat_scale(i2k, rho.delta);
        Mat A2 = mat_mul(A, A);
        for (const auto& v : invariant_subspace(rho, k)) {
          auto w = mat_apply(A2, v);
          for (std::size_t c = 0; c < v.size(); ++c)
            if (!(w[c] == v[c])) return false;
        }
      }
    }
    return true;
  });

  run(6, "jacobi_basis stabilizes and validates; pinned dimensions", [&] {
    for (long k = 4; k <= 12; k += 2)
      for (long m = 0; m <= 6; ++m) {
        auto lo = jacobi_basis(k, m, Rational(6));
        auto hi = jacobi_basis(k, m, Rational(8));
        if (lo.size() != hi.size()) return false;
        for (const auto& f : lo)
          if (!validate_jacobi(f).ok()) return false;
      }
    return jacobi_basis(10, 1, Rational(6)).size() == 2 &&
           jacobi_basis(4, 1, Rational(6)).size() == 1;
  });

  run(7, "genus-1 Weil images are unitary with (ST)^3 = S^2", [&] {
    std::vector<IntMat> grams = {{{2}}, {{2, 0}, {0, 2}}, {{0, 1}, {1, 0}}};
    for (const auto& g : grams) {
      DiscriminantForm d = disc_of(g);
      WeilImages wi = weil_rep_genus1(d);
      std::size_t n = wi.S.size();
      Mat id = mat_identity(n);
      if (!mat_eq(mat_mul(wi.S, mat_conj_transpose(wi.S)), id)) return false;
      if (!mat_eq(mat_mul(wi.T, mat_conj_transpose(wi.T)), id)) return false;
      Mat st = mat_mul(wi.S, wi.T);
      if (!mat_eq(mat_mul(st, mat_mul(st, st)), mat_mul(wi.S, wi.S))) return false;
    }
    return true;
  });

  run(8, "artifacts round-trip byte-identically", [&] {
    auto twice = [](const Json& j, auto from, auto to) {
      std::string a = dumps(j);
      return a == dumps(to(from(loads(a))));
    };
    DiscriminantForm d22 = disc_of({{2, 0}, {0, 2}});
    bool ok = true;
    ok = ok && twice(to_json(Cyc::zeta(12, 5) + Cyc::sqrt_int(8)), cyc_from_json,
                     [](const Cyc& v) { return to_json(v); });
    ok = ok && twice(to_json(eisenstein_q(4, Rational(6))), qseries_from_json,
                     [](const QSeries& v) { return to_json(v); });
    ok = ok && twice(to_json(theta11_qz(Rational(4))), qzseries_from_json,
                     [](const QZSeries& v) { return to_json(v); });
    ok = ok && twice(to_json(jacobi_basis(10, 1, Rational(5))[0]), jacobi_from_json,
                     [](const JacobiForm& v) { return to_json(v); });
    ok = ok && twice(to_json(weil_rep_genus2(d22)), rep_from_json,
                     [](const Representation& v) { return to_json(v); });
    ok = ok && twice(to_json(d22), disc_from_json,
                     [](const DiscriminantForm& v) { return to_json(v); });
    ok = ok && twice(to_json(bases[10][0]), fjseries_from_json,
                     [](const FormalFJSeries& v) { return to_json(v); });
    ok = ok && twice(to_json(fj_to_siegel(bases[10][0])), siegel_from_json,
                     [](const SiegelForm& v) { return to_json(v); });
    return ok;
  });

  std::cout << (failures ? "ACCEPTANCE: FAILED" : "ACCEPTANCE: OK") << std::endl;
  return failures ? 1 : 0;
}
