// Acceptance suite: runs every top-level correctness criterion at its stated
// tolerance (all exact) and prints one PASS/FAIL line per criterion.

#include <chrono>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>

#include "qslice/cohomology.hpp"
#include "qslice/report.hpp"

using namespace qslice;

namespace {

int failures = 0;

void report(int criterion, const std::string& name, bool ok, const std::string& detail = "") {
  std::cout << (ok ? "[PASS]" : "[FAIL]") << " criterion " << criterion << ": " << name;
  if (!detail.empty()) std::cout << " -- " << detail;
  std::cout << std::endl;
  if (!ok) ++failures;
}

long long ms_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() -
                                                               t0)
      .count();
}

int brute_force_pyramid_count(const Partition& shape) {
  const auto& p = shape.parts;
  int n_rows = shape.count();
  std::vector<int> edges(n_rows);
  edges[n_rows - 1] = -p[n_rows - 1];
  int count = 0;
  auto rec = [&](auto&& self, int row) -> void {
    if (row < 0) {
      ++count;
      return;
    }
    for (int le = -3 * p.back(); le <= 3 * p.back(); ++le) {
      if (le < edges[row + 1]) continue;
      if (le + 2 * p[row] > edges[row + 1] + 2 * p[row + 1]) continue;
      edges[row] = le;
      self(self, row - 1);
    }
  };
  if (n_rows == 1)
    count = 1;
  else
    rec(rec, n_rows - 2);
  return count;
}

long min_sum(const Partition& lam) {
  long total = 0;
  for (int a : lam.parts)
    for (int b : lam.parts) total += std::min(a, b);
  return total;
}

std::string dims_str(const std::vector<long>& v) {
  std::ostringstream out;
  for (std::size_t i = 0; i < v.size(); ++i) out << (i ? "," : "") << v[i];
  return out.str();
}

void criterion_1() {
  auto t0 = std::chrono::steady_clock::now();
  bool ok = enumerate_pyramids(Partition::of({2, 2, 3})).size() == 3;
  for (int n = 1; n <= 6; ++n) ok = ok && enumerate_pyramids(Partition::of({n})).size() == 1;
  ok = ok && enumerate_pyramids(Partition::of({1, 2})).size() == 3;
  ok = ok && brute_force_pyramid_count(Partition::of({1, 2})) == 3;
  for (int n = 1; n <= 5; ++n)
    for (const Partition& lam : partitions_of(n))
      ok = ok &&
           long(enumerate_pyramids(lam).size()) == long(brute_force_pyramid_count(lam));
  long long ms = ms_since(t0);
  report(1, "pyramid counts ((2,2,3) -> 3, (N) -> 1, (1,2) -> 3, oracle agreement)",
         ok && ms < 1000, std::to_string(ms) + " ms");
}

void criterion_2() {
  auto t0 = std::chrono::steady_clock::now();
  bool ok = true;
  for (int n = 1; n <= 5 && ok; ++n)
    for (const Partition& lam : partitions_of(n)) {
      long expect = min_sum(lam);
      for (const Pyramid& p : enumerate_pyramids(lam)) {
        QElement e = nilpotent_from_pyramid(p);
        QElement big_e = pi(e);
        Subspace g_e =
            big_e.is_zero() ? Subspace::full(coord_dim(n)) : centralizer(big_e);
        if (!(sudim(g_e) == SuperDim{expect, expect})) ok = false;
        if (long(anticommutant_basis(e, p).size()) != expect) ok = false;
        if (!(centralizer_of_functional(functional_from_element(big_e)) == g_e)) ok = false;
      }
    }
  long long ms = ms_since(t0);
  report(2, "centralizer dimensions equal the min-sum formula two ways, N <= 5",
         ok && ms < 10000, std::to_string(ms) + " ms");
}

void criterion_3() {
  bool ok = true;
  int non_good_pairs = 0;
  for (int n = 1; n <= 5; ++n) {
    std::vector<Pyramid> all;
    for (const Partition& lam : partitions_of(n))
      for (const Pyramid& p : enumerate_pyramids(lam)) all.push_back(p);
    for (const Pyramid& p : all) {
      GoodnessReport rep =
          check_good(grading_from_pyramid(p), functional_from_element(pi(nilpotent_from_pyramid(p))));
      if (!rep.good() || !rep.equivalences_hold()) ok = false;
    }
    if (n > 4) continue;  // mismatched sweep is quadratic; N <= 4 already gives dozens
    for (const Pyramid& pg : all)
      for (const Pyramid& pe : all) {
        if (pg.shape() == pe.shape()) continue;
        GoodnessReport rep = check_good(grading_from_pyramid(pg),
                                        functional_from_element(pi(nilpotent_from_pyramid(pe))));
        if (!rep.equivalences_hold()) ok = false;
        if (!rep.good()) ++non_good_pairs;
      }
  }
  report(3, "q(N) goodness equals gl(N) goodness on all pyramid gradings and non-good pairs",
         ok && non_good_pairs >= 10, std::to_string(non_good_pairs) + " non-good pairs checked");
}

void criterion_4() {
  bool ok = true;
  for (int n = 1; n <= 5; ++n)
    for (const Partition& lam : partitions_of(n))
      for (const Pyramid& p : enumerate_pyramids(lam))
        if (!check_grading_properties(datum_from_pyramid(p)).all_ok()) ok = false;
  report(4, "ad E injective below -1, surjective above, sudim g_E = g_0 + g_1, N <= 5", ok);
}

void criterion_5() {
  bool ok = true;
  for (int n = 1; n <= 5; ++n)
    for (const Partition& lam : partitions_of(n))
      for (const Pyramid& p : enumerate_pyramids(lam)) {
        NilpotentDatum d = datum_from_pyramid(p);
        for (IsotropicMode mode : {IsotropicMode::Lagrangian, IsotropicMode::Zero})
          if (!mperp_decomposition(d, isotropic_choice(d, mode)).ok()) ok = false;
      }
  report(5, "m-perp = [m', E] (+) Pi g_F with exact superdimensions, N <= 5, both modes", ok);
}

void criterion_6() {
  auto t0 = std::chrono::steady_clock::now();
  bool ok = true;
  std::string detail;
  {
    NilpotentDatum d = datum_from_pyramid(enumerate_pyramids(Partition::of({2}))[0]);
    NuReport rep = verify_nu(d, isotropic_choice(d, IsotropicMode::Lagrangian), 6);
    std::vector<long> expect = {1, 1, 3, 3, 7, 7, 13};
    if (rep.dims_w != expect || !rep.ok()) {
      ok = false;
      detail = "(2): got " + dims_str(rep.dims_w);
    }
  }
  for (const Pyramid& p : enumerate_pyramids(Partition::of({1, 2}))) {
    NilpotentDatum d = datum_from_pyramid(p);
    NuReport rep = verify_nu(d, isotropic_choice(d, IsotropicMode::Lagrangian), 4);
    if (!rep.ok()) ok = false;
  }
  {
    NilpotentDatum d = datum_from_pyramid(enumerate_pyramids(Partition::of({3}))[0]);
    NuReport rep = verify_nu(d, isotropic_choice(d, IsotropicMode::Lagrangian), 4);
    if (!rep.ok()) ok = false;
  }
  long long ms = ms_since(t0);
  report(6,
         "dim F_d W equals cumulative C[S] ((2) at kmax 6 gives 1,1,3,3,7,7,13; (1,2), (3) at "
         "kmax 4)",
         ok && ms < 300000, detail.empty() ? std::to_string(ms) + " ms" : detail);
}

void criterion_7() {
  // across isotropic modes (same grading): holds and is checked per pyramid;
  // across the three pyramids: checked verbatim as specified
  bool modes_ok = true;
  std::vector<std::vector<long>> per_pyramid;
  for (const Pyramid& p : enumerate_pyramids(Partition::of({1, 2}))) {
    NilpotentDatum d = datum_from_pyramid(p);
    NuReport zero = verify_nu(d, isotropic_choice(d, IsotropicMode::Zero), 4);
    NuReport lag = verify_nu(d, isotropic_choice(d, IsotropicMode::Lagrangian), 4);
    if (zero.dims_w != lag.dims_w) modes_ok = false;
    per_pyramid.push_back(zero.dims_w);
  }
  bool pyramids_ok = per_pyramid[0] == per_pyramid[1] && per_pyramid[1] == per_pyramid[2];
  report(7, "Hilbert series of W identical across Lagrangian vs zero isotropic choice",
         modes_ok);
  report(7, "Hilbert series of W identical across the three pyramids of (1,2)", pyramids_ok,
         "dims per pyramid: [" + dims_str(per_pyramid[0]) + "], [" + dims_str(per_pyramid[1]) +
             "], [" + dims_str(per_pyramid[2]) +
             "]; the Kazhdan filtration is grading-dependent, so the algebra isomorphism does "
             "not transport these dimensions");
}

void criterion_8() {
  auto t0 = std::chrono::steady_clock::now();
  bool ok = true;
  std::string first_bad;
  auto run = [&](const Partition& lam, int index, IsotropicMode mode) {
    NilpotentDatum d = datum_from_pyramid(enumerate_pyramids(lam).at(index));
    CohomologyTable t = cohomology_dims(d, isotropic_choice(d, mode), 6, 2);
    if (!t.ok()) {
      ok = false;
      if (first_bad.empty())
        first_bad = lam.str() + "#" + std::to_string(index) + "/" + mode_name(mode);
    }
  };
  run(Partition::of({2}), 0, IsotropicMode::Zero);
  for (int i = 0; i < 3; ++i) {
    run(Partition::of({1, 2}), i, IsotropicMode::Zero);
    run(Partition::of({1, 2}), i, IsotropicMode::Lagrangian);
  }
  run(Partition::of({3}), 0, IsotropicMode::Zero);
  long long ms = ms_since(t0);
  report(8, "H^1 = H^2 = 0 up to Kazhdan degree 6 and H^0 = C[S] for (2), (1,2), (3)",
         ok && ms < 600000, first_bad.empty() ? std::to_string(ms) + " ms" : first_bad);
}

void criterion_9() {
  bool ok = true;
  std::string detail;

  // PBW associativity on random triples with a fixed seed
  {
    NilpotentDatum d = datum_from_pyramid(enumerate_pyramids(Partition::of({1, 2}))[1]);
    IsotropicChoice c = isotropic_choice(d, IsotropicMode::Zero);
    EnvelopeEngine eng(d, c);
    auto& list = eng.basis_upto(4);
    std::vector<PBWMonomial> pool = list;
    for (std::size_t g = eng.first_m_index(); g < eng.gens().size(); ++g)
      pool.push_back(PBWMonomial::generator(int(g)));
    std::mt19937 rng(20240229);
    std::uniform_int_distribution<std::size_t> pick(0, pool.size() - 1);
    for (int trial = 0; trial < 120 && ok; ++trial) {
      UElement a = UElement::monomial(pool[pick(rng)], Rat(1));
      UElement b = UElement::monomial(pool[pick(rng)], Rat(1));
      UElement cc = UElement::monomial(pool[pick(rng)], Rat(1));
      if (!(eng.multiply(eng.multiply(a, b), cc) == eng.multiply(a, eng.multiply(b, cc)))) {
        ok = false;
        detail = "associativity";
      }
    }

    // reduce_mod_I idempotence on products with trailing ideal generators
    for (int trial = 0; trial < 40 && ok; ++trial) {
      UElement u = UElement::monomial(pool[pick(rng)], Rat(1));
      for (std::size_t g = eng.first_m_index(); g < eng.gens().size(); ++g)
        u = eng.multiply(u, UElement::monomial(PBWMonomial::generator(int(g)), Rat(1)));
      UElement once = eng.reduce_mod_I(u);
      if (!(eng.reduce_mod_I(once) == once)) {
        ok = false;
        detail = "reduce idempotence";
      }
    }
  }

  // delta^2 = 0 on every assembled differential of a desk case
  {
    NilpotentDatum d = datum_from_pyramid(enumerate_pyramids(Partition::of({1, 2}))[1]);
    IsotropicChoice c = isotropic_choice(d, IsotropicMode::Zero);
    EnvelopeEngine eng(d, c);
    CEComplex complex = ce_complex_for(eng);
    for (int deg = 0; deg <= 5 && ok; ++deg)
      for (int k = 0; k <= 3 && ok; ++k)
        if (!complex.d_squared_is_zero(k, deg)) {
          ok = false;
          detail = "delta^2";
        }
  }

  // determinism of assembled reports
  {
    RunConfig config;
    config.partition = Partition::of({1, 2});
    config.kmax = 3;
    config.imax = 1;
    config.modes = {IsotropicMode::Zero, IsotropicMode::Lagrangian};
    config.include_timing = false;
    Json a = verify_report(config);
    config.workers = 3;
    Json b = verify_report(config);
    if (a.dump() != b.dump()) {
      ok = false;
      detail = "determinism";
    }
  }
  report(9, "engine self-consistency: associativity, delta^2 = 0, reduce idempotent, determinism",
         ok, detail);
}

void criterion_10() {
  std::ifstream in(std::string(QSLICE_SOURCE_DIR) + "/README.md");
  std::stringstream buf;
  buf << in.rdbuf();
  std::string readme = buf.str();
  bool mentions_skryabin = readme.find("Skryabin") != std::string::npos;
  bool mentions_graded_only = readme.find("graded dimension") != std::string::npos;
  report(10, "README documents the non-goals (Skryabin equivalence, dimension-level checks only)",
         mentions_skryabin && mentions_graded_only);
}

}  // namespace

int main() {
  auto t0 = std::chrono::steady_clock::now();
  criterion_1();
  criterion_2();
  criterion_3();
  criterion_4();
  criterion_5();
  criterion_6();
  criterion_7();
  criterion_8();
  criterion_9();
  criterion_10();
  std::cout << "----" << std::endl;
  std::cout << (failures == 0 ? "ACCEPTANCE PASSED" : "ACCEPTANCE FAILED") << " ("
            << failures << " failing) in " << ms_since(t0) << " ms" << std::endl;
  return failures == 0 ? 0 : 1;
}
