#include <numeric>

#include "doctest.h"
#include "qslice/structure.hpp"

using namespace qslice;

namespace {

long sum_min_formula(const Partition& lam) {
  long total = 0;
  for (int a : lam.parts)
    for (int b : lam.parts) total += std::min(a, b);
  return total;
}

const Pyramid& centered_12() {
  static auto ps = enumerate_pyramids(Partition::of({1, 2}));
  return ps[1];  // column weights (-1, 0, 1)
}

}  // namespace

TEST_CASE("centralizer dimensions follow the min-sum formula") {
  // every pyramid of every partition with N <= 5, plus the independent
  // centralizer_of_functional route
  for (int n = 1; n <= 5; ++n) {
    for (const Partition& lam : partitions_of(n)) {
      long expect = sum_min_formula(lam);
      for (const Pyramid& p : enumerate_pyramids(lam)) {
        QElement e = nilpotent_from_pyramid(p);
        QElement big_e = pi(e);
        Subspace g_e = big_e.is_zero() ? Subspace::full(coord_dim(n)) : centralizer(big_e);
        CHECK(sudim(g_e) == SuperDim{expect, expect});
        LinearFunctional chi = functional_from_element(big_e);
        CHECK(centralizer_of_functional(chi) == g_e);
      }
    }
  }
}

TEST_CASE("centralizer edge cases") {
  CHECK(sudim(centralizer(QElement(2))) == SuperDim{4, 4});  // centralizer of 0 is everything
  QElement e = QElement::unit(2, Parity::Even, 0, 1);
  CHECK(sudim(centralizer(pi(e))) == SuperDim{2, 2});
}

TEST_CASE("anticommutant basis") {
  {
    auto ps = enumerate_pyramids(Partition::of({2}));
    QElement e = nilpotent_from_pyramid(ps[0]);
    auto basis = anticommutant_basis(e, ps[0]);
    REQUIRE(basis.size() == 2);
    Grading g = grading_from_pyramid(ps[0]);
    std::multiset<int> degs;
    for (const QElement& z : basis) {
      int deg = 0;
      CHECK(g.is_homogeneous(z, deg));
      degs.insert(deg);
    }
    // the two elements live in degrees 0 and 2 (both non-negative)
    CHECK(degs == std::multiset<int>{0, 2});
  }
  {
    auto ps = enumerate_pyramids(Partition::of({1, 1, 1}));
    QElement e = nilpotent_from_pyramid(ps[0]);
    CHECK(anticommutant_basis(e, ps[0]).size() == 9);  // everything anticommutes with 0
  }
  for (const Pyramid& p : enumerate_pyramids(Partition::of({2, 2, 3}))) {
    QElement e = nilpotent_from_pyramid(p);
    CHECK(anticommutant_basis(e, p).size() == 19);
  }

  // anticommutation ze = -ez, homogeneity, non-negative degrees, and agreement
  // with the odd centralizer dimension, for all pyramids with N <= 5
  for (int n = 1; n <= 5; ++n) {
    for (const Partition& lam : partitions_of(n)) {
      for (const Pyramid& p : enumerate_pyramids(lam)) {
        QElement e = nilpotent_from_pyramid(p);
        Grading g = grading_from_pyramid(p);
        auto basis = anticommutant_basis(e, p);
        CHECK(long(basis.size()) == sum_min_formula(lam));
        std::vector<std::vector<Rat>> rows;
        for (const QElement& z : basis) {
          SparseMat anti = z.s() * e.s() + e.s() * z.s();
          CHECK(anti.is_zero());
          int deg = 0;
          CHECK(g.is_homogeneous(z, deg));
          if (!z.is_zero()) CHECK(deg >= 0);
          rows.push_back(z.coords());
        }
        CHECK(Subspace::span(coord_dim(n), rows).dim() == basis.size());
      }
    }
  }
}

TEST_CASE("goodness checks") {
  // every pyramid grading is good for its own nilpotent (N <= 5)
  for (int n = 1; n <= 5; ++n) {
    for (const Partition& lam : partitions_of(n)) {
      for (const Pyramid& p : enumerate_pyramids(lam)) {
        LinearFunctional chi = functional_from_element(pi(nilpotent_from_pyramid(p)));
        GoodnessReport rep = check_good(grading_from_pyramid(p), chi);
        CHECK(rep.good());
        CHECK(rep.gg3);
        CHECK(rep.equivalences_hold());
      }
    }
  }

  // trivial grading with nonzero chi is not good: gg1 fails
  {
    QElement e = QElement::unit(2, Parity::Even, 0, 1);
    LinearFunctional chi = functional_from_element(pi(e));
    GoodnessReport rep = check_good(Grading::trivial(2), chi);
    CHECK(!rep.gg1);
    CHECK(!rep.good());
    CHECK(rep.equivalences_hold());
  }

  // e = 0 with the trivial grading is good
  {
    LinearFunctional chi = functional_from_element(QElement(2));
    GoodnessReport rep = check_good(Grading::trivial(2), chi);
    CHECK(rep.good());
    CHECK(rep.equivalences_hold());
  }

  // mismatched pairs: grading of one pyramid, nilpotent of another; the q and
  // gl verdicts still agree
  int non_good = 0;
  for (int n = 2; n <= 4; ++n) {
    std::vector<Pyramid> all;
    for (const Partition& lam : partitions_of(n))
      for (const Pyramid& p : enumerate_pyramids(lam)) all.push_back(p);
    for (const Pyramid& pg : all)
      for (const Pyramid& pe : all) {
        if (pg.shape() == pe.shape()) continue;
        LinearFunctional chi = functional_from_element(pi(nilpotent_from_pyramid(pe)));
        GoodnessReport rep = check_good(grading_from_pyramid(pg), chi);
        CHECK(rep.equivalences_hold());
        if (!rep.good()) ++non_good;
      }
  }
  CHECK(non_good >= 10);
}

TEST_CASE("sl2 completion") {
  {
    auto ps = enumerate_pyramids(Partition::of({2}));
    NilpotentDatum d = datum_from_pyramid(ps[0]);
    CHECK(d.h == QElement::unit(2, Parity::Even, 0, 0) - QElement::unit(2, Parity::Even, 1, 1));
    CHECK(d.f == QElement::unit(2, Parity::Even, 1, 0));
  }
  {
    auto [h, f] = sl2_complete(QElement(3), Grading::trivial(3));
    CHECK(h.is_zero());
    CHECK(f.is_zero());
  }
  for (int n = 1; n <= 5; ++n) {
    for (const Partition& lam : partitions_of(n)) {
      for (const Pyramid& p : enumerate_pyramids(lam)) {
        NilpotentDatum d = datum_from_pyramid(p);
        CHECK(bracket(d.h, d.e) == d.e.scaled(Rat(2)));
        CHECK(bracket(d.h, d.f) == d.f.scaled(Rat(-2)));
        CHECK(bracket(d.e, d.f) == d.h);
        int deg = 0;
        CHECK(d.h.is_even());
        CHECK(d.grading.is_homogeneous(d.h, deg));
        CHECK((d.h.is_zero() || deg == 0));
        CHECK(d.f.is_even());
        CHECK(d.grading.is_homogeneous(d.f, deg));
        CHECK((d.f.is_zero() || deg == -2));
        // h acts with weight 2 on e and -2 on f, and diagonally on pieces
        if (!d.e.is_zero()) {
          for (int j : d.grading.occurring_degrees()) {
            QElement he = d.grading.component(bracket(d.h, d.grading.component(d.e, j)), j);
            CHECK(he == d.grading.component(d.e, j).scaled(Rat(2)));
          }
        }
      }
    }
  }
}

TEST_CASE("form on g_{-1}") {
  {
    NilpotentDatum d = datum_from_pyramid(enumerate_pyramids(Partition::of({2}))[0]);
    GramForm g = form_on_g_minus1(d);
    CHECK(g.even_basis.empty());
    CHECK(g.odd_basis.empty());
  }
  {
    NilpotentDatum d = datum_from_pyramid(centered_12());
    GramForm g = form_on_g_minus1(d);
    REQUIRE(g.even_basis.size() == 2);
    REQUIRE(g.odd_basis.size() == 2);
    CHECK(rank(g.even_gram) == 2);
    CHECK(rank(g.odd_gram) == 2);
    CHECK(g.even_gram.get(0, 1) == -g.even_gram.get(1, 0));
    CHECK(g.odd_gram.get(0, 1) == g.odd_gram.get(1, 0));
    CHECK(g.odd_gram.get(0, 0) == 0);
    CHECK(g.odd_gram.get(1, 1) == 0);
  }
}

TEST_CASE("isotropic choices") {
  {
    NilpotentDatum d = datum_from_pyramid(enumerate_pyramids(Partition::of({2}))[0]);
    for (IsotropicMode mode : {IsotropicMode::Zero, IsotropicMode::Lagrangian}) {
      IsotropicChoice c = isotropic_choice(d, mode);
      CHECK(c.l_even.empty());
      CHECK(c.l_odd.empty());
      CHECK(sudim(c.m) == SuperDim{1, 1});
      CHECK(sudim(c.m_prime) == SuperDim{1, 1});
      CHECK(c.m == c.m_prime);
    }
  }
  {
    NilpotentDatum d = datum_from_pyramid(centered_12());
    IsotropicChoice lag = isotropic_choice(d, IsotropicMode::Lagrangian);
    CHECK(lag.l_even.size() == 1);
    CHECK(lag.l_odd.size() == 1);
    CHECK(sudim(lag.m) == SuperDim{2, 2});
    CHECK(lag.m == lag.m_prime);
    // l is isotropic: chi([l, l]) = 0
    for (const QElement& x : lag.l_even)
      for (const QElement& y : lag.l_even) CHECK(d.chi(bracket(x, y)) == 0);
    for (const QElement& x : lag.l_odd)
      for (const QElement& y : lag.l_odd) CHECK(d.chi(bracket(x, y)) == 0);

    IsotropicChoice zero = isotropic_choice(d, IsotropicMode::Zero);
    CHECK(sudim(zero.m) == SuperDim{1, 1});
    CHECK(sudim(zero.m_prime) == SuperDim{3, 3});
    CHECK(zero.m_prime.contains(zero.m));
  }

  // both modes succeed on every pyramid with N <= 5, with the right sizes
  for (int n = 1; n <= 5; ++n) {
    for (const Partition& lam : partitions_of(n)) {
      for (const Pyramid& p : enumerate_pyramids(lam)) {
        NilpotentDatum d = datum_from_pyramid(p);
        SuperDim g_minus1 = d.grading.sudim_piece(-1);
        for (IsotropicMode mode : {IsotropicMode::Zero, IsotropicMode::Lagrangian}) {
          IsotropicChoice c = isotropic_choice(d, mode);
          if (mode == IsotropicMode::Lagrangian) {
            CHECK(long(c.l_even.size()) == g_minus1.even / 2);
            CHECK(long(c.l_odd.size()) == g_minus1.odd / 2);
            CHECK(c.m == c.m_prime);
          } else {
            CHECK(sudim(c.m_prime) == sudim(c.m) + g_minus1);
          }
        }
      }
    }
  }
}

TEST_CASE("m-perp decomposition") {
  {
    NilpotentDatum d = datum_from_pyramid(enumerate_pyramids(Partition::of({2}))[0]);
    IsotropicChoice c = isotropic_choice(d, IsotropicMode::Zero);
    MPerpReport rep = mperp_decomposition(d, c);
    CHECK(rep.mperp == SuperDim{3, 3});
    CHECK(rep.bracket_part == SuperDim{1, 1});
    CHECK(rep.pi_gf_part == SuperDim{2, 2});
    CHECK(rep.ok());
  }
  {
    // e = 0: m = 0, m-perp = g, [m', E] = 0, pi(g_F) = g
    NilpotentDatum d(QElement(2), Grading::trivial(2));
    IsotropicChoice c = isotropic_choice(d, IsotropicMode::Zero);
    MPerpReport rep = mperp_decomposition(d, c);
    CHECK(rep.mperp == SuperDim{4, 4});
    CHECK(rep.bracket_part == SuperDim{0, 0});
    CHECK(rep.pi_gf_part == SuperDim{4, 4});
    CHECK(rep.ok());
  }
  for (int n = 1; n <= 5; ++n) {
    for (const Partition& lam : partitions_of(n)) {
      for (const Pyramid& p : enumerate_pyramids(lam)) {
        NilpotentDatum d = datum_from_pyramid(p);
        for (IsotropicMode mode : {IsotropicMode::Zero, IsotropicMode::Lagrangian}) {
          MPerpReport rep = mperp_decomposition(d, isotropic_choice(d, mode));
          CHECK(rep.ok());
        }
      }
    }
  }
}

TEST_CASE("grading properties of ad E") {
  {
    NilpotentDatum d = datum_from_pyramid(enumerate_pyramids(Partition::of({2}))[0]);
    GradingPropsReport rep = check_grading_properties(d);
    CHECK(rep.sudim_g_e == SuperDim{2, 2});
    CHECK(rep.sudim_g0 == SuperDim{2, 2});
    CHECK(rep.sudim_g1 == SuperDim{0, 0});
    CHECK(rep.all_ok());
  }
  {
    NilpotentDatum d(QElement(2), Grading::trivial(2));
    GradingPropsReport rep = check_grading_properties(d);
    CHECK(rep.sudim_g_e == SuperDim{4, 4});
    CHECK(rep.all_ok());
  }
  for (const Pyramid& p : enumerate_pyramids(Partition::of({2, 2, 3}))) {
    GradingPropsReport rep = check_grading_properties(datum_from_pyramid(p));
    CHECK(rep.sudim_g_e == SuperDim{19, 19});
    CHECK(rep.all_ok());
  }
  for (int n = 1; n <= 5; ++n)
    for (const Partition& lam : partitions_of(n))
      for (const Pyramid& p : enumerate_pyramids(lam))
        CHECK(check_grading_properties(datum_from_pyramid(p)).all_ok());
}

TEST_CASE("graded centralizer of F for the slice") {
  // lambda = (2): g_F has basis {I, f} even and {pi(h), pi(f)} odd, in
  // degrees 0 and -2 for each parity
  NilpotentDatum d = datum_from_pyramid(enumerate_pyramids(Partition::of({2}))[0]);
  auto table = graded_centralizer_sudims(d.big_f, d.grading);
  CHECK(table[0] == SuperDim{1, 1});
  CHECK(table[-2] == SuperDim{1, 1});
  long total_even = 0, total_odd = 0;
  for (auto& [deg, s] : table) {
    CHECK(deg <= 0);  // g_F is non-positively graded
    total_even += s.even;
    total_odd += s.odd;
  }
  CHECK(total_even == 2);
  CHECK(total_odd == 2);

  // sudim g_F = sudim g_E for all pyramids of (2,2,3)
  for (const Pyramid& p : enumerate_pyramids(Partition::of({2, 2, 3}))) {
    NilpotentDatum dd = datum_from_pyramid(p);
    auto t = graded_centralizer_sudims(dd.big_f, dd.grading);
    long ev = 0, od = 0;
    for (auto& [deg, s] : t) {
      (void)deg;
      ev += s.even;
      od += s.odd;
    }
    CHECK(ev == 19);
    CHECK(od == 19);
  }
}

TEST_CASE("datum construction rejects incompatible gradings") {
  // a nonzero nilpotent with the trivial grading has no degree-2 home
  CHECK_THROWS_AS(NilpotentDatum(QElement::unit(2, Parity::Even, 0, 1), Grading::trivial(2)),
                  QsliceError);
}

TEST_CASE("relabeling invariance of derived dimensions") {
  // conjugating e and permuting the grading weights by the same label
  // permutation leaves centralizer dimensions and goodness untouched
  const Pyramid& p = centered_12();
  QElement e = nilpotent_from_pyramid(p);
  Grading g = grading_from_pyramid(p);
  std::vector<std::size_t> perm = {2, 0, 1};
  const std::size_t n = 3;
  QElement e_perm(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      Rat v = e.s().get(i, j);
      if (v != 0) e_perm = e_perm + QElement::unit(n, Parity::Even, perm[i], perm[j]).scaled(v);
    }
  std::vector<int> w_perm(n);
  for (std::size_t i = 0; i < n; ++i) w_perm[perm[i]] = g.weights()[i];
  Grading g_perm = Grading::from_weights(w_perm);

  CHECK(sudim(centralizer(pi(e))) == sudim(centralizer(pi(e_perm))));
  GoodnessReport r1 = check_good(g, functional_from_element(pi(e)));
  GoodnessReport r2 = check_good(g_perm, functional_from_element(pi(e_perm)));
  CHECK(r1.good() == r2.good());
  NilpotentDatum d1(e, g), d2(e_perm, g_perm);
  for (IsotropicMode mode : {IsotropicMode::Zero, IsotropicMode::Lagrangian}) {
    MPerpReport m1 = mperp_decomposition(d1, isotropic_choice(d1, mode));
    MPerpReport m2 = mperp_decomposition(d2, isotropic_choice(d2, mode));
    CHECK(m1.mperp == m2.mperp);
    CHECK(m1.ok());
    CHECK(m2.ok());
  }
}
