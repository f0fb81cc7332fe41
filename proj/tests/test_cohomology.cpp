#include "doctest.h"
#include "qslice/cohomology.hpp"

using namespace qslice;

namespace {

CEModule trivial_module() {
  CEModule m;
  m.dim = [](int d) -> long { return d == 0 ? 1 : 0; };
  m.act = [](int, int, long) -> std::vector<std::pair<long, Rat>> { return {}; };
  return m;
}

}  // namespace

TEST_CASE("abelian sanity cases pin the sign conventions") {
  {
    // one even element acting trivially on C: H^0 = H^1 = C, nothing else
    CEComplex complex({-1}, {false}, {}, trivial_module());
    CHECK(complex.h_dim(0, 0) == 1);
    CHECK(complex.h_dim(1, 1) == 1);
    CHECK(complex.cochain_dim(2, 2) == 0);  // xi is anticommuting
    for (int d = 0; d <= 3; ++d)
      for (int k = 0; k <= 3; ++k) CHECK(complex.d_squared_is_zero(k, d));
  }
  {
    // one odd element with [b,b] = 0 acting trivially: xi commutes, so
    // H^k = C in every cohomological degree
    CEComplex complex({-1}, {true}, {}, trivial_module());
    for (int k = 0; k <= 4; ++k) {
      CHECK(complex.cochain_dim(k, k) == 1);
      CHECK(complex.h_dim(k, k) == 1);
    }
  }
  {
    // one odd element with [b,b] = -2 b' for a central even b' of degree -2:
    // a nontrivial structure constant exercises the quadratic term; delta^2
    // must still vanish identically
    std::map<std::pair<int, int>, std::vector<std::pair<int, Rat>>> brackets;
    brackets[{0, 0}] = {{1, Rat(-2)}};
    CEComplex complex({-1, -2}, {true, false}, brackets, trivial_module());
    for (int d = 0; d <= 6; ++d)
      for (int k = 0; k <= 6; ++k) REQUIRE(complex.d_squared_is_zero(k, d));
  }
}

TEST_CASE("cohomology for lambda = (2): vanishing and H^0 = C[S]") {
  NilpotentDatum d = datum_from_pyramid(enumerate_pyramids(Partition::of({2}))[0]);
  IsotropicChoice c = isotropic_choice(d, IsotropicMode::Zero);
  CohomologyTable t = cohomology_dims(d, c, 6, 2);
  CHECK(t.d2_ok);
  CHECK(t.vanishing_ok);
  CHECK(t.h0_matches_slice);
  CHECK(t.euler_ok);
  CHECK(t.h[0] == std::vector<long>{1, 0, 2, 0, 4, 0, 6});
  for (int deg = 0; deg <= 6; ++deg) {
    CHECK(t.h[1][deg] == 0);
    CHECK(t.h[2][deg] == 0);
  }
}

TEST_CASE("differential pinned shape at k=0") {
  // delta(q)(b) = b.q; at d=0 the kernel is the constants
  NilpotentDatum d = datum_from_pyramid(enumerate_pyramids(Partition::of({2}))[0]);
  IsotropicChoice c = isotropic_choice(d, IsotropicMode::Zero);
  EnvelopeEngine eng(d, c);
  CEComplex complex = ce_complex_for(eng);
  CHECK(complex.cochain_dim(0, 0) == 1);
  SparseMat d00 = complex.differential(0, 0);
  CHECK(rank(d00) == 0);
  // at d=2 the k=0 kernel is H^0(2) = 2 (trace-like invariants)
  SparseMat d02 = complex.differential(0, 2);
  CHECK(complex.cochain_dim(0, 2) == 4);
  CHECK(kernel(d02).dim() == 2);
}

TEST_CASE("cohomology for e = 0 is trivial beyond H^0") {
  // m' = 0: C^k = 0 for k >= 1 and H^0 = gr Q entirely
  NilpotentDatum d(QElement(2), Grading::trivial(2));
  IsotropicChoice c = isotropic_choice(d, IsotropicMode::Zero);
  CohomologyTable t = cohomology_dims(d, c, 4, 2);
  CHECK(t.ok());
  CHECK(t.h[0][2] == 8);
}

TEST_CASE("cohomology for the centered pyramid of (1,2), both modes") {
  NilpotentDatum d = datum_from_pyramid(enumerate_pyramids(Partition::of({1, 2}))[1]);
  for (IsotropicMode mode : {IsotropicMode::Zero, IsotropicMode::Lagrangian}) {
    IsotropicChoice c = isotropic_choice(d, mode);
    CohomologyTable t = cohomology_dims(d, c, 4, 2);
    CHECK(t.d2_ok);
    CHECK(t.vanishing_ok);
    CHECK(t.h0_matches_slice);
    CHECK(t.euler_ok);
    CHECK(t.h[0] == std::vector<long>{1, 0, 4, 4, 10});
  }
}
