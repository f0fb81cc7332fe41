#pragma once

#include <functional>
#include <map>
#include <vector>

#include "qslice/envelope.hpp"

namespace qslice {

// Graded module data for the Chevalley-Eilenberg complex: a basis per Kazhdan
// degree and the action of each Lie algebra basis element as a degree shift
// by its gamma-degree.
struct CEModule {
  std::function<long(int d)> dim;
  // action of generator a on basis element i of degree d; targets live in
  // degree d + gamma_deg(a)
  std::function<std::vector<std::pair<long, Rat>>(int a, int d, long i)> act;
};

// Cochain complex C^k = Lambda^k(m'^*) (x) M in its Kazhdan-graded form.
// Duals of even elements anticommute, duals of odd elements commute; the
// dual of a gamma-degree-j element carries weight -j >= 1, so every (k, d)
// block is finite-dimensional.
class CEComplex {
 public:
  CEComplex(std::vector<int> gamma_degs, std::vector<bool> b_odd,
            std::map<std::pair<int, int>, std::vector<std::pair<int, Rat>>> brackets,
            CEModule module);

  std::size_t generators() const { return weight_.size(); }
  long cochain_dim(int k, int d);
  SparseMat differential(int k, int d);  // C^k(d) -> C^{k+1}(d)
  long h_dim(int k, int d);
  bool d_squared_is_zero(int k, int d);
  // alternating sum of cochain dimensions at Kazhdan degree d
  long euler_characteristic(int d);

 private:
  using XiMono = std::vector<std::pair<int, int>>;  // sorted (dual index, exp)

  bool xi_shifted_odd(int a) const { return !b_odd_[a]; }  // parity in Lambda
  int xi_weight(const XiMono& m) const;
  int xi_length(const XiMono& m) const;
  bool xi_total_shifted_parity(const XiMono& m) const;
  // left-multiplication xi^g * m with Koszul normalization; zero => sign 0
  std::pair<int, XiMono> xi_left_mul(int g, const XiMono& m) const;

  const std::vector<XiMono>& xi_monomials(int k, int max_weight);

  struct Block {
    std::vector<std::pair<XiMono, long>> basis;  // (xi monomial, module index)
    std::map<std::pair<XiMono, long>, std::size_t> index;
  };
  Block& block(int k, int d);

  std::vector<int> gamma_;                    // gamma degree of each b_a (<= -1)
  std::vector<int> weight_;                   // -gamma
  std::vector<bool> b_odd_;
  // quadratic part of the differential: delta(xi^c) = sum coeff xi^v xi^u
  std::vector<std::vector<std::tuple<int, int, Rat>>> delta_xi_;
  CEModule module_;
  std::map<std::pair<int, int>, std::vector<XiMono>> xi_cache_;  // per (length, budget)
  std::map<std::pair<int, int>, Block> blocks_;
  std::map<std::pair<int, int>, SparseMat> diff_cache_;
};

// The complex computing H^*(m', gr^K Q) for an envelope engine.
CEComplex ce_complex_for(EnvelopeEngine& engine);

struct CohomologyTable {
  int imax = 0;
  int dmax = 0;
  std::vector<std::vector<long>> h;  // h[i][d], 0 <= i <= imax, 0 <= d <= dmax
  std::vector<long long> slice;      // C[S] coefficients
  bool d2_ok = true;
  bool vanishing_ok = true;        // H^i(d) = 0 for 1 <= i <= imax
  bool h0_matches_slice = true;    // H^0(d) = slice coefficient
  bool euler_ok = true;            // alternating cochain sum equals slice coeff
  bool ok() const { return d2_ok && vanishing_ok && h0_matches_slice && euler_ok; }
};

CohomologyTable cohomology_dims(const NilpotentDatum& datum, const IsotropicChoice& choice,
                                int dmax, int imax);

}  // namespace qslice
