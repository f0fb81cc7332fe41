#pragma once

#include <map>
#include <vector>

#include "qslice/structure.hpp"

namespace qslice {

class ZeroElement : public QsliceError {
 public:
  using QsliceError::QsliceError;
};

// PBW monomial over an ordered generator basis: sorted (generator, exponent)
// factors, odd generators with exponent at most 1.
class PBWMonomial {
 public:
  PBWMonomial() = default;
  static PBWMonomial one() { return {}; }
  static PBWMonomial generator(int g) {
    PBWMonomial m;
    m.f_.emplace_back(g, 1);
    return m;
  }

  bool empty() const { return f_.empty(); }
  int front_gen() const { return f_.front().first; }
  int total_length() const;
  const std::vector<std::pair<int, int>>& factors() const { return f_; }

  PBWMonomial popped_front() const;
  // Prepend one copy of g; requires g <= front_gen().
  PBWMonomial pushed_front(int g) const;
  // Expanded generator sequence, with multiplicities, ascending.
  std::vector<int> positions() const;

  auto operator<=>(const PBWMonomial&) const = default;

 private:
  std::vector<std::pair<int, int>> f_;
};

// Finite rational combination of PBW monomials.
class UElement {
 public:
  static UElement zero() { return {}; }
  static UElement unit() { return monomial(PBWMonomial::one(), Rat(1)); }
  static UElement monomial(const PBWMonomial& m, const Rat& c);

  const std::map<PBWMonomial, Rat>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  void add(const PBWMonomial& m, const Rat& c);
  UElement& operator+=(const UElement& o);
  UElement operator+(const UElement& o) const;
  UElement operator-(const UElement& o) const;
  UElement scaled(const Rat& c) const;
  bool operator==(const UElement& o) const { return terms_ == o.terms_; }

 private:
  std::map<PBWMonomial, Rat> terms_;
};

struct GenInfo {
  QElement value;
  int gamma_deg = 0;
  bool odd = false;
  bool in_m = false;
  int kazhdan = 2;  // gamma_deg + 2
  Rat chi_value;
  GenInfo() : value(1) {}
};

enum class BasisOrder { Standard, Alternate };

// PBW straightening engine for U(q(N)) adapted to an isotropic choice:
// complement generators first, m generators last, so that reduction modulo
// the left ideal I_l is the substitution of chi on trailing m factors.
class EnvelopeEngine {
 public:
  EnvelopeEngine(const NilpotentDatum& datum, const IsotropicChoice& choice,
                 BasisOrder order = BasisOrder::Standard);

  const std::vector<GenInfo>& gens() const { return gens_; }
  std::size_t first_m_index() const { return first_m_; }
  const std::vector<int>& m_prime_gens() const { return m_prime_gens_; }
  const NilpotentDatum& datum() const { return datum_; }

  UElement from_qelement(const QElement& x) const;

  UElement multiply(const UElement& a, const UElement& b);
  UElement mul_gen(int g, const UElement& u);

  int monomial_kazhdan(const PBWMonomial& m) const;
  int monomial_gamma(const PBWMonomial& m) const;
  bool monomial_odd(const PBWMonomial& m) const;
  int kazhdan_degree(const UElement& u) const;  // throws ZeroElement on 0

  UElement reduce_mod_I(const UElement& u) const;

  // reduce(a q - (-1)^{|a||q|} q a), computed by the super-derivation rule.
  UElement ad_gen(int a, const UElement& q);
  UElement ad_action(const QElement& a, const UElement& q);

  // Reduced monomials of Kazhdan degree <= d, ordered by (degree, lex); the
  // list for a smaller bound is a prefix of the list for a bigger one.
  const std::vector<PBWMonomial>& basis_upto(int d);
  long graded_dim(int d);  // number of reduced monomials of degree exactly d

  struct WResult {
    std::vector<long> dims;                     // dims[d] = dim F_d W
    std::vector<std::vector<UElement>> layers;  // new invariants per degree
  };
  WResult whittaker_invariants(int kmax);

 private:
  const UElement& mul_gen_mono(int g, const PBWMonomial& m);
  UElement mul_expansion(const std::vector<std::pair<int, Rat>>& expansion,
                         const PBWMonomial& m);

  NilpotentDatum datum_;
  std::vector<GenInfo> gens_;
  std::size_t first_m_ = 0;
  std::vector<int> m_prime_gens_;
  SparseMat basis_inv_;  // expansion of canonical coordinates over the basis
  std::vector<std::vector<std::vector<std::pair<int, Rat>>>> bracket_;
  std::map<std::pair<int, PBWMonomial>, UElement> memo_;
  std::vector<PBWMonomial> basis_list_;
  int basis_built_to_ = -1;
};

// Graded dimensions of the free polynomial superalgebra with the given
// generator degrees (all >= 1), as coefficients 0..kmax.
std::vector<long long> free_superalgebra_series(const std::vector<int>& even_degs,
                                                const std::vector<int>& odd_degs, int kmax);

// Coefficients of C[S]: one generator of Kazhdan degree 2 - j per basis
// vector of Pi(g_F) of gamma-degree j; polynomial generators from the even
// part of Pi(g_F), exterior generators from the odd part.
std::vector<long long> slice_hilbert_series(const NilpotentDatum& datum, int kmax);

struct NuReport {
  std::vector<long> dims_w;
  std::vector<long long> cs_coeffs;
  std::vector<long long> cs_cumulative;
  bool dims_match = false;
  int mismatch_degree = -1;
  bool gr_q_matches_free_algebra = false;
  bool ok() const { return dims_match && gr_q_matches_free_algebra; }
};

NuReport verify_nu(const NilpotentDatum& datum, const IsotropicChoice& choice, int kmax,
                   BasisOrder order = BasisOrder::Standard);

}  // namespace qslice
