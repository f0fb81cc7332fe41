#pragma once

#include <optional>
#include <vector>

#include "qslice/pyramid.hpp"
#include "qslice/qsuper.hpp"

namespace qslice {

class CenterNotDegreeZero : public QsliceError {
 public:
  using QsliceError::QsliceError;
};
class TripleNotFound : public QsliceError {
 public:
  using QsliceError::QsliceError;
};
class DegenerateForm : public QsliceError {
 public:
  using QsliceError::QsliceError;
};
class IsotropicConstructionFailure : public QsliceError {
 public:
  using QsliceError::QsliceError;
};

// Superdimension of a subspace whose rref basis rows are parity pure; all
// subspaces produced here are Z2-graded in the canonical coordinates.
SuperDim sudim(const Subspace& s);

// Kernel of ad x on q(N) in canonical coordinates. x must be Z2-homogeneous.
Subspace centralizer(const QElement& x);
// { y : chi([y, g]) = 0 }.
Subspace centralizer_of_functional(const LinearFunctional& chi);
// Matrix of ad x restricted to the canonical basis (columns y -> [x,y]).
SparseMat ad_matrix(const QElement& x);

// Basis of gl(N) matrices anticommuting with e^P, built from the pyramid
// combinatorics: z_{j,i;k}(v_{t_i}) = e^k v_{t_j} with p_j > k >= max(0, p_j - p_i),
// extended by z(e^m v) = (-1)^m e^m z(v). Returned as even elements of q(N).
std::vector<QElement> anticommutant_basis(const QElement& e, const Pyramid& p);

struct GoodnessReport {
  bool gg1 = false;       // chi(g_{!= -2}) = 0
  bool gg2 = false;       // g_chi inside g_{>= 0}
  bool gg1_prime = false; // E in g_2
  bool gg2_prime = false; // g_E inside g_{>= 0}
  bool gg3 = false;       // (g_i, g_j) = 0 unless i + j = 0
  bool gl_good = false;   // restricted grading of gl(N) is good for e
  bool good() const { return gg1 && gg2; }
  bool equivalences_hold() const {
    return gg1 == gg1_prime && gg2 == gg2_prime && good() == gl_good;
  }
};

GoodnessReport check_good(const Grading& grading, const LinearFunctional& chi);

// Completes a homogeneous nilpotent e in g_2 to a graded sl(2)-triple
// (h in g_{0,even}, f in g_{-2,even}). Throws TripleNotFound when the linear
// system has no solution.
std::pair<QElement, QElement> sl2_complete(const QElement& e, const Grading& grading);

struct NilpotentDatum {
  std::size_t n = 0;
  QElement e, big_e, h, f, big_f;  // big_e = pi(e), big_f = pi(f)
  LinearFunctional chi;
  Grading grading;

  NilpotentDatum(QElement e_in, Grading grading_in);
};

NilpotentDatum datum_from_pyramid(const Pyramid& p);

// Gram data of <x,y> = chi([x,y]) on g_{-1}, split by parity.
struct GramForm {
  std::vector<QElement> even_basis;  // matrix units of g_{-1, even}
  std::vector<QElement> odd_basis;
  SparseMat even_gram;  // alternating
  SparseMat odd_gram;   // symmetric, zero diagonal in this basis
};

GramForm form_on_g_minus1(const NilpotentDatum& datum);

enum class IsotropicMode { Lagrangian, Zero };

struct IsotropicChoice {
  IsotropicMode mode = IsotropicMode::Zero;
  // Bases of l and l' and of a complement of l inside g_{-1}; all vectors are
  // gamma- and parity-homogeneous.
  std::vector<QElement> l_even, l_odd;
  std::vector<QElement> lperp_even, lperp_odd;
  std::vector<QElement> complement_even, complement_odd;
  // m = l + g_{<= -2}, m' = l' + g_{<= -2}; bases in the same order the
  // envelope consumes them.
  std::vector<QElement> m_basis, m_prime_basis;
  Subspace m, m_prime;
  IsotropicChoice() : m(0), m_prime(0) {}
};

IsotropicChoice isotropic_choice(const NilpotentDatum& datum, IsotropicMode mode);

struct MPerpReport {
  SuperDim mperp, bracket_part, pi_gf_part;
  bool zero_intersection = false;
  bool direct_sum = false;       // sum of the parts equals m-perp
  bool proof_identity = false;   // sudim m-perp = sudim pi(m') + sudim g_0 + sudim g_{-1}
  bool ok() const { return zero_intersection && direct_sum && proof_identity; }
};

MPerpReport mperp_decomposition(const NilpotentDatum& datum, const IsotropicChoice& choice);

struct AdERow {
  int j = 0;
  SuperDim dim_gj, dim_gj2;
  SuperDim rank;                // rank of ad E : g_j -> g_{j+2}, per parity flip
  bool injective_ok = true;     // checked for j <= -1
  bool surjective_ok = true;    // checked for j >= -1
};

struct GradingPropsReport {
  std::vector<AdERow> rows;
  SuperDim sudim_g_e, sudim_g0, sudim_g1;
  bool dimension_identity = false;
  bool all_ok() const;
};

GradingPropsReport check_grading_properties(const NilpotentDatum& datum);

// Graded centralizer pieces keyed by gamma-degree, split by parity; used for
// g_F and the slice series.
std::map<int, SuperDim> graded_centralizer_sudims(const QElement& x, const Grading& grading);

}  // namespace qslice
