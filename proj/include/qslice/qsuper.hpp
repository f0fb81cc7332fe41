#pragma once

#include <string>
#include <vector>

#include "qslice/sparse.hpp"
#include "qslice/subspace.hpp"

namespace qslice {

enum class Parity { Even, Odd };

struct SuperDim {
  long even = 0;
  long odd = 0;
  bool operator==(const SuperDim&) const = default;
  SuperDim operator+(const SuperDim& o) const { return {even + o.even, odd + o.odd}; }
  SuperDim flipped() const { return {odd, even}; }
  std::string str() const { return std::to_string(even) + "|" + std::to_string(odd); }
};

// Element of q(N): a pair (S, S') of N x N matrices, realized inside
// gl(N|N) as [[S, S'], [S', S]]. Even part has S' = 0, odd part S = 0;
// mixed values are allowed and split on demand.
class QElement {
 public:
  explicit QElement(std::size_t n) : n_(n), s_(n, n), sp_(n, n) {}
  QElement(SparseMat s, SparseMat sp);

  // e^eps_{i,j} with 0-based indices.
  static QElement unit(std::size_t n, Parity eps, std::size_t i, std::size_t j);
  static QElement identity(std::size_t n);
  static QElement diagonal(std::size_t n, const std::vector<Rat>& entries);

  std::size_t n() const { return n_; }
  const SparseMat& s() const { return s_; }
  const SparseMat& sp() const { return sp_; }

  bool is_zero() const { return s_.is_zero() && sp_.is_zero(); }
  bool is_even() const { return sp_.is_zero(); }
  bool is_odd() const { return s_.is_zero(); }
  bool is_homogeneous() const { return is_even() || is_odd(); }

  QElement even_part() const { return QElement(s_, SparseMat(n_, n_)); }
  QElement odd_part() const { return QElement(SparseMat(n_, n_), sp_); }

  QElement operator+(const QElement& o) const;
  QElement operator-(const QElement& o) const;
  QElement scaled(const Rat& c) const;

  bool operator==(const QElement& o) const { return s_ == o.s_ && sp_ == o.sp_; }

  // Canonical coordinates: e^0 units row-major, then e^1 units row-major;
  // length 2 n^2.
  std::vector<Rat> coords() const;
  static QElement from_coords(std::size_t n, const std::vector<Rat>& v);

  std::string str() const;

 private:
  std::size_t n_;
  SparseMat s_, sp_;
};

inline std::size_t coord_dim(std::size_t n) { return 2 * n * n; }
inline bool coord_is_odd(std::size_t n, std::size_t c) { return c >= n * n; }
// (i, j) of the matrix unit behind a canonical coordinate.
inline std::pair<std::size_t, std::size_t> coord_unit(std::size_t n, std::size_t c) {
  std::size_t k = c % (n * n);
  return {k / n, k % n};
}

// Matrix product of the gl(N|N) realizations, re-encoded as (S, S').
QElement mat_mul(const QElement& x, const QElement& y);

// Supercommutator [x,y] = xy - (-1)^{|x||y|} yx, extended bilinearly to
// mixed-parity inputs.
QElement bracket(const QElement& x, const QElement& y);

// Odd trace form (x,y) = otr(xy).
Rat odd_form(const QElement& x, const QElement& y);

// Parity swap: interchanges the S and S' blocks.
QElement pi(const QElement& x);

// Linear functional on q(N), stored by its values on the canonical basis.
class LinearFunctional {
 public:
  explicit LinearFunctional(std::size_t n) : n_(n), values_(coord_dim(n), Rat(0)) {}
  LinearFunctional(std::size_t n, std::vector<Rat> values);

  std::size_t n() const { return n_; }
  Rat operator()(const QElement& x) const;
  const Rat& value_on_coord(std::size_t c) const { return values_.at(c); }
  bool vanishes_on_odd() const;
  bool is_zero() const;

 private:
  std::size_t n_;
  std::vector<Rat> values_;
};

LinearFunctional functional_from_element(const QElement& e_elt);
// Inverse of the above for functionals vanishing on the odd part.
QElement element_from_functional(const LinearFunctional& chi);

}  // namespace qslice
