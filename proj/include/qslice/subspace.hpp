#pragma once

#include <vector>

#include "qslice/sparse.hpp"

namespace qslice {

// A subspace of Q^n held as a reduced row-echelon basis, so equal subspaces
// compare equal and every basis is canonical.
class Subspace {
 public:
  explicit Subspace(std::size_t ambient) : ambient_(ambient), basis_(0, ambient) {}

  static Subspace span_rows(const SparseMat& rows);
  static Subspace span(std::size_t ambient, const std::vector<std::vector<Rat>>& gens);
  static Subspace full(std::size_t ambient);

  std::size_t ambient_dim() const { return ambient_; }
  std::size_t dim() const { return basis_.rows(); }
  const SparseMat& basis() const { return basis_; }

  // Residual of v after eliminating against the basis rows.
  std::vector<Rat> reduce(std::vector<Rat> v) const;
  bool contains(const std::vector<Rat>& v) const;
  bool contains(const Subspace& other) const;

  bool operator==(const Subspace& other) const {
    return ambient_ == other.ambient_ && basis_ == other.basis_;
  }

 private:
  std::size_t ambient_;
  SparseMat basis_;
};

Subspace sum(const Subspace& a, const Subspace& b);
Subspace intersect(const Subspace& a, const Subspace& b);

// Right null space { v : m v = 0 }.
Subspace kernel(const SparseMat& m);

}  // namespace qslice
