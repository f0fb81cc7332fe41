#include "qslice/subspace.hpp"

namespace qslice {

Subspace Subspace::span_rows(const SparseMat& rows) {
  Subspace s(rows.cols());
  s.basis_ = rref(rows);
  return s;
}

Subspace Subspace::span(std::size_t ambient, const std::vector<std::vector<Rat>>& gens) {
  return span_rows(SparseMat::from_rows(gens, ambient));
}

Subspace Subspace::full(std::size_t ambient) {
  Subspace s(ambient);
  s.basis_ = SparseMat::identity(ambient);
  return s;
}

std::vector<Rat> Subspace::reduce(std::vector<Rat> v) const {
  if (v.size() != ambient_) throw QsliceError("Subspace::reduce: dimension mismatch");
  for (std::size_t r = 0; r < basis_.rows(); ++r) {
    std::size_t pc = basis_.row(r).begin()->first;
    if (v[pc] == 0) continue;
    Rat factor = v[pc];
    for (const auto& [c, w] : basis_.row(r)) v[c] -= factor * w;
  }
  return v;
}

bool Subspace::contains(const std::vector<Rat>& v) const {
  for (const Rat& x : reduce(v))
    if (x != 0) return false;
  return true;
}

bool Subspace::contains(const Subspace& other) const {
  for (std::size_t r = 0; r < other.basis_.rows(); ++r)
    if (!contains(other.basis_.dense_row(r))) return false;
  return true;
}

Subspace kernel(const SparseMat& m) {
  SparseMat red = rref(m);
  std::vector<std::size_t> pivots = pivot_columns(red);
  std::vector<bool> is_pivot(m.cols(), false);
  for (std::size_t p : pivots) is_pivot[p] = true;
  std::vector<std::vector<Rat>> gens;
  for (std::size_t f = 0; f < m.cols(); ++f) {
    if (is_pivot[f]) continue;
    std::vector<Rat> v(m.cols(), Rat(0));
    v[f] = 1;
    for (std::size_t r = 0; r < red.rows(); ++r) {
      Rat entry = red.get(r, f);
      if (entry != 0) v[pivots[r]] = -entry;
    }
    gens.push_back(std::move(v));
  }
  return Subspace::span(m.cols(), gens);
}

Subspace sum(const Subspace& a, const Subspace& b) {
  if (a.ambient_dim() != b.ambient_dim()) throw QsliceError("subspace sum: ambient mismatch");
  return Subspace::span_rows(a.basis().vstack(b.basis()));
}

Subspace intersect(const Subspace& a, const Subspace& b) {
  if (a.ambient_dim() != b.ambient_dim())
    throw QsliceError("subspace intersection: ambient mismatch");
  // x = u A = v B  <=>  (u, v) in ker [A^T | -B^T]
  const std::size_t ka = a.dim(), kb = b.dim();
  if (ka == 0 || kb == 0) return Subspace(a.ambient_dim());
  SparseMat at = a.basis().transpose();
  SparseMat bt = b.basis().transpose().scaled(Rat(-1));
  SparseMat sys = at.hstack(bt);
  // kernel of sys: rref + free-variable vectors
  SparseMat red = rref(sys);
  std::vector<std::size_t> pivots = pivot_columns(red);
  std::vector<bool> is_pivot(ka + kb, false);
  for (std::size_t p : pivots) is_pivot[p] = true;
  std::vector<std::vector<Rat>> gens;
  for (std::size_t f = 0; f < ka + kb; ++f) {
    if (is_pivot[f]) continue;
    // kernel vector: 1 at f, -red[r][f] at pivot columns
    std::vector<Rat> u(ka, Rat(0));
    if (f < ka) u[f] = 1;
    for (std::size_t r = 0; r < red.rows(); ++r) {
      Rat entry = red.get(r, f);
      if (entry == 0) continue;
      std::size_t pc = pivots[r];
      if (pc < ka) u[pc] = -entry;
    }
    gens.push_back(a.basis().apply_left(u));
  }
  return Subspace::span(a.ambient_dim(), gens);
}

}  // namespace qslice
