#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <stdexcept>
#include <vector>

#include "qslice/rational.hpp"

namespace qslice {

class QsliceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Sparse matrix over Q. Rows hold ordered (col -> value) maps with no stored
// zeros; all arithmetic is exact.
class SparseMat {
 public:
  SparseMat() = default;
  SparseMat(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows) {}

  static SparseMat identity(std::size_t n);
  static SparseMat from_rows(const std::vector<std::vector<Rat>>& rows, std::size_t cols = 0);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Rat get(std::size_t r, std::size_t c) const;
  void set(std::size_t r, std::size_t c, const Rat& v);
  void add_at(std::size_t r, std::size_t c, const Rat& v);

  const std::map<std::size_t, Rat>& row(std::size_t r) const { return data_.at(r); }
  void set_row(std::size_t r, std::map<std::size_t, Rat> entries);

  std::size_t entry_count() const;
  bool is_zero() const;

  SparseMat transpose() const;
  SparseMat operator*(const SparseMat& other) const;
  SparseMat operator+(const SparseMat& other) const;
  SparseMat operator-(const SparseMat& other) const;
  SparseMat scaled(const Rat& c) const;

  // matrix * column vector
  std::vector<Rat> apply(const std::vector<Rat>& v) const;
  // row vector * matrix
  std::vector<Rat> apply_left(const std::vector<Rat>& v) const;

  SparseMat vstack(const SparseMat& below) const;
  SparseMat hstack(const SparseMat& right) const;

  std::vector<Rat> dense_row(std::size_t r) const;

  bool operator==(const SparseMat& other) const;

 private:
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<std::map<std::size_t, Rat>> data_;
};

// Reduced row echelon form: unique, pivots 1, pivot columns strictly
// increasing, zero rows dropped. Pivot search takes the smallest column with
// a nonzero entry so results are canonical.
SparseMat rref(const SparseMat& m);

std::size_t rank(const SparseMat& m);

// Pivot columns of a matrix already in rref.
std::vector<std::size_t> pivot_columns(const SparseMat& r);

// One particular solution of m x = b (free variables set to 0), or nullopt
// when the system is inconsistent.
std::optional<std::vector<Rat>> solve(const SparseMat& m, const std::vector<Rat>& b);

// Exact inverse; throws QsliceError on singular input.
SparseMat inverse(const SparseMat& m);

}  // namespace qslice
