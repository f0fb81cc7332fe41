#include "qslice/sparse.hpp"

#include <algorithm>

namespace qslice {

SparseMat SparseMat::identity(std::size_t n) {
  SparseMat m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.data_[i][i] = 1;
  return m;
}

SparseMat SparseMat::from_rows(const std::vector<std::vector<Rat>>& rows, std::size_t cols) {
  std::size_t c = cols;
  for (const auto& r : rows) c = std::max(c, r.size());
  SparseMat m(rows.size(), c);
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < rows[i].size(); ++j)
      if (rows[i][j] != 0) m.data_[i][j] = rows[i][j];
  return m;
}

Rat SparseMat::get(std::size_t r, std::size_t c) const {
  const auto& row = data_.at(r);
  auto it = row.find(c);
  return it == row.end() ? Rat(0) : it->second;
}

void SparseMat::set(std::size_t r, std::size_t c, const Rat& v) {
  if (r >= rows_ || c >= cols_) throw QsliceError("SparseMat::set index out of range");
  if (v == 0)
    data_[r].erase(c);
  else
    data_[r][c] = v;
}

void SparseMat::add_at(std::size_t r, std::size_t c, const Rat& v) {
  if (v == 0) return;
  auto& row = data_.at(r);
  auto it = row.find(c);
  if (it == row.end()) {
    row.emplace(c, v);
  } else {
    it->second += v;
    if (it->second == 0) row.erase(it);
  }
}

void SparseMat::set_row(std::size_t r, std::map<std::size_t, Rat> entries) {
  data_.at(r) = std::move(entries);
}

std::size_t SparseMat::entry_count() const {
  std::size_t n = 0;
  for (const auto& r : data_) n += r.size();
  return n;
}

bool SparseMat::is_zero() const { return entry_count() == 0; }

SparseMat SparseMat::transpose() const {
  SparseMat t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (const auto& [c, v] : data_[r]) t.data_[c][r] = v;
  return t;
}

SparseMat SparseMat::operator*(const SparseMat& other) const {
  if (cols_ != other.rows_) throw QsliceError("SparseMat multiply: shape mismatch");
  SparseMat out(rows_, other.cols_);
  for (std::size_t r = 0; r < rows_; ++r) {
    std::map<std::size_t, Rat> acc;
    for (const auto& [k, v] : data_[r]) {
      for (const auto& [c, w] : other.data_[k]) {
        auto it = acc.find(c);
        if (it == acc.end()) {
          acc.emplace(c, v * w);
        } else {
          it->second += v * w;
        }
      }
    }
    for (auto it = acc.begin(); it != acc.end();) {
      if (it->second == 0)
        it = acc.erase(it);
      else
        ++it;
    }
    out.data_[r] = std::move(acc);
  }
  return out;
}

SparseMat SparseMat::operator+(const SparseMat& other) const {
  if (rows_ != other.rows_ || cols_ != other.cols_)
    throw QsliceError("SparseMat add: shape mismatch");
  SparseMat out = *this;
  for (std::size_t r = 0; r < rows_; ++r)
    for (const auto& [c, v] : other.data_[r]) out.add_at(r, c, v);
  return out;
}

SparseMat SparseMat::operator-(const SparseMat& other) const {
  if (rows_ != other.rows_ || cols_ != other.cols_)
    throw QsliceError("SparseMat subtract: shape mismatch");
  SparseMat out = *this;
  for (std::size_t r = 0; r < rows_; ++r)
    for (const auto& [c, v] : other.data_[r]) out.add_at(r, c, -v);
  return out;
}

SparseMat SparseMat::scaled(const Rat& c) const {
  SparseMat out(rows_, cols_);
  if (c == 0) return out;
  for (std::size_t r = 0; r < rows_; ++r)
    for (const auto& [col, v] : data_[r]) out.data_[r][col] = c * v;
  return out;
}

std::vector<Rat> SparseMat::apply(const std::vector<Rat>& v) const {
  if (v.size() != cols_) throw QsliceError("SparseMat apply: size mismatch");
  std::vector<Rat> out(rows_, Rat(0));
  for (std::size_t r = 0; r < rows_; ++r)
    for (const auto& [c, w] : data_[r]) out[r] += w * v[c];
  return out;
}

std::vector<Rat> SparseMat::apply_left(const std::vector<Rat>& v) const {
  if (v.size() != rows_) throw QsliceError("SparseMat apply_left: size mismatch");
  std::vector<Rat> out(cols_, Rat(0));
  for (std::size_t r = 0; r < rows_; ++r) {
    if (v[r] == 0) continue;
    for (const auto& [c, w] : data_[r]) out[c] += v[r] * w;
  }
  return out;
}

SparseMat SparseMat::vstack(const SparseMat& below) const {
  if (cols_ != below.cols_ && rows_ != 0 && below.rows_ != 0)
    throw QsliceError("SparseMat vstack: column mismatch");
  SparseMat out(rows_ + below.rows_, std::max(cols_, below.cols_));
  for (std::size_t r = 0; r < rows_; ++r) out.data_[r] = data_[r];
  for (std::size_t r = 0; r < below.rows_; ++r) out.data_[rows_ + r] = below.data_[r];
  return out;
}

SparseMat SparseMat::hstack(const SparseMat& right) const {
  if (rows_ != right.rows_) throw QsliceError("SparseMat hstack: row mismatch");
  SparseMat out(rows_, cols_ + right.cols_);
  for (std::size_t r = 0; r < rows_; ++r) {
    out.data_[r] = data_[r];
    for (const auto& [c, v] : right.data_[r]) out.data_[r][cols_ + c] = v;
  }
  return out;
}

std::vector<Rat> SparseMat::dense_row(std::size_t r) const {
  std::vector<Rat> out(cols_, Rat(0));
  for (const auto& [c, v] : data_.at(r)) out[c] = v;
  return out;
}

bool SparseMat::operator==(const SparseMat& other) const {
  return rows_ == other.rows_ && cols_ == other.cols_ && data_ == other.data_;
}

namespace {

// In-place Gauss-Jordan on a row list; returns the echelonized rows with zero
// rows removed.
std::vector<std::map<std::size_t, Rat>> eliminate(std::vector<std::map<std::size_t, Rat>> rows,
                                                  std::size_t cols) {
  std::size_t pivot_row = 0;
  for (std::size_t col = 0; col < cols && pivot_row < rows.size(); ++col) {
    std::size_t found = rows.size();
    for (std::size_t r = pivot_row; r < rows.size(); ++r) {
      auto it = rows[r].begin();
      if (it != rows[r].end() && it->first == col) {
        found = r;
        break;
      }
    }
    if (found == rows.size()) continue;
    std::swap(rows[pivot_row], rows[found]);
    // normalize pivot to 1
    Rat p = rows[pivot_row].begin()->second;
    if (p != 1)
      for (auto& [c, v] : rows[pivot_row]) v /= p;
    // eliminate from every other row
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (r == pivot_row) continue;
      auto it = rows[r].find(col);
      if (it == rows[r].end()) continue;
      Rat factor = it->second;
      for (const auto& [c, v] : rows[pivot_row]) {
        auto jt = rows[r].find(c);
        if (jt == rows[r].end()) {
          rows[r].emplace(c, -factor * v);
        } else {
          jt->second -= factor * v;
          if (jt->second == 0) rows[r].erase(jt);
        }
      }
    }
    ++pivot_row;
  }
  rows.erase(std::remove_if(rows.begin(), rows.end(),
                            [](const std::map<std::size_t, Rat>& r) { return r.empty(); }),
             rows.end());
  // sort by pivot column; after full reduction this already holds except for
  // rows skipped above, so sorting keeps the form canonical
  std::sort(rows.begin(), rows.end(),
            [](const auto& a, const auto& b) { return a.begin()->first < b.begin()->first; });
  return rows;
}

}  // namespace

SparseMat rref(const SparseMat& m) {
  std::vector<std::map<std::size_t, Rat>> rows;
  rows.reserve(m.rows());
  for (std::size_t r = 0; r < m.rows(); ++r)
    if (!m.row(r).empty()) rows.push_back(m.row(r));
  rows = eliminate(std::move(rows), m.cols());
  SparseMat out(rows.size(), m.cols());
  for (std::size_t r = 0; r < rows.size(); ++r) out.set_row(r, std::move(rows[r]));
  return out;
}

std::size_t rank(const SparseMat& m) { return rref(m).rows(); }

std::vector<std::size_t> pivot_columns(const SparseMat& r) {
  std::vector<std::size_t> out;
  out.reserve(r.rows());
  for (std::size_t i = 0; i < r.rows(); ++i) out.push_back(r.row(i).begin()->first);
  return out;
}

std::optional<std::vector<Rat>> solve(const SparseMat& m, const std::vector<Rat>& b) {
  if (b.size() != m.rows()) throw QsliceError("solve: rhs length mismatch");
  SparseMat aug(m.rows(), m.cols() + 1);
  for (std::size_t r = 0; r < m.rows(); ++r) {
    auto row = m.row(r);
    if (b[r] != 0) row[m.cols()] = b[r];
    aug.set_row(r, std::move(row));
  }
  SparseMat red = rref(aug);
  std::vector<Rat> x(m.cols(), Rat(0));
  for (std::size_t r = 0; r < red.rows(); ++r) {
    std::size_t pc = red.row(r).begin()->first;
    if (pc == m.cols()) return std::nullopt;  // 0 = 1 row
    x[pc] = red.get(r, m.cols());
  }
  return x;
}

SparseMat inverse(const SparseMat& m) {
  if (m.rows() != m.cols()) throw QsliceError("inverse: not square");
  SparseMat aug = m.hstack(SparseMat::identity(m.rows()));
  SparseMat red = rref(aug);
  if (red.rows() != m.rows() || pivot_columns(red).back() >= m.cols())
    throw QsliceError("inverse: singular matrix");
  for (std::size_t r = 0; r < red.rows(); ++r)
    if (pivot_columns(red)[r] != r) throw QsliceError("inverse: singular matrix");
  SparseMat out(m.rows(), m.cols());
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (const auto& [c, v] : red.row(r))
      if (c >= m.cols()) out.set(r, c - m.cols(), v);
  return out;
}

}  // namespace qslice
