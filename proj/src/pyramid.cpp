#include "qslice/pyramid.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace qslice {

Partition Partition::of(std::vector<int> parts) {
  if (parts.empty()) throw std::invalid_argument("partition must have at least one part");
  for (int p : parts)
    if (p < 1) throw std::invalid_argument("partition parts must be positive");
  std::sort(parts.begin(), parts.end());
  return Partition{std::move(parts)};
}

int Partition::total() const { return std::accumulate(parts.begin(), parts.end(), 0); }

std::string Partition::str() const {
  std::ostringstream out;
  out << "(";
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i) out << ",";
    out << parts[i];
  }
  out << ")";
  return out.str();
}

std::vector<Partition> partitions_of(int n) {
  std::vector<Partition> out;
  std::vector<int> cur;
  // weakly increasing parts, largest part last
  auto rec = [&](auto&& self, int remaining, int max_part) -> void {
    if (remaining == 0) {
      std::vector<int> parts(cur.rbegin(), cur.rend());
      out.push_back(Partition{std::move(parts)});
      return;
    }
    for (int p = std::min(remaining, max_part); p >= 1; --p) {
      cur.push_back(p);
      self(self, remaining - p, p);
      cur.pop_back();
    }
  };
  rec(rec, n, n);
  std::sort(out.begin(), out.end(),
            [](const Partition& a, const Partition& b) { return a.parts < b.parts; });
  return out;
}

Pyramid::Pyramid(Partition shape, std::vector<int> left_edges)
    : shape_(std::move(shape)), left_edges_(std::move(left_edges)) {
  const int n_rows = shape_.count();
  if (static_cast<int>(left_edges_.size()) != n_rows)
    throw std::invalid_argument("pyramid: one left edge per row required");
  const auto& p = shape_.parts;
  if (left_edges_.back() != -p.back())
    throw std::invalid_argument("pyramid: bottom row must be centered");
  for (int r = 0; r + 1 < n_rows; ++r) {
    // row r sits on top of row r+1
    if (left_edges_[r] < left_edges_[r + 1] ||
        left_edges_[r] + 2 * p[r] > left_edges_[r + 1] + 2 * p[r + 1])
      throw std::invalid_argument("pyramid: stair containment violated");
  }

  // column-major labelling
  std::vector<Box> unlabeled;
  for (int r = 0; r < n_rows; ++r)
    for (int k = 0; k < p[r]; ++k) unlabeled.push_back(Box{r, k, left_edges_[r] + 2 * k + 1});
  std::stable_sort(unlabeled.begin(), unlabeled.end(), [](const Box& a, const Box& b) {
    if (a.col != b.col) return a.col < b.col;
    return a.row < b.row;
  });
  boxes_ = std::move(unlabeled);

  const int n = shape_.total();
  cols_.resize(n);
  left_labels_.assign(n, -1);
  last_labels_.assign(n_rows, -1);
  for (int label = 0; label < n; ++label) {
    cols_[label] = boxes_[label].col;
    label_at_[{boxes_[label].row, boxes_[label].pos}] = label;
  }
  for (int label = 0; label < n; ++label) {
    const Box& b = boxes_[label];
    if (b.pos > 0) left_labels_[label] = label_at_.at({b.row, b.pos - 1});
    if (b.pos == p[b.row] - 1) last_labels_[b.row] = label;
  }
}

nlohmann::json Pyramid::to_json() const {
  nlohmann::json j;
  j["partition"] = shape_.parts;
  j["left_edges"] = left_edges_;
  j["cols"] = cols_;
  return j;
}

std::vector<Pyramid> enumerate_pyramids(const Partition& shape) {
  const auto& p = shape.parts;
  const int n_rows = shape.count();
  std::vector<Pyramid> out;
  std::vector<int> edges(n_rows, 0);
  edges[n_rows - 1] = -p[n_rows - 1];
  auto rec = [&](auto&& self, int row) -> void {
    if (row < 0) {
      out.emplace_back(shape, edges);
      return;
    }
    // permissible 1-unit shifts keeping row inside the row below
    for (int le = edges[row + 1]; le + 2 * p[row] <= edges[row + 1] + 2 * p[row + 1]; ++le) {
      edges[row] = le;
      self(self, row - 1);
    }
  };
  if (n_rows == 1)
    out.emplace_back(shape, edges);
  else
    rec(rec, n_rows - 2);
  std::sort(out.begin(), out.end(),
            [](const Pyramid& a, const Pyramid& b) { return a.left_edges() < b.left_edges(); });
  return out;
}

Grading::Grading(std::vector<int> w) : weights_(std::move(w)), h_(weights_.size()) {
  const std::size_t n = weights_.size();
  // h = -diag(w) + (sum w)/n * I realizes the degrees and is traceless.
  long sum = std::accumulate(weights_.begin(), weights_.end(), 0L);
  std::vector<Rat> diag(n);
  for (std::size_t i = 0; i < n; ++i) diag[i] = Rat(-weights_[i]) + Rat(sum, long(n));
  h_ = QElement::diagonal(n, diag);
}

Grading Grading::trivial(std::size_t n) { return Grading(std::vector<int>(n, 0)); }

Grading Grading::from_weights(std::vector<int> w) {
  if (w.empty()) throw std::invalid_argument("grading needs at least one weight");
  return Grading(std::move(w));
}

int Grading::degree_of_coord(std::size_t c) const {
  auto [i, j] = coord_unit(n(), c);
  return degree_of_unit(i, j);
}

std::map<int, Subspace> Grading::graded_pieces() const {
  std::map<int, std::vector<std::vector<Rat>>> gens;
  const std::size_t d = coord_dim(n());
  for (std::size_t c = 0; c < d; ++c) {
    std::vector<Rat> v(d, Rat(0));
    v[c] = 1;
    gens[degree_of_coord(c)].push_back(std::move(v));
  }
  std::map<int, Subspace> out;
  for (auto& [deg, rows] : gens) out.emplace(deg, Subspace::span(d, rows));
  return out;
}

SuperDim Grading::sudim_piece(int j) const {
  SuperDim s;
  const std::size_t d = coord_dim(n());
  for (std::size_t c = 0; c < d; ++c)
    if (degree_of_coord(c) == j) (coord_is_odd(n(), c) ? s.odd : s.even) += 1;
  return s;
}

std::vector<int> Grading::occurring_degrees() const {
  std::vector<int> degs;
  const std::size_t d = coord_dim(n());
  for (std::size_t c = 0; c < d; ++c) degs.push_back(degree_of_coord(c));
  std::sort(degs.begin(), degs.end());
  degs.erase(std::unique(degs.begin(), degs.end()), degs.end());
  return degs;
}

bool Grading::is_homogeneous(const QElement& x, int& deg) const {
  bool found = false;
  std::vector<Rat> v = x.coords();
  for (std::size_t c = 0; c < v.size(); ++c) {
    if (v[c] == 0) continue;
    int d = degree_of_coord(c);
    if (!found) {
      deg = d;
      found = true;
    } else if (d != deg) {
      return false;
    }
  }
  if (!found) deg = 0;
  return true;
}

QElement Grading::component(const QElement& x, int j) const {
  std::vector<Rat> v = x.coords();
  for (std::size_t c = 0; c < v.size(); ++c)
    if (v[c] != 0 && degree_of_coord(c) != j) v[c] = 0;
  return QElement::from_coords(x.n(), v);
}

QElement nilpotent_from_pyramid(const Pyramid& p) {
  const std::size_t n = p.n_boxes();
  QElement e(n);
  for (int label = 0; label < static_cast<int>(n); ++label) {
    int left = p.left_label(label);
    if (left >= 0) e = e + QElement::unit(n, Parity::Even, left, label);
  }
  return e;
}

Grading grading_from_pyramid(const Pyramid& p) { return Grading::from_weights(p.cols()); }

}  // namespace qslice
