#pragma once

#include <map>
#include <string>
#include <vector>

#include "json.hpp"
#include "qslice/qsuper.hpp"

namespace qslice {

struct Partition {
  std::vector<int> parts;  // weakly increasing, each >= 1

  // Accepts parts in any order; sorts ascending. Throws std::invalid_argument
  // on empty input or non-positive parts.
  static Partition of(std::vector<int> parts);

  int total() const;
  int count() const { return static_cast<int>(parts.size()); }
  std::string str() const;
  bool operator==(const Partition&) const = default;
};

// All partitions of n, deterministically ordered.
std::vector<Partition> partitions_of(int n);

// A pyramid of shape lambda: rows of 2-unit-wide boxes, each row's span
// contained in the row below, bottom row centered at the origin. Rows are
// stored smallest part first (top of the picture); left edges are in 1-unit
// coordinates. Boxes are labelled column by column, left to right, top to
// bottom within a column.
class Pyramid {
 public:
  struct Box {
    int row;  // 0 = top row (smallest part)
    int pos;  // position within the row, 0 = leftmost
    int col;  // column center of the box
  };

  Pyramid(Partition shape, std::vector<int> left_edges);

  const Partition& shape() const { return shape_; }
  const std::vector<int>& left_edges() const { return left_edges_; }
  int n_boxes() const { return shape_.total(); }
  int n_rows() const { return shape_.count(); }

  // Per label (0-based), in label order.
  const std::vector<Box>& boxes() const { return boxes_; }
  const std::vector<int>& cols() const { return cols_; }
  // Label of the box to the left of `label` in its row, or -1.
  int left_label(int label) const { return left_labels_.at(label); }
  // Labels of the last (rightmost) boxes of each row.
  const std::vector<int>& last_labels() const { return last_labels_; }
  // Label of the box of `row` at position `pos`.
  int label_at(int row, int pos) const { return label_at_.at({row, pos}); }

  nlohmann::json to_json() const;

 private:
  Partition shape_;
  std::vector<int> left_edges_;
  std::vector<Box> boxes_;
  std::vector<int> cols_;
  std::vector<int> left_labels_;
  std::vector<int> last_labels_;
  std::map<std::pair<int, int>, int> label_at_;
};

// All pyramids of the given shape, ordered lexicographically by left edges.
std::vector<Pyramid> enumerate_pyramids(const Partition& shape);

// Grading of q(N) by integer weights on the natural basis:
// deg e^eps_{i,j} = w_j - w_i. Pyramid gradings use w_i = col(i).
class Grading {
 public:
  static Grading trivial(std::size_t n);
  static Grading from_weights(std::vector<int> w);

  std::size_t n() const { return weights_.size(); }
  int degree_of_unit(std::size_t i, std::size_t j) const { return weights_[j] - weights_[i]; }
  int degree_of_coord(std::size_t c) const;
  const std::vector<int>& weights() const { return weights_; }

  // Traceless grading element: ad h reproduces the degree map.
  const QElement& h() const { return h_; }

  std::map<int, Subspace> graded_pieces() const;
  SuperDim sudim_piece(int j) const;
  std::vector<int> occurring_degrees() const;

  // True when x is concentrated in a single degree, which is then reported.
  bool is_homogeneous(const QElement& x, int& deg) const;
  QElement component(const QElement& x, int j) const;

 private:
  explicit Grading(std::vector<int> w);
  std::vector<int> weights_;
  QElement h_;
};

QElement nilpotent_from_pyramid(const Pyramid& p);
Grading grading_from_pyramid(const Pyramid& p);

}  // namespace qslice
