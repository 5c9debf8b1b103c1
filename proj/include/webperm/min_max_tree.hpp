#pragma once

#include <compare>
#include <vector>

#include "webperm/permutation.hpp"

namespace webperm {

// Min-max tree of a word of distinct letters. The root is the first letter
// that is either the minimum or the maximum of the word; the letters before
// and after it form the left and right branches, recursively.
//
// Nodes are named by their inorder position 1..n, which is also their
// position in the word, so the shape is just a pair of child tables.
class MinMaxTree {
 public:
  MinMaxTree() = default;
  explicit MinMaxTree(Word w);

  int size() const { return static_cast<int>(labels_.size()); }
  const Word& inorder() const { return labels_; }
  Letter label(int i) const { return labels_[idx(i)]; }

  // 0 when absent.
  int root() const { return root_; }
  int left(int i) const { return left_[idx(i)]; }
  int right(int i) const { return right_[idx(i)]; }

  bool is_interior(int i) const { return left(i) != 0 || right(i) != 0; }
  bool is_min_node(int i) const;
  bool is_max_node(int i) const;

  // Node i together with its right branch occupies positions [i, end(i)).
  int end(int i) const { return end_[idx(i)]; }

  int two_child_count() const;
  int one_child_count() const;
  // Every interior node is a min node.
  bool is_increasing() const;

  bool same_shape(const MinMaxTree& other) const {
    return left_ == other.left_ && right_ == other.right_;
  }

  auto operator<=>(const MinMaxTree&) const = default;

 private:
  static std::size_t idx(int i) { return static_cast<std::size_t>(i - 1); }
  int build(int lo, int hi);

  Word labels_;
  int root_ = 0;
  std::vector<int> left_;
  std::vector<int> right_;
  std::vector<int> begin_;
  std::vector<int> end_;
};

// Hetyei-Reiner action at inorder position i: if node i is a min (max) node,
// it takes the largest (smallest) label of the subtree formed by i and its
// right branch, and the other labels there keep their relative order.
// Leaves are fixed.
MinMaxTree hr_phi(const MinMaxTree& t, int i);
MinMaxTree hr_phi_set(const MinMaxTree& t, const std::vector<int>& positions);

// Interior nodes at even inorder positions, i.e. those labelled "max" when
// the nodes are tagged min, max, min, ... along the word.
std::vector<int> alternating_max_nodes(const MinMaxTree& t);

// Andre word -> up-down word with the same first letter and shape, and back.
Word lambda(const Word& w);
Word lambda_inv(const Word& w);

// Applies lambda to each canonical cycle word (a1 ... ak), a1 the minimum.
Permutation lambda_web(const Permutation& p);
Permutation lambda_web_inv(const Permutation& p);

}  // namespace webperm
