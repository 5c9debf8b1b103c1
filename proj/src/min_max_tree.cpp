#include "webperm/min_max_tree.hpp"

#include <algorithm>
#include <set>

#include "webperm/errors.hpp"

namespace webperm {

MinMaxTree::MinMaxTree(Word w) : labels_(std::move(w)) {
  require(std::set<Letter>(labels_.begin(), labels_.end()).size() == labels_.size(),
          "min-max tree: repeated letter");
  const std::size_t n = labels_.size();
  left_.assign(n, 0);
  right_.assign(n, 0);
  begin_.assign(n, 0);
  end_.assign(n, 0);
  root_ = build(1, size() + 1);
}

// Builds the tree on positions [lo, hi) and returns its root (0 if empty).
int MinMaxTree::build(int lo, int hi) {
  if (lo >= hi) return 0;
  const auto first = labels_.begin() + (lo - 1);
  const auto last = labels_.begin() + (hi - 1);
  const auto [min_it, max_it] = std::minmax_element(first, last);
  const int r = static_cast<int>(std::min(min_it, max_it) - labels_.begin()) + 1;
  begin_[idx(r)] = lo;
  end_[idx(r)] = hi;
  left_[idx(r)] = build(lo, r);
  right_[idx(r)] = build(r + 1, hi);
  return r;
}

bool MinMaxTree::is_min_node(int i) const {
  if (!is_interior(i)) return false;
  const auto first = labels_.begin() + (begin_[idx(i)] - 1);
  const auto last = labels_.begin() + (end_[idx(i)] - 1);
  return *std::min_element(first, last) == label(i);
}

bool MinMaxTree::is_max_node(int i) const {
  if (!is_interior(i)) return false;
  const auto first = labels_.begin() + (begin_[idx(i)] - 1);
  const auto last = labels_.begin() + (end_[idx(i)] - 1);
  return *std::max_element(first, last) == label(i);
}

int MinMaxTree::two_child_count() const {
  int count = 0;
  for (int i = 1; i <= size(); ++i) count += (left(i) != 0 && right(i) != 0) ? 1 : 0;
  return count;
}

int MinMaxTree::one_child_count() const {
  int count = 0;
  for (int i = 1; i <= size(); ++i) count += ((left(i) != 0) != (right(i) != 0)) ? 1 : 0;
  return count;
}

bool MinMaxTree::is_increasing() const {
  for (int i = 1; i <= size(); ++i) {
    if (is_interior(i) && !is_min_node(i)) return false;
  }
  return true;
}

MinMaxTree hr_phi(const MinMaxTree& t, int i) {
  require(i >= 1 && i <= t.size(), "hr_phi: position out of range");
  if (!t.is_interior(i)) return t;
  const bool min_node = t.is_min_node(i);
  ensure(min_node || t.is_max_node(i), "interior node is neither a min nor a max node");

  Word w = t.inorder();
  const auto first = w.begin() + (i - 1);
  const auto last = w.begin() + (t.end(i) - 1);
  Word pool(first, last);
  std::sort(pool.begin(), pool.end());
  // Left branch letters lie strictly between the subtree's extremes, so the
  // extreme opposite to node i sits in this range.
  const Letter top = min_node ? pool.back() : pool.front();
  Word rest_new = pool;
  rest_new.erase(std::find(rest_new.begin(), rest_new.end(), top));
  Word rest_old(first + 1, last);
  Word rest_sorted = rest_old;
  std::sort(rest_sorted.begin(), rest_sorted.end());
  *first = top;
  for (auto it = first + 1; it != last; ++it) {
    const auto rank = std::lower_bound(rest_sorted.begin(), rest_sorted.end(), *it) - rest_sorted.begin();
    *it = rest_new[static_cast<std::size_t>(rank)];
  }

  MinMaxTree out(std::move(w));
  ensure(out.same_shape(t), "hr_phi changed the tree shape");
  return out;
}

MinMaxTree hr_phi_set(const MinMaxTree& t, const std::vector<int>& positions) {
  MinMaxTree out = t;
  for (int i : positions) out = hr_phi(out, i);
  return out;
}

std::vector<int> alternating_max_nodes(const MinMaxTree& t) {
  std::vector<int> out;
  for (int i = 2; i <= t.size(); i += 2) {
    if (t.is_interior(i)) out.push_back(i);
  }
  return out;
}

Word lambda(const Word& w) {
  require(is_andre(w), "lambda: " + word_to_string(w) + " is not an Andre word");
  const MinMaxTree t(w);
  Word out = hr_phi_set(t, alternating_max_nodes(t)).inorder();
  ensure(is_up_down(out), "lambda produced a word that is not up-down");
  return out;
}

Word lambda_inv(const Word& w) {
  require(is_up_down(w), "lambda_inv: " + word_to_string(w) + " is not up-down");
  const MinMaxTree t(w);
  Word out = hr_phi_set(t, alternating_max_nodes(t)).inorder();
  ensure(is_andre(out), "lambda_inv produced a word that is not Andre");
  return out;
}

namespace {

template <typename F>
Permutation map_cycles(const Permutation& p, F&& f) {
  std::vector<Cycle> cycles;
  for (const auto& c : p.cycles()) cycles.push_back(f(c));
  return Permutation::from_cycles(p.size(), cycles);
}

}  // namespace

Permutation lambda_web(const Permutation& p) {
  require(is_web(p), "lambda_web: " + p.to_string() + " is not a web permutation");
  return map_cycles(p, [](const Cycle& c) { return lambda(c); });
}

Permutation lambda_web_inv(const Permutation& p) {
  require(is_cycle_up_down(p), "lambda_web_inv: " + p.to_string() + " is not cycle-up-down");
  return map_cycles(p, [](const Cycle& c) { return lambda_inv(c); });
}

}  // namespace webperm
