#pragma once

#include <compare>
#include <set>
#include <utility>
#include <vector>

#include "webperm/permutation.hpp"

namespace webperm {

// A cell of the n x n chart, named by its upper-right corner: column i
// (x-coordinate) and row j (y-coordinate), both 1-based.
struct Cell {
  int i = 0;
  int j = 0;
  auto operator<=>(const Cell&) const = default;
};

using CellSet = std::set<Cell>;

enum class CellKind { Blank, Hook, Horizontal, Vertical, Crossing, Elbow };

// (i,j) is weakly northwest of (i',j'): i <= i' and j >= j'.
inline bool dominates(Cell a, Cell b) { return a.i <= b.i && a.j >= b.j; }

// Cr(sigma): cells carrying both a horizontal and a vertical line,
// i < sigma^{-1}(j) and j > sigma_i.
CellSet crossings(const Permutation& p);

// G(sigma, E). Cell contents are derived from (sigma, E) on demand:
// a hook at (i, sigma_i), horizontal line where i < sigma^{-1}(j), vertical
// line where j > sigma_i, and an elbow in place of each crossing in E.
class GridConfiguration {
 public:
  explicit GridConfiguration(Permutation sigma, CellSet resolved = {});

  const Permutation& sigma() const { return sigma_; }
  const CellSet& resolved() const { return resolved_; }
  int size() const { return sigma_.size(); }

  CellKind kind(Cell c) const;

  // Cr(sigma) \ E.
  CellSet unresolved() const;

  auto operator<=>(const GridConfiguration&) const = default;

 private:
  Permutation sigma_;
  CellSet resolved_;
};

// Maximal elements of Cr(sigma) \ E under the northwest order.
CellSet maximal_crossings(const GridConfiguration& g);

// Both require c to be a maximal unresolved crossing with no resolved cell
// strictly below it.
GridConfiguration smooth(const GridConfiguration& g, Cell c);
GridConfiguration switch_crossing(const GridConfiguration& g, Cell c);

// Which maximal crossing to resolve next: the smallest or the largest under
// the key (i, -j).
enum class SelectionStrategy { First, Last };

// Web permutations from p, sorted. Every branch of the resolution tree must
// end in a distinct permutation; a repeat raises InvariantError.
std::vector<Permutation> resolve(const Permutation& p,
                                 SelectionStrategy strategy = SelectionStrategy::First,
                                 int cap = kDefaultPermutationCap);

inline std::vector<Permutation> web_from(const Permutation& p, int cap = kDefaultPermutationCap) {
  return resolve(p, SelectionStrategy::First, cap);
}

// A perfect matching on {0, ..., 2n-1}, pairs sorted internally and as a list.
class Matching {
 public:
  Matching() = default;
  explicit Matching(std::vector<std::pair<int, int>> pairs);

  // M0 = {{0,1},{2,3},...,{2n-2,2n-1}}.
  static Matching standard(int n);

  const std::vector<std::pair<int, int>>& pairs() const { return pairs_; }

  auto operator<=>(const Matching&) const = default;

 private:
  std::vector<std::pair<int, int>> pairs_;
};

// M(sigma): strands traced through the fully resolved G(sigma, Cr(sigma))
// between the left labels 0..n-1 (bottom to top) and top labels n..2n-1
// (left to right). Defined for every sigma, since resolution from a
// non-identity start can end outside Web_n.
Matching matching(const Permutation& p);

// p_k(sigma) = sigma_2 ... sigma_k sigma_1 sigma_{k+1} ... sigma_n.
Permutation p_transform(const Permutation& p, int k);

// Number of web permutations from p whose matching is M0.
int h(const Permutation& p, int cap = kDefaultPermutationCap);

// Web permutations of [n] with matching M0, sorted.
std::vector<Permutation> tilde_web(int n, int cap = kDefaultPermutationCap);

// f(n, k) for k = 1..n (index 0 unused).
std::vector<int> f_row(int n, int cap = kDefaultPermutationCap);
int f(int n, int k, int cap = kDefaultPermutationCap);

}  // namespace webperm
