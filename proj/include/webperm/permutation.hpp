#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <string>
#include <string_view>
#include <vector>

namespace webperm {

using Letter = int;

// A sequence of distinct positive integers. Most of the recursive
// definitions (Andre, mix, min-max trees) descend into subwords, so they are
// stated on words rather than on permutations of [n].
using Word = std::vector<Letter>;

// A cycle listed in the order it is traversed.
using Cycle = std::vector<Letter>;

// Disjoint cycles, each rotated to start at its minimum and sorted by minimum.
using CycleDecomposition = std::vector<Cycle>;

inline constexpr int kDefaultPermutationCap = 9;

class Permutation {
 public:
  Permutation() = default;

  // Throws PreconditionError unless `oneline` is a bijection of {1..n}.
  explicit Permutation(Word oneline);

  static Permutation identity(int n);
  static Permutation from_cycles(int n, const std::vector<Cycle>& cycles);

  // Accepts "1324" (letters < 10 only) or a list separated by spaces/commas.
  static Permutation parse(std::string_view text);

  int size() const { return static_cast<int>(oneline_.size()); }
  bool empty() const { return oneline_.empty(); }

  // sigma_i, 1-based.
  Letter at(int i) const { return oneline_[static_cast<std::size_t>(i - 1)]; }
  // sigma^{-1}(v), 1-based.
  int position_of(Letter v) const;

  const Word& word() const { return oneline_; }

  Permutation inverse() const;
  // (*this o rhs)(i) = (*this)(rhs(i)).
  Permutation compose(const Permutation& rhs) const;
  // sigma * t_{i,l}: exchanges the letters at positions i and l.
  Permutation swap_positions(int i, int l) const;

  CycleDecomposition cycles() const;

  // Concatenated digits when n <= 9, space separated otherwise.
  std::string to_string() const;

  auto operator<=>(const Permutation&) const = default;

 private:
  Word oneline_;
};

struct StatRecord {
  int des = 0;
  int drop = 0;
  int fix = 0;
  int cyc = 0;
  int lmi = 0;
  int rmi = 0;
  int lmidd = 0;
  int rmida = 0;
  int pk = 0;
  int valley_count = 0;

  int lrmi() const { return lmi + rmi - 2; }

  auto operator<=>(const StatRecord&) const = default;
};

// Descents, peaks, valleys and double ascents/descents use the convention
// sigma_0 = sigma_{n+1} = +infinity. Left/right minima use no sentinel.
StatRecord statistics(const Permutation& p);

int descents(const Word& w);
// Letters of w that are valleys (resp. double ascents, double descents)
// under the +infinity boundary convention, in order of appearance.
Word valleys(const Word& w);
Word double_ascents(const Word& w);
Word double_descents(const Word& w);

// w1 < w2 > w3 < ... ; empty and one-letter words qualify.
bool is_up_down(const Word& w);

// Andre permutation of the first kind, by the recursive min-split rule.
bool is_andre(const Word& w);

// Andre test through x-factorizations: max(w2 x) <= max(x w3) for every x.
bool is_andre_xfact(const Word& w);

// Rotates the cycle to its minimum, drops it, and tests the rest.
bool is_andre_cycle(const Cycle& c);

bool is_web(const Permutation& p);
bool is_cycle_up_down(const Permutation& p);

int mix(const Word& w);

// Sum over canonical cycles (a1 ... al) of mix(a1 ... al) + [l > 1].
int drop_hat(const Permutation& p);

// Visits all n! permutations in lexicographic order. Throws CapExceeded if
// n > cap.
void for_each_permutation(int n, const std::function<void(const Permutation&)>& visit,
                          int cap = kDefaultPermutationCap);
std::vector<Permutation> enumerate(int n, int cap = kDefaultPermutationCap);

std::string word_to_string(const Word& w);

}  // namespace webperm
