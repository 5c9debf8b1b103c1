#pragma once

#include <vector>

#include "webperm/permutation.hpp"

namespace webperm {

// w = w1 w2 x w3 w4, where w2 (resp. w3) is the maximal run immediately left
// (resp. right) of x whose letters all exceed x.
struct XFactorization {
  Word w1, w2, w3, w4;
  Letter x = 0;

  Word concat() const;
};

XFactorization x_factorization(const Word& w, Letter x);

// Foata-Strehl: phi_x(w1 w2 x w3 w4) = w1 w3 x w2 w4.
Word fs_phi(const Word& w, Letter x);
// phi_S as the composition of phi_x over x in S (the phi_x commute).
Word fs_phi_set(const Word& w, const std::vector<Letter>& s);

// sigma = alpha_1 ... alpha_k 1 beta_1 ... beta_l. Each alpha block starts
// with a left-to-right minimum (its smallest letter); each beta block ends
// with a right-to-left minimum (its smallest letter).
struct BiBasicDecomposition {
  std::vector<Word> alpha_blocks;
  std::vector<Word> beta_blocks;

  Word concat() const;
  auto operator<=>(const BiBasicDecomposition&) const = default;
};

BiBasicDecomposition bi_basic(const Permutation& p);

// Membership in the double-descent-free class, boundary letters +infinity.
bool has_no_double_descents(const Permutation& p);

// Valleys other than the letter 1, in order of appearance.
Word bfs_valleys(const Permutation& p);

// Block Foata-Strehl action on double-descent-free permutations.
//  1. x opens alpha block A: apply phi over the double ascents inside A,
//     reverse, and move it among the beta blocks, placed so the last letters
//     of beta blocks stay increasing (x becomes a new right-to-left minimum).
//  2. x closes a beta block B of length >= 2: symmetric, placed among the
//     alpha blocks so their first letters stay decreasing.
//  3. any other valley x != 1: phi_x.
//  4. otherwise the identity.
Permutation bfs_psi(const Permutation& p, Letter x);
Permutation bfs_psi_set(const Permutation& p, const std::vector<Letter>& s);

// Closure of {p} under every psi_x, sorted.
std::vector<Permutation> bfs_orbit(const Permutation& p);

// Shape 1 beta_1 ... beta_l where every beta block with its last letter
// removed is an Andre word.
bool is_orbit_representative(const Permutation& p);

// The unique representative in p's orbit. Zero or several candidates raise
// InvariantError.
Permutation orbit_representative(const Permutation& p);

// For d of shape 1 beta_1 ... beta_l on [n], the permutation of [n-1] whose
// cycles are (w_1 - 1, ..., w_k - 1) for each block w = beta_i.
Permutation c_map(const BiBasicDecomposition& d);

}  // namespace webperm
