#pragma once

#include <vector>

#include "webperm/bigint.hpp"

namespace webperm {

// Seidel triangle s(i, j) for 1 <= i <= rows, built row by row:
//   s(1,1) = s(2,1) = 1,
//   s(2i+1, j) = s(2i+1, j-1) + s(2i, j)   for j = 1..i+1,
//   s(2i,   j) = s(2i, j+1)   + s(2i-1, j) for j = 1..i,
// and zero outside 1 <= j <= ceil(i/2).
class SeidelTriangle {
 public:
  explicit SeidelTriangle(int rows);

  int rows() const { return static_cast<int>(rows_.size()); }
  static int row_length(int i) { return (i + 1) / 2; }

  // Zero outside the stored triangle's support; throws if i > rows().
  BigInt at(int i, int j) const;

 private:
  std::vector<std::vector<BigInt>> rows_;
};

BigInt seidel(int i, int j);

// g_{2n-1} = s(2n-1, n)
BigInt genocchi_first(int n);
// g_{2n} = s(2n, 1)
BigInt genocchi_median(int n);

// Boustrophedon: E(0,0) = 1, E(n,0) = 0 for n >= 1,
// E(n,k) = E(n,k-1) + E(n-1, n-k).
// Under this indexing E(n,k) counts web permutations of [n] starting with n+1-k.
BigInt entringer(int n, int k);
std::vector<std::vector<BigInt>> entringer_rows(int n_max);

// Number of up-down permutations of [n]; equals E(n, n).
BigInt euler_number(int n);

}  // namespace webperm
