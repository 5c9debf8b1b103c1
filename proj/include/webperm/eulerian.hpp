#pragma once

#include <vector>

#include "webperm/bigint.hpp"
#include "webperm/permutation.hpp"
#include "webperm/poly.hpp"

namespace webperm {

// A_n(x) over S_n. The descent and drop versions are computed separately and
// must agree.
MultiPoly eulerian(int n, int cap = kDefaultPermutationCap);

// A_n(x,t|alpha) = sum x^des t^(lmidd + rmida) alpha^(lmi + rmi - 2).
MultiPoly at_eulerian(int n, int cap = kDefaultPermutationCap);

// Coefficients g_0..g_m, m = floor((n-1)/2), with
//   p = sum_i g_i x^i (1 + x)^(n-1-2i),
// found by peeling off the lowest x-power each step. A nonzero residual
// means p is outside the span of the basis (PreconditionError).
std::vector<MultiPoly> gamma_expand(const MultiPoly& p, int n);

// Inverse of gamma_expand.
MultiPoly gamma_reconstruct(const std::vector<MultiPoly>& gamma, int n);

// gamma_{n,i} straight from its definition: sum over permutations with no
// double descents and i descents of alpha^(lmi + rmi - 2) t^rmida.
std::vector<MultiPoly> gamma_direct(int n, int cap = kDefaultPermutationCap);

// Normalized gamma-coefficients d_{n,i} for i = 0..floor((n-1)/2).
// d_web sums t^fix alpha^cyc over Web_{n-1} by drop; d_delta over the
// cycle-up-down permutations of [n-1] by drop_hat; d_andre counts Andre
// permutations of [n] by descents.
std::vector<MultiPoly> d_web_row(int n, int cap = kDefaultPermutationCap);
std::vector<MultiPoly> d_delta_row(int n, int cap = kDefaultPermutationCap);
std::vector<BigInt> d_andre_row(int n, int cap = kDefaultPermutationCap);
MultiPoly d_web(int n, int i, int cap = kDefaultPermutationCap);
MultiPoly d_delta(int n, int i, int cap = kDefaultPermutationCap);
BigInt d_andre(int n, int i, int cap = kDefaultPermutationCap);

// sum t^fix alpha^cyc over Web_n, resp. cycle-up-down permutations of [n].
MultiPoly web_fix_cyc(int n, int cap = kDefaultPermutationCap);
MultiPoly delta_fix_cyc(int n, int cap = kDefaultPermutationCap);

// Counts of permutations of [n] by number of peaks, resp. mix value.
std::vector<BigInt> pk_distribution(int n, int cap = kDefaultPermutationCap);
std::vector<BigInt> mix_distribution(int n, int cap = kDefaultPermutationCap);

// The two distributions agree, and both satisfy
//   #{pk = i} = 2^(n-1-2i) * gamma_i(A_n).
bool pk_mix_check(int n, int cap = kDefaultPermutationCap);

}  // namespace webperm
