#pragma once

#include <vector>

#include "webperm/poly.hpp"

namespace webperm {

inline constexpr int kMaxSeriesOrder = 12;

// Power series in z truncated after z^order, coefficients in Q[t, alpha].
// Products drop every term past the order of the left operand.
class RationalSeries {
 public:
  explicit RationalSeries(int order);

  int order() const { return static_cast<int>(coeffs_.size()) - 1; }
  const RationalPoly& operator[](int k) const { return coeffs_[static_cast<std::size_t>(k)]; }
  RationalPoly& operator[](int k) { return coeffs_[static_cast<std::size_t>(k)]; }

  RationalSeries& operator+=(const RationalSeries& o);
  RationalSeries operator*(const RationalSeries& o) const;
  RationalSeries scaled(const RationalPoly& c) const;

  bool operator==(const RationalSeries&) const = default;

 private:
  std::vector<RationalPoly> coeffs_;
};

// exp(alpha (t-1) z) / (1 - sin z)^alpha through z^order, built as
// exp(alpha S) with S = (t-1) z + sum_{k>=1} sin(z)^k / k.
RationalSeries web_series(int order);

// n! [z^n] of web_series for n = 0..order. Every entry must come out with
// integer coefficients; anything else is an InvariantError.
std::vector<MultiPoly> series_oracle(int order);

}  // namespace webperm
