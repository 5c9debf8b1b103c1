#include "webperm/series.hpp"

#include "webperm/errors.hpp"

namespace webperm {

RationalSeries::RationalSeries(int order) : coeffs_(static_cast<std::size_t>(order) + 1) {
  require(order >= 0, "series order must be nonnegative");
}

RationalSeries& RationalSeries::operator+=(const RationalSeries& o) {
  const int top = std::min(order(), o.order());
  for (int k = 0; k <= top; ++k) (*this)[k] += o[k];
  return *this;
}

RationalSeries RationalSeries::operator*(const RationalSeries& o) const {
  RationalSeries out(order());
  for (int a = 0; a <= order(); ++a) {
    if ((*this)[a].is_zero()) continue;
    for (int b = 0; a + b <= order() && b <= o.order(); ++b) {
      if (!o[b].is_zero()) out[a + b] += (*this)[a] * o[b];
    }
  }
  return out;
}

RationalSeries RationalSeries::scaled(const RationalPoly& c) const {
  RationalSeries out(order());
  for (int k = 0; k <= order(); ++k) out[k] = (*this)[k] * c;
  return out;
}

namespace {

RationalSeries sine(int order) {
  RationalSeries s(order);
  BigInt factorial = 1;
  for (int k = 1; k <= order; ++k) {
    factorial *= k;
    if (k % 2 == 1) s[k] = RationalPoly(BigRational(k % 4 == 1 ? 1 : -1, factorial));
  }
  return s;
}

}  // namespace

RationalSeries web_series(int order) {
  require(order >= 0 && order <= kMaxSeriesOrder,
          "series order must lie in 0.." + std::to_string(kMaxSeriesOrder));
  RationalSeries exponent(order);
  if (order >= 1) exponent[1] = RationalPoly::t() - RationalPoly(1);

  // -log(1 - sin z) = sum_k sin^k / k; sin^k starts at z^k.
  const RationalSeries sin_z = sine(order);
  RationalSeries power = sin_z;
  for (int k = 1; k <= order; ++k) {
    exponent += power.scaled(RationalPoly(BigRational(1, k)));
    power = power * sin_z;
  }

  // exp(alpha S) = sum_k alpha^k S^k / k!; S^k starts at z^k.
  RationalSeries out(order);
  out[0] = RationalPoly(1);
  RationalSeries s_power(order);
  s_power[0] = RationalPoly(1);
  BigInt factorial = 1;
  for (int k = 1; k <= order; ++k) {
    factorial *= k;
    s_power = s_power * exponent;
    out += s_power.scaled(RationalPoly::monomial(BigRational(1, factorial), {0, k, 0}));
  }
  return out;
}

std::vector<MultiPoly> series_oracle(int order) {
  const RationalSeries series = web_series(order);
  std::vector<MultiPoly> out;
  BigInt factorial = 1;
  for (int n = 0; n <= order; ++n) {
    if (n > 0) factorial *= n;
    auto scaled = to_integer(series[n] * RationalPoly(BigRational(factorial)));
    ensure(scaled.has_value(), "n! [z^n] has a non-integer coefficient at n = " + std::to_string(n));
    out.push_back(std::move(*scaled));
  }
  return out;
}

}  // namespace webperm
