#include "webperm/sequences.hpp"

#include <string>

#include "webperm/errors.hpp"

namespace webperm {

SeidelTriangle::SeidelTriangle(int rows) {
  require(rows >= 0, "SeidelTriangle: negative row count");
  rows_.reserve(static_cast<std::size_t>(rows));
  for (int i = 1; i <= rows; ++i) {
    const int len = row_length(i);
    std::vector<BigInt> row(static_cast<std::size_t>(len), 0);
    if (i <= 2) {
      row[0] = 1;
    } else if (i % 2 == 1) {
      const auto& prev = rows_.back();
      BigInt acc = 0;
      for (int j = 1; j <= len; ++j) {
        if (j <= static_cast<int>(prev.size())) acc += prev[static_cast<std::size_t>(j - 1)];
        row[static_cast<std::size_t>(j - 1)] = acc;
      }
    } else {
      const auto& prev = rows_.back();
      BigInt acc = 0;
      for (int j = len; j >= 1; --j) {
        acc += prev[static_cast<std::size_t>(j - 1)];
        row[static_cast<std::size_t>(j - 1)] = acc;
      }
    }
    rows_.push_back(std::move(row));
  }
}

BigInt SeidelTriangle::at(int i, int j) const {
  require(i >= 1 && i <= rows(), "SeidelTriangle: row " + std::to_string(i) + " not built");
  if (j < 1 || j > row_length(i)) return 0;
  return rows_[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(j - 1)];
}

BigInt seidel(int i, int j) {
  require(i >= 1, "seidel: row index must be positive");
  return SeidelTriangle(i).at(i, j);
}

BigInt genocchi_first(int n) {
  require(n >= 1, "genocchi_first: n must be positive");
  return seidel(2 * n - 1, n);
}

BigInt genocchi_median(int n) {
  require(n >= 1, "genocchi_median: n must be positive");
  return seidel(2 * n, 1);
}

std::vector<std::vector<BigInt>> entringer_rows(int n_max) {
  require(n_max >= 0, "entringer: negative size");
  std::vector<std::vector<BigInt>> e;
  e.push_back({1});
  for (int n = 1; n <= n_max; ++n) {
    std::vector<BigInt> row(static_cast<std::size_t>(n) + 1, 0);
    const auto& prev = e.back();
    for (int k = 1; k <= n; ++k) {
      row[static_cast<std::size_t>(k)] =
          row[static_cast<std::size_t>(k - 1)] + prev[static_cast<std::size_t>(n - k)];
    }
    e.push_back(std::move(row));
  }
  return e;
}

BigInt entringer(int n, int k) {
  require(n >= 0 && k >= 0 && k <= n, "entringer: need 0 <= k <= n");
  return entringer_rows(n)[static_cast<std::size_t>(n)][static_cast<std::size_t>(k)];
}

BigInt euler_number(int n) {
  require(n >= 0, "euler_number: negative size");
  return entringer(n, n);
}

}  // namespace webperm
