#include "webperm/eulerian.hpp"

#include "webperm/errors.hpp"

namespace webperm {

namespace {

std::size_t gamma_len(int n) { return static_cast<std::size_t>((n - 1) / 2 + 1); }

void require_positive(int n, const char* what) {
  require(n >= 1, std::string(what) + ": n must be positive");
}

MultiPoly fix_cyc_term(const StatRecord& s) {
  return MultiPoly::monomial(1, {s.fix, s.cyc, 0});
}

// Adds term to row[i], growing the row if a caller's bound was off.
void bump(std::vector<MultiPoly>& row, int i, const MultiPoly& term) {
  ensure(i >= 0 && static_cast<std::size_t>(i) < row.size(),
         "statistic value " + std::to_string(i) + " outside the gamma range");
  row[static_cast<std::size_t>(i)] += term;
}

}  // namespace

MultiPoly eulerian(int n, int cap) {
  require_positive(n, "eulerian");
  MultiPoly by_des;
  MultiPoly by_drop;
  for_each_permutation(n, [&](const Permutation& p) {
    by_des.add({0, 0, descents(p.word())}, 1);
    int drops = 0;
    for (int i = 1; i <= n; ++i) drops += (i > p.at(i)) ? 1 : 0;
    by_drop.add({0, 0, drops}, 1);
  }, cap);
  ensure(by_des == by_drop, "des and drop disagree on S_" + std::to_string(n));
  return by_des;
}

MultiPoly at_eulerian(int n, int cap) {
  require_positive(n, "at_eulerian");
  MultiPoly out;
  for_each_permutation(n, [&](const Permutation& p) {
    const StatRecord s = statistics(p);
    out.add({s.lmidd + s.rmida, s.lrmi(), s.des}, 1);
  }, cap);
  return out;
}

std::vector<MultiPoly> gamma_expand(const MultiPoly& p, int n) {
  require_positive(n, "gamma_expand");
  require(p.degree_x() <= n - 1, "gamma_expand: degree in x exceeds n-1");
  const MultiPoly one_plus_x = MultiPoly(1) + MultiPoly::x();
  std::vector<MultiPoly> gamma;
  MultiPoly residual = p;
  for (int i = 0; 2 * i <= n - 1; ++i) {
    MultiPoly g = residual.coeff_x(i);
    residual -= g * MultiPoly::x(i) * one_plus_x.pow(n - 1 - 2 * i);
    gamma.push_back(std::move(g));
  }
  require(residual.is_zero(), "gamma_expand: polynomial is not in the span of x^i(1+x)^(n-1-2i)");
  return gamma;
}

MultiPoly gamma_reconstruct(const std::vector<MultiPoly>& gamma, int n) {
  require_positive(n, "gamma_reconstruct");
  require(gamma.size() <= gamma_len(n), "gamma_reconstruct: too many coefficients");
  const MultiPoly one_plus_x = MultiPoly(1) + MultiPoly::x();
  MultiPoly out;
  for (std::size_t i = 0; i < gamma.size(); ++i) {
    const int k = static_cast<int>(i);
    out += gamma[i] * MultiPoly::x(k) * one_plus_x.pow(n - 1 - 2 * k);
  }
  return out;
}

std::vector<MultiPoly> gamma_direct(int n, int cap) {
  require_positive(n, "gamma_direct");
  std::vector<MultiPoly> row(gamma_len(n));
  for_each_permutation(n, [&](const Permutation& p) {
    if (!double_descents(p.word()).empty()) return;
    const StatRecord s = statistics(p);
    bump(row, s.des, MultiPoly::monomial(1, {s.rmida, s.lrmi(), 0}));
  }, cap);
  return row;
}

std::vector<MultiPoly> d_web_row(int n, int cap) {
  require_positive(n, "d_web");
  std::vector<MultiPoly> row(gamma_len(n));
  for_each_permutation(n - 1, [&](const Permutation& p) {
    if (!is_web(p)) return;
    const StatRecord s = statistics(p);
    bump(row, s.drop, fix_cyc_term(s));
  }, cap);
  return row;
}

std::vector<MultiPoly> d_delta_row(int n, int cap) {
  require_positive(n, "d_delta");
  std::vector<MultiPoly> row(gamma_len(n));
  for_each_permutation(n - 1, [&](const Permutation& p) {
    if (!is_cycle_up_down(p)) return;
    bump(row, drop_hat(p), fix_cyc_term(statistics(p)));
  }, cap);
  return row;
}

std::vector<BigInt> d_andre_row(int n, int cap) {
  require_positive(n, "d_andre");
  std::vector<BigInt> row(gamma_len(n));
  for_each_permutation(n, [&](const Permutation& p) {
    if (!is_andre(p.word())) return;
    const auto i = static_cast<std::size_t>(descents(p.word()));
    ensure(i < row.size(), "Andre permutation with too many descents");
    ++row[i];
  }, cap);
  return row;
}

MultiPoly d_web(int n, int i, int cap) {
  const auto row = d_web_row(n, cap);
  return (i >= 0 && static_cast<std::size_t>(i) < row.size()) ? row[static_cast<std::size_t>(i)]
                                                              : MultiPoly();
}

MultiPoly d_delta(int n, int i, int cap) {
  const auto row = d_delta_row(n, cap);
  return (i >= 0 && static_cast<std::size_t>(i) < row.size()) ? row[static_cast<std::size_t>(i)]
                                                              : MultiPoly();
}

BigInt d_andre(int n, int i, int cap) {
  const auto row = d_andre_row(n, cap);
  return (i >= 0 && static_cast<std::size_t>(i) < row.size()) ? row[static_cast<std::size_t>(i)]
                                                              : BigInt(0);
}

MultiPoly web_fix_cyc(int n, int cap) {
  MultiPoly out;
  for_each_permutation(n, [&](const Permutation& p) {
    if (is_web(p)) out += fix_cyc_term(statistics(p));
  }, cap);
  return out;
}

MultiPoly delta_fix_cyc(int n, int cap) {
  MultiPoly out;
  for_each_permutation(n, [&](const Permutation& p) {
    if (is_cycle_up_down(p)) out += fix_cyc_term(statistics(p));
  }, cap);
  return out;
}

std::vector<BigInt> pk_distribution(int n, int cap) {
  require_positive(n, "pk_distribution");
  std::vector<BigInt> row(gamma_len(n));
  for_each_permutation(n, [&](const Permutation& p) {
    const auto i = static_cast<std::size_t>(statistics(p).pk);
    ensure(i < row.size(), "too many peaks");
    ++row[i];
  }, cap);
  return row;
}

std::vector<BigInt> mix_distribution(int n, int cap) {
  require_positive(n, "mix_distribution");
  std::vector<BigInt> row(gamma_len(n));
  for_each_permutation(n, [&](const Permutation& p) {
    const auto i = static_cast<std::size_t>(mix(p.word()));
    ensure(i < row.size(), "mix value above floor((n-1)/2)");
    ++row[i];
  }, cap);
  return row;
}

bool pk_mix_check(int n, int cap) {
  const auto pk = pk_distribution(n, cap);
  const auto mx = mix_distribution(n, cap);
  if (pk != mx) return false;
  const auto gamma = gamma_expand(eulerian(n, cap), n);
  for (std::size_t i = 0; i < pk.size(); ++i) {
    const BigInt scale = BigInt(1) << (n - 1 - 2 * static_cast<int>(i));
    if (pk[i] != scale * gamma[i].coeff({})) return false;
  }
  return true;
}

}  // namespace webperm
