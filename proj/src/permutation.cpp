#include "webperm/permutation.hpp"

#include <algorithm>
#include <cctype>
#include <limits>
#include <numeric>
#include <sstream>

#include "webperm/errors.hpp"

namespace webperm {

namespace {

constexpr Letter kInfinity = std::numeric_limits<Letter>::max();

Letter left_of(const Word& w, std::size_t i) { return i == 0 ? kInfinity : w[i - 1]; }
Letter right_of(const Word& w, std::size_t i) {
  return i + 1 == w.size() ? kInfinity : w[i + 1];
}

bool is_andre_range(Word::const_iterator first, Word::const_iterator last) {
  if (last - first <= 1) return true;
  const auto min_it = std::min_element(first, last);
  const auto max_it = std::max_element(first, last);
  if (max_it < min_it) return false;
  return is_andre_range(first, min_it) && is_andre_range(min_it + 1, last);
}

int mix_range(Word::const_iterator first, Word::const_iterator last) {
  const auto n = last - first;
  if (n <= 1) return 0;
  const auto [min_it, max_it] = std::minmax_element(first, last);
  const auto split = std::min(min_it, max_it);
  const int inner = (split != first && split != last - 1) ? 1 : 0;
  return mix_range(first, split) + mix_range(split + 1, last) + inner;
}

}  // namespace

Permutation::Permutation(Word oneline) : oneline_(std::move(oneline)) {
  const auto n = oneline_.size();
  std::vector<bool> seen(n + 1, false);
  for (Letter v : oneline_) {
    require(v >= 1 && static_cast<std::size_t>(v) <= n && !seen[static_cast<std::size_t>(v)],
            "not a permutation: " + word_to_string(oneline_));
    seen[static_cast<std::size_t>(v)] = true;
  }
}

Permutation Permutation::identity(int n) {
  Word w(static_cast<std::size_t>(n));
  std::iota(w.begin(), w.end(), 1);
  return Permutation(std::move(w));
}

Permutation Permutation::from_cycles(int n, const std::vector<Cycle>& cycles) {
  Word w(static_cast<std::size_t>(n));
  std::iota(w.begin(), w.end(), 1);
  std::vector<bool> used(static_cast<std::size_t>(n) + 1, false);
  for (const auto& c : cycles) {
    for (std::size_t k = 0; k < c.size(); ++k) {
      const Letter a = c[k];
      require(a >= 1 && a <= n && !used[static_cast<std::size_t>(a)],
              "cycles are not disjoint within [n]");
      used[static_cast<std::size_t>(a)] = true;
      w[static_cast<std::size_t>(a - 1)] = c[(k + 1) % c.size()];
    }
  }
  return Permutation(std::move(w));
}

Permutation Permutation::parse(std::string_view text) {
  Word w;
  const bool separated = text.find_first_of(" ,") != std::string_view::npos;
  if (separated) {
    std::string s(text);
    std::replace(s.begin(), s.end(), ',', ' ');
    std::istringstream in(s);
    Letter v = 0;
    while (in >> v) w.push_back(v);
    require(in.eof(), "cannot parse permutation: " + std::string(text));
  } else {
    for (char ch : text) {
      require(std::isdigit(static_cast<unsigned char>(ch)) && ch != '0',
              "cannot parse permutation: " + std::string(text));
      w.push_back(ch - '0');
    }
  }
  return Permutation(std::move(w));
}

int Permutation::position_of(Letter v) const {
  const auto it = std::find(oneline_.begin(), oneline_.end(), v);
  require(it != oneline_.end(), "letter not in permutation");
  return static_cast<int>(it - oneline_.begin()) + 1;
}

Permutation Permutation::inverse() const {
  Word inv(oneline_.size());
  for (std::size_t i = 0; i < oneline_.size(); ++i) {
    inv[static_cast<std::size_t>(oneline_[i] - 1)] = static_cast<Letter>(i + 1);
  }
  return Permutation(std::move(inv));
}

Permutation Permutation::compose(const Permutation& rhs) const {
  require(size() == rhs.size(), "compose: size mismatch");
  Word w(oneline_.size());
  for (int i = 1; i <= size(); ++i) w[static_cast<std::size_t>(i - 1)] = at(rhs.at(i));
  return Permutation(std::move(w));
}

Permutation Permutation::swap_positions(int i, int l) const {
  require(i >= 1 && l >= 1 && i <= size() && l <= size(), "swap_positions: out of range");
  Word w = oneline_;
  std::swap(w[static_cast<std::size_t>(i - 1)], w[static_cast<std::size_t>(l - 1)]);
  return Permutation(std::move(w));
}

CycleDecomposition Permutation::cycles() const {
  CycleDecomposition out;
  std::vector<bool> seen(oneline_.size() + 1, false);
  // Scanning starts in increasing order, so each cycle begins at its minimum
  // and cycles come out sorted by minimum.
  for (Letter start = 1; start <= size(); ++start) {
    if (seen[static_cast<std::size_t>(start)]) continue;
    Cycle c;
    for (Letter a = start; !seen[static_cast<std::size_t>(a)]; a = at(a)) {
      seen[static_cast<std::size_t>(a)] = true;
      c.push_back(a);
    }
    out.push_back(std::move(c));
  }
  return out;
}

std::string Permutation::to_string() const { return word_to_string(oneline_); }

std::string word_to_string(const Word& w) {
  const bool compact = std::all_of(w.begin(), w.end(), [](Letter v) { return v >= 1 && v <= 9; });
  std::string out;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (!compact && i > 0) out += ' ';
    out += std::to_string(w[i]);
  }
  return out;
}

int descents(const Word& w) {
  int d = 0;
  for (std::size_t i = 0; i + 1 < w.size(); ++i) d += w[i] > w[i + 1] ? 1 : 0;
  return d;
}

Word valleys(const Word& w) {
  Word out;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (left_of(w, i) > w[i] && w[i] < right_of(w, i)) out.push_back(w[i]);
  }
  return out;
}

Word double_ascents(const Word& w) {
  Word out;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (left_of(w, i) < w[i] && w[i] < right_of(w, i)) out.push_back(w[i]);
  }
  return out;
}

Word double_descents(const Word& w) {
  Word out;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (left_of(w, i) > w[i] && w[i] > right_of(w, i)) out.push_back(w[i]);
  }
  return out;
}

StatRecord statistics(const Permutation& p) {
  const Word& w = p.word();
  const std::size_t n = w.size();
  StatRecord s;
  s.des = descents(w);
  for (std::size_t i = 0; i < n; ++i) {
    const Letter v = w[i];
    const auto pos = static_cast<Letter>(i + 1);
    if (pos > v) ++s.drop;
    if (pos == v) ++s.fix;
    const Letter l = left_of(w, i);
    const Letter r = right_of(w, i);
    if (l < v && v > r) ++s.pk;
    if (l > v && v < r) ++s.valley_count;
  }
  s.cyc = static_cast<int>(p.cycles().size());

  Letter running = kInfinity;
  for (std::size_t i = 0; i < n; ++i) {
    if (w[i] < running) {
      running = w[i];
      ++s.lmi;
      if (left_of(w, i) > w[i] && w[i] > right_of(w, i)) ++s.lmidd;
    }
  }
  running = kInfinity;
  for (std::size_t i = n; i-- > 0;) {
    if (w[i] < running) {
      running = w[i];
      ++s.rmi;
      if (left_of(w, i) < w[i] && w[i] < right_of(w, i)) ++s.rmida;
    }
  }
  return s;
}

bool is_up_down(const Word& w) {
  for (std::size_t i = 0; i + 1 < w.size(); ++i) {
    const bool ascent = w[i] < w[i + 1];
    if (ascent != (i % 2 == 0)) return false;
  }
  return true;
}

bool is_andre(const Word& w) { return is_andre_range(w.begin(), w.end()); }

bool is_andre_xfact(const Word& w) {
  for (std::size_t k = 0; k < w.size(); ++k) {
    const Letter x = w[k];
    Letter left_max = x;
    for (std::size_t i = k; i-- > 0 && w[i] > x;) left_max = std::max(left_max, w[i]);
    Letter right_max = x;
    for (std::size_t i = k + 1; i < w.size() && w[i] > x; ++i) right_max = std::max(right_max, w[i]);
    if (left_max > right_max) return false;
  }
  return true;
}

bool is_andre_cycle(const Cycle& c) {
  require(!c.empty(), "is_andre_cycle: empty cycle");
  const auto min_it = std::min_element(c.begin(), c.end());
  Word rest(min_it + 1, c.end());
  rest.insert(rest.end(), c.begin(), min_it);
  return is_andre(rest);
}

bool is_web(const Permutation& p) {
  const auto cs = p.cycles();
  return std::all_of(cs.begin(), cs.end(), [](const Cycle& c) { return is_andre_cycle(c); });
}

bool is_cycle_up_down(const Permutation& p) {
  const auto cs = p.cycles();
  return std::all_of(cs.begin(), cs.end(), [](const Cycle& c) { return is_up_down(c); });
}

int mix(const Word& w) { return mix_range(w.begin(), w.end()); }

int drop_hat(const Permutation& p) {
  int total = 0;
  for (const auto& c : p.cycles()) total += mix(c) + (c.size() > 1 ? 1 : 0);
  return total;
}

void for_each_permutation(int n, const std::function<void(const Permutation&)>& visit, int cap) {
  require(n >= 0, "enumerate: negative size");
  check_cap(n, cap, "enumerate");
  Word w(static_cast<std::size_t>(n));
  std::iota(w.begin(), w.end(), 1);
  do {
    visit(Permutation(w));
  } while (std::next_permutation(w.begin(), w.end()));
}

std::vector<Permutation> enumerate(int n, int cap) {
  std::vector<Permutation> out;
  for_each_permutation(n, [&](const Permutation& p) { out.push_back(p); }, cap);
  return out;
}

}  // namespace webperm
