#include "webperm/chord.hpp"

#include <algorithm>
#include <optional>
#include <unordered_map>

#include "webperm/errors.hpp"

namespace webperm {

namespace {

// Partner table packed into a string: state[v] = partner of v. Used as the
// memo key during expansion.
using State = std::string;

State to_state(const ChordDiagram& d) {
  State s(static_cast<std::size_t>(d.vertex_count()), '\0');
  for (const auto& c : d.chords()) {
    s[static_cast<std::size_t>(c.a)] = static_cast<char>(c.b);
    s[static_cast<std::size_t>(c.b)] = static_cast<char>(c.a);
  }
  return s;
}

ChordDiagram from_state(const State& s) {
  std::vector<int> partner(s.begin(), s.end());
  return ChordDiagram::from_partners(partner);
}

int crossing_count(const State& s) {
  int count = 0;
  const int v = static_cast<int>(s.size());
  for (int a1 = 0; a1 < v; ++a1) {
    const int b1 = s[static_cast<std::size_t>(a1)];
    if (b1 < a1) continue;
    for (int a2 = a1 + 1; a2 < b1; ++a2) {
      const int b2 = s[static_cast<std::size_t>(a2)];
      if (b2 > b1) ++count;
    }
  }
  return count;
}

// Endpoints a < b < c < d of a crossing pair {a,c},{b,d}.
struct Quad {
  int a, b, c, d;
};

std::optional<Quad> pick_crossing(const State& s, CrossingStrategy strategy) {
  const int v = static_cast<int>(s.size());
  std::optional<Quad> found;
  // Chords are visited in order of their smaller endpoint, so (a1, a2) runs
  // through chord pairs lexicographically.
  for (int a1 = 0; a1 < v; ++a1) {
    const int b1 = s[static_cast<std::size_t>(a1)];
    if (b1 < a1) continue;
    for (int a2 = a1 + 1; a2 < v; ++a2) {
      const int b2 = s[static_cast<std::size_t>(a2)];
      if (b2 < a2) continue;
      if (a2 < b1 && b1 < b2) {
        found = Quad{a1, a2, b1, b2};
        if (strategy == CrossingStrategy::First) return found;
      }
    }
  }
  return found;
}

std::pair<State, State> expand_state(const State& s, Quad q) {
  auto link = [](State& t, int x, int y) {
    t[static_cast<std::size_t>(x)] = static_cast<char>(y);
    t[static_cast<std::size_t>(y)] = static_cast<char>(x);
  };
  State first = s;
  link(first, q.a, q.b);
  link(first, q.c, q.d);
  State second = s;
  link(second, q.b, q.c);
  link(second, q.a, q.d);
  return {first, second};
}

// Expansion tree walker with a memo keyed by diagram. `Value` must support
// += and be produced for leaves by `leaf`.
template <class Value, class Leaf>
class Expander {
 public:
  Expander(CrossingStrategy strategy, Leaf leaf) : strategy_(strategy), leaf_(std::move(leaf)) {}

  const Value& run(const State& s, int depth_left) {
    if (auto it = memo_.find(s); it != memo_.end()) return it->second;
    Value value;
    const auto q = pick_crossing(s, strategy_);
    if (!q) {
      value = leaf_(s);
    } else {
      ensure(depth_left > 0, "chord expansion exceeded its depth bound");
      const int before = crossing_count(s);
      const auto [first, second] = expand_state(s, *q);
      // Each expansion removes the chosen crossing and never adds crossings
      // with the other chords, so the total crossing count strictly drops.
      ensure(crossing_count(first) < before && crossing_count(second) < before,
             "chord expansion did not decrease the crossing count");
      value = run(first, depth_left - 1);
      add(value, run(second, depth_left - 1));
    }
    return memo_.emplace(s, std::move(value)).first->second;
  }

 private:
  static void add(std::map<State, BigInt>& acc, const std::map<State, BigInt>& other) {
    for (const auto& [k, v] : other) acc[k] += v;
  }
  static void add(std::vector<BigInt>& acc, const std::vector<BigInt>& other) {
    for (std::size_t i = 0; i < acc.size(); ++i) acc[i] += other[i];
  }

  CrossingStrategy strategy_;
  Leaf leaf_;
  std::unordered_map<State, Value> memo_;
};

int depth_bound(int m) { return m * (m - 1) / 2; }

}  // namespace

ChordDiagram::ChordDiagram(std::vector<Chord> chords) : chords_(std::move(chords)) {
  std::vector<bool> seen(chords_.size() * 2, false);
  const auto v = static_cast<int>(seen.size());
  for (auto& c : chords_) {
    if (c.a > c.b) std::swap(c.a, c.b);
    require(c.a >= 0 && c.b < v && c.a != c.b && !seen[static_cast<std::size_t>(c.a)] &&
                !seen[static_cast<std::size_t>(c.b)],
            "chord diagram must be a perfect matching of 0..2m-1");
    seen[static_cast<std::size_t>(c.a)] = seen[static_cast<std::size_t>(c.b)] = true;
  }
  std::sort(chords_.begin(), chords_.end());
}

ChordDiagram ChordDiagram::from_partners(const std::vector<int>& partner) {
  std::vector<Chord> chords;
  for (int v = 0; v < static_cast<int>(partner.size()); ++v) {
    const int w = partner[static_cast<std::size_t>(v)];
    require(w >= 0 && w < static_cast<int>(partner.size()) &&
                partner[static_cast<std::size_t>(w)] == v,
            "partner table is not an involution");
    if (v < w) chords.push_back({v, w});
  }
  return ChordDiagram(std::move(chords));
}

std::vector<int> ChordDiagram::partners() const {
  std::vector<int> p(static_cast<std::size_t>(vertex_count()), -1);
  for (const auto& c : chords_) {
    p[static_cast<std::size_t>(c.a)] = c.b;
    p[static_cast<std::size_t>(c.b)] = c.a;
  }
  return p;
}

int ChordDiagram::crossing_count() const { return webperm::crossing_count(to_state(*this)); }

std::string ChordDiagram::to_string() const {
  std::string out = "{";
  for (std::size_t i = 0; i < chords_.size(); ++i) {
    if (i > 0) out += ",";
    out += "{" + std::to_string(chords_[i].a) + "," + std::to_string(chords_[i].b) + "}";
  }
  return out + "}";
}

bool crosses(Chord first, Chord second) {
  require(first.a != second.a && first.a != second.b && first.b != second.a &&
              first.b != second.b && first.a != first.b && second.a != second.b,
          "crosses: chords share an endpoint");
  const int lo = std::min(first.a, first.b);
  const int hi = std::max(first.a, first.b);
  const bool in_a = lo < second.a && second.a < hi;
  const bool in_b = lo < second.b && second.b < hi;
  return in_a != in_b;
}

std::pair<ChordDiagram, ChordDiagram> expand(const ChordDiagram& e, std::pair<Chord, Chord> s) {
  auto [c1, c2] = s;
  if (c1.a > c1.b) std::swap(c1.a, c1.b);
  if (c2.a > c2.b) std::swap(c2.a, c2.b);
  const auto& chords = e.chords();
  require(std::find(chords.begin(), chords.end(), c1) != chords.end() &&
              std::find(chords.begin(), chords.end(), c2) != chords.end() && c1 != c2,
          "expand: pair is not in the diagram");
  require(crosses(c1, c2), "expand: chords do not cross");
  if (c2.a < c1.a) std::swap(c1, c2);
  const auto [first, second] = expand_state(to_state(e), Quad{c1.a, c2.a, c1.b, c2.b});
  return {from_state(first), from_state(second)};
}

NCDMultiset ncd(const ChordDiagram& e, CrossingStrategy strategy, int cap) {
  check_cap(e.chord_count(), cap, "ncd");
  auto leaf = [](const State& s) { return std::map<State, BigInt>{{s, 1}}; };
  Expander<std::map<State, BigInt>, decltype(leaf)> expander(strategy, leaf);
  NCDMultiset out;
  for (const auto& [s, count] : expander.run(to_state(e), depth_bound(e.chord_count()))) {
    out.emplace(from_state(s), count);
  }
  return out;
}

std::vector<BigInt> multiplicities(const ChordDiagram& e, const std::vector<ChordDiagram>& targets,
                                   CrossingStrategy strategy, int cap) {
  check_cap(e.chord_count(), cap, "ncd");
  std::vector<State> keys;
  for (const auto& t : targets) {
    require(t.chord_count() == e.chord_count(), "multiplicities: targets need the same support");
    keys.push_back(to_state(t));
  }
  auto leaf = [&keys](const State& s) {
    std::vector<BigInt> v(keys.size(), 0);
    for (std::size_t i = 0; i < keys.size(); ++i) {
      if (keys[i] == s) v[i] = 1;
    }
    return v;
  };
  Expander<std::vector<BigInt>, decltype(leaf)> expander(strategy, leaf);
  return expander.run(to_state(e), depth_bound(e.chord_count()));
}

ChordDiagram a_diagram(int n, int k) {
  require(n >= 0 && k >= 0 && k <= n, "a_diagram: need 0 <= k <= n");
  std::vector<Chord> chords{{0, k + 1}};
  std::vector<int> rest;
  for (int v = 1; v <= 2 * n + 1; ++v) {
    if (v != k + 1) rest.push_back(v);
  }
  for (int i = 0; i < n; ++i) {
    chords.push_back({rest[static_cast<std::size_t>(i)], rest[static_cast<std::size_t>(i + n)]});
  }
  return ChordDiagram(std::move(chords));
}

bool is_necklace(const ChordDiagram& f) {
  if (!f.nonintersecting()) return false;
  const int v = f.vertex_count();
  return std::all_of(f.chords().begin(), f.chords().end(), [v](const Chord& c) {
    return c.b - c.a == 1 || (c.a == 0 && c.b == v - 1);
  });
}

ChordDiagram necklace(int m, int parity) {
  require(m >= 1, "necklace: need at least one chord");
  const int v = 2 * m;
  const int s = ((parity % 2) + 2) % 2;
  std::vector<Chord> chords;
  for (int i = 0; i < m; ++i) chords.push_back({(s + 2 * i) % v, (s + 2 * i + 1) % v});
  return ChordDiagram(std::move(chords));
}

std::pair<BigInt, BigInt> b_plus_minus(int n, int k, int cap) {
  require(n >= 0 && k >= 0 && k <= n, "b: need 0 <= k <= n");
  check_cap(n + 1, cap, "b");
  const auto m = multiplicities(a_diagram(n, k), {necklace(n + 1, k), necklace(n + 1, k + 1)},
                                CrossingStrategy::First, cap);
  return {m[0], m[1]};
}

BigInt b_plus(int n, int k, int cap) { return b_plus_minus(n, k, cap).first; }
BigInt b_minus(int n, int k, int cap) { return b_plus_minus(n, k, cap).second; }

std::vector<ChordDiagram> all_chord_diagrams(int m) {
  require(m >= 0, "all_chord_diagrams: negative size");
  std::vector<ChordDiagram> out;
  std::vector<int> partner(static_cast<std::size_t>(2 * m), -1);
  auto rec = [&](auto&& self) -> void {
    const auto free_it = std::find(partner.begin(), partner.end(), -1);
    if (free_it == partner.end()) {
      out.push_back(ChordDiagram::from_partners(partner));
      return;
    }
    const int a = static_cast<int>(free_it - partner.begin());
    for (int b = a + 1; b < 2 * m; ++b) {
      if (partner[static_cast<std::size_t>(b)] != -1) continue;
      partner[static_cast<std::size_t>(a)] = b;
      partner[static_cast<std::size_t>(b)] = a;
      self(self);
      partner[static_cast<std::size_t>(a)] = partner[static_cast<std::size_t>(b)] = -1;
    }
  };
  rec(rec);
  return out;
}

}  // namespace webperm
