#include "webperm/grid.hpp"

#include <algorithm>
#include <string>

#include "webperm/errors.hpp"

namespace webperm {

namespace {

std::string cell_str(Cell c) { return "(" + std::to_string(c.i) + "," + std::to_string(c.j) + ")"; }

bool key_less(Cell a, Cell b) {
  if (a.i != b.i) return a.i < b.i;
  return a.j > b.j;
}

Cell select_crossing(const CellSet& maximal, SelectionStrategy strategy) {
  return strategy == SelectionStrategy::First
             ? *std::min_element(maximal.begin(), maximal.end(), key_less)
             : *std::max_element(maximal.begin(), maximal.end(), key_less);
}

void check_resolvable(const GridConfiguration& g, Cell c) {
  const CellSet maximal = maximal_crossings(g);
  require(maximal.count(c) == 1, "cell " + cell_str(c) + " is not a maximal crossing");
  for (Cell e : g.resolved()) {
    require(!(e != c && dominates(c, e)),
            "resolved cell " + cell_str(e) + " lies below " + cell_str(c));
  }
}

void resolve_into(const GridConfiguration& g, SelectionStrategy strategy,
                  std::vector<Permutation>& out) {
  const CellSet maximal = maximal_crossings(g);
  if (maximal.empty()) {
    out.push_back(g.sigma());
    return;
  }
  const Cell c = select_crossing(maximal, strategy);
  resolve_into(smooth(g, c), strategy, out);
  resolve_into(switch_crossing(g, c), strategy, out);
}

enum class Side { West, East, South, North };

// Exit side of a strand entering a cell from `in`.
Side route(CellKind kind, Side in) {
  auto fail = [] { return InvariantError("strand entered a cell from a side with no line"); };
  switch (kind) {
    case CellKind::Hook:
      if (in == Side::West) return Side::North;
      if (in == Side::North) return Side::West;
      throw fail();
    case CellKind::Elbow:
      if (in == Side::West) return Side::South;
      if (in == Side::South) return Side::West;
      if (in == Side::North) return Side::East;
      if (in == Side::East) return Side::North;
      throw fail();
    case CellKind::Horizontal:
      if (in == Side::West) return Side::East;
      if (in == Side::East) return Side::West;
      throw fail();
    case CellKind::Vertical:
      if (in == Side::South) return Side::North;
      if (in == Side::North) return Side::South;
      throw fail();
    case CellKind::Crossing:
      if (in == Side::West) return Side::East;
      if (in == Side::East) return Side::West;
      if (in == Side::South) return Side::North;
      return Side::South;
    case CellKind::Blank:
      break;
  }
  throw fail();
}

// Follows a strand from its entry cell to the boundary label it ends on.
int trace(const GridConfiguration& g, Cell cell, Side in) {
  const int n = g.size();
  // Each strand visits a cell at most twice (once per line through it).
  for (int steps = 0; steps <= 2 * n * n; ++steps) {
    const Side out = route(g.kind(cell), in);
    switch (out) {
      case Side::North:
        if (cell.j == n) return n + cell.i - 1;
        cell = {cell.i, cell.j + 1};
        in = Side::South;
        break;
      case Side::South:
        ensure(cell.j > 1, "strand left through the bottom boundary");
        cell = {cell.i, cell.j - 1};
        in = Side::North;
        break;
      case Side::West:
        if (cell.i == 1) return cell.j - 1;
        cell = {cell.i - 1, cell.j};
        in = Side::East;
        break;
      case Side::East:
        ensure(cell.i < n, "strand left through the right boundary");
        cell = {cell.i + 1, cell.j};
        in = Side::West;
        break;
    }
  }
  throw InvariantError("strand does not terminate");
}

}  // namespace

CellSet crossings(const Permutation& p) {
  const int n = p.size();
  const Permutation inv = p.inverse();
  CellSet out;
  for (int i = 1; i <= n; ++i) {
    for (int j = p.at(i) + 1; j <= n; ++j) {
      if (i < inv.at(j)) out.insert({i, j});
    }
  }
  return out;
}

GridConfiguration::GridConfiguration(Permutation sigma, CellSet resolved)
    : sigma_(std::move(sigma)), resolved_(std::move(resolved)) {
  const CellSet cr = crossings(sigma_);
  require(std::includes(cr.begin(), cr.end(), resolved_.begin(), resolved_.end()),
          "resolved cells must be crossings of " + sigma_.to_string());
}

CellKind GridConfiguration::kind(Cell c) const {
  const int n = size();
  require(c.i >= 1 && c.j >= 1 && c.i <= n && c.j <= n, "cell outside the chart");
  if (sigma_.at(c.i) == c.j) return CellKind::Hook;
  const bool horizontal = c.i < sigma_.position_of(c.j);
  const bool vertical = c.j > sigma_.at(c.i);
  if (horizontal && vertical) return resolved_.count(c) ? CellKind::Elbow : CellKind::Crossing;
  if (horizontal) return CellKind::Horizontal;
  if (vertical) return CellKind::Vertical;
  return CellKind::Blank;
}

CellSet GridConfiguration::unresolved() const {
  CellSet out;
  const CellSet cr = crossings(sigma_);
  std::set_difference(cr.begin(), cr.end(), resolved_.begin(), resolved_.end(),
                      std::inserter(out, out.end()));
  return out;
}

CellSet maximal_crossings(const GridConfiguration& g) {
  const CellSet open = g.unresolved();
  CellSet out;
  for (Cell c : open) {
    const bool dominated = std::any_of(open.begin(), open.end(),
                                       [&](Cell d) { return d != c && dominates(d, c); });
    if (!dominated) out.insert(c);
  }
  return out;
}

GridConfiguration smooth(const GridConfiguration& g, Cell c) {
  check_resolvable(g, c);
  CellSet e = g.resolved();
  e.insert(c);
  return GridConfiguration(g.sigma(), std::move(e));
}

GridConfiguration switch_crossing(const GridConfiguration& g, Cell c) {
  check_resolvable(g, c);
  const int l = g.sigma().position_of(c.j);
  Permutation next = g.sigma().swap_positions(c.i, l);
  const CellSet cr = crossings(next);
  ensure(std::includes(cr.begin(), cr.end(), g.resolved().begin(), g.resolved().end()),
         "switching " + cell_str(c) + " in " + g.sigma().to_string() +
             " invalidated a resolved cell");
  return GridConfiguration(std::move(next), g.resolved());
}

std::vector<Permutation> resolve(const Permutation& p, SelectionStrategy strategy, int cap) {
  check_cap(p.size(), cap, "resolve");
  std::vector<Permutation> out;
  resolve_into(GridConfiguration(p), strategy, out);
  std::sort(out.begin(), out.end());
  ensure(std::adjacent_find(out.begin(), out.end()) == out.end(),
         "two resolution branches produced the same web permutation");
  return out;
}

Matching::Matching(std::vector<std::pair<int, int>> pairs) : pairs_(std::move(pairs)) {
  std::vector<bool> seen(pairs_.size() * 2, false);
  for (auto& [a, b] : pairs_) {
    if (a > b) std::swap(a, b);
    const auto m = static_cast<int>(seen.size());
    require(a >= 0 && b < m && a != b && !seen[static_cast<std::size_t>(a)] &&
                !seen[static_cast<std::size_t>(b)],
            "not a perfect matching");
    seen[static_cast<std::size_t>(a)] = seen[static_cast<std::size_t>(b)] = true;
  }
  std::sort(pairs_.begin(), pairs_.end());
}

Matching Matching::standard(int n) {
  std::vector<std::pair<int, int>> pairs;
  for (int k = 0; k < n; ++k) pairs.emplace_back(2 * k, 2 * k + 1);
  return Matching(std::move(pairs));
}

Matching matching(const Permutation& p) {
  const int n = p.size();
  const GridConfiguration g(p, crossings(p));
  std::vector<int> partner(static_cast<std::size_t>(2 * n), -1);
  auto link = [&](int from, int to) {
    ensure(to != from, "strand returned to its own label");
    const auto a = static_cast<std::size_t>(from);
    const auto b = static_cast<std::size_t>(to);
    ensure((partner[a] == -1 || partner[a] == to) && (partner[b] == -1 || partner[b] == from),
           "strand tracing is not symmetric");
    partner[a] = to;
    partner[b] = from;
  };
  for (int r = 0; r < n; ++r) link(r, trace(g, {1, r + 1}, Side::West));
  for (int c = 1; c <= n; ++c) link(n + c - 1, trace(g, {c, n}, Side::North));
  std::vector<std::pair<int, int>> pairs;
  for (int a = 0; a < 2 * n; ++a) {
    const int b = partner[static_cast<std::size_t>(a)];
    if (a < b) pairs.emplace_back(a, b);
  }
  return Matching(std::move(pairs));
}

Permutation p_transform(const Permutation& p, int k) {
  require(k >= 1 && k <= p.size(), "p_transform: k out of range");
  Word w = p.word();
  std::rotate(w.begin(), w.begin() + 1, w.begin() + k);
  return Permutation(std::move(w));
}

int h(const Permutation& p, int cap) {
  const Matching m0 = Matching::standard(p.size());
  const auto webs = web_from(p, cap);
  return static_cast<int>(
      std::count_if(webs.begin(), webs.end(), [&](const Permutation& s) { return matching(s) == m0; }));
}

std::vector<Permutation> tilde_web(int n, int cap) {
  const Matching m0 = Matching::standard(n);
  std::vector<Permutation> out;
  for (auto& s : resolve(Permutation::identity(n), SelectionStrategy::First, cap)) {
    if (matching(s) == m0) out.push_back(std::move(s));
  }
  return out;
}

std::vector<int> f_row(int n, int cap) {
  require(n >= 1, "f: n must be positive");
  std::vector<int> row(static_cast<std::size_t>(n) + 1, 0);
  for (const auto& s : tilde_web(n, cap)) ++row[static_cast<std::size_t>(s.at(1))];
  return row;
}

int f(int n, int k, int cap) {
  require(k >= 1 && k <= n, "f: need 1 <= k <= n");
  return f_row(n, cap)[static_cast<std::size_t>(k)];
}

}  // namespace webperm
