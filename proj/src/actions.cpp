#include "webperm/actions.hpp"

#include <algorithm>
#include <deque>
#include <set>
#include <utility>

#include "webperm/errors.hpp"

namespace webperm {

namespace {

bool contains(const Word& w, Letter x) { return std::find(w.begin(), w.end(), x) != w.end(); }

Word reversed(Word w) {
  std::reverse(w.begin(), w.end());
  return w;
}

// Double ascents of p that fall inside `block`.
std::vector<Letter> double_ascents_in(const Word& sigma, const Word& block) {
  std::vector<Letter> out;
  for (Letter v : double_ascents(sigma)) {
    if (contains(block, v)) out.push_back(v);
  }
  return out;
}

Permutation from_blocks(const BiBasicDecomposition& d) { return Permutation(d.concat()); }

}  // namespace

Word XFactorization::concat() const {
  Word w = w1;
  w.insert(w.end(), w2.begin(), w2.end());
  w.push_back(x);
  w.insert(w.end(), w3.begin(), w3.end());
  w.insert(w.end(), w4.begin(), w4.end());
  return w;
}

XFactorization x_factorization(const Word& w, Letter x) {
  const auto pos = std::find(w.begin(), w.end(), x);
  require(pos != w.end(), "x_factorization: letter " + std::to_string(x) + " not in word");
  auto lo = pos;
  while (lo != w.begin() && *(lo - 1) > x) --lo;
  auto hi = pos + 1;
  while (hi != w.end() && *hi > x) ++hi;
  XFactorization f;
  f.x = x;
  f.w1.assign(w.begin(), lo);
  f.w2.assign(lo, pos);
  f.w3.assign(pos + 1, hi);
  f.w4.assign(hi, w.end());
  return f;
}

Word fs_phi(const Word& w, Letter x) {
  auto f = x_factorization(w, x);
  std::swap(f.w2, f.w3);
  return f.concat();
}

Word fs_phi_set(const Word& w, const std::vector<Letter>& s) {
  Word out = w;
  for (Letter x : s) out = fs_phi(out, x);
  return out;
}

Word BiBasicDecomposition::concat() const {
  Word w;
  for (const auto& a : alpha_blocks) w.insert(w.end(), a.begin(), a.end());
  w.push_back(1);
  for (const auto& b : beta_blocks) w.insert(w.end(), b.begin(), b.end());
  return w;
}

BiBasicDecomposition bi_basic(const Permutation& p) {
  require(p.size() >= 1, "bi_basic: empty permutation");
  const Word& w = p.word();
  const auto one = static_cast<std::size_t>(p.position_of(1) - 1);
  BiBasicDecomposition d;

  for (std::size_t i = 0; i < one; ++i) {
    const bool lr_min = d.alpha_blocks.empty() || w[i] < d.alpha_blocks.back().front();
    if (lr_min) d.alpha_blocks.emplace_back();
    d.alpha_blocks.back().push_back(w[i]);
  }

  std::vector<bool> rl_min(w.size(), false);
  Letter running = p.size() + 1;
  for (std::size_t i = w.size(); i-- > one + 1;) {
    if (w[i] < running) {
      running = w[i];
      rl_min[i] = true;
    }
  }
  Word block;
  for (std::size_t i = one + 1; i < w.size(); ++i) {
    block.push_back(w[i]);
    if (rl_min[i]) d.beta_blocks.push_back(std::exchange(block, {}));
  }
  return d;
}

bool has_no_double_descents(const Permutation& p) { return double_descents(p.word()).empty(); }

Word bfs_valleys(const Permutation& p) {
  Word v = valleys(p.word());
  v.erase(std::remove(v.begin(), v.end(), 1), v.end());
  return v;
}

Permutation bfs_psi(const Permutation& p, Letter x) {
  require(has_no_double_descents(p), "bfs_psi: " + p.to_string() + " has a double descent");
  require(x >= 1 && x <= p.size(), "bfs_psi: letter out of range");
  BiBasicDecomposition d = bi_basic(p);

  for (auto it = d.alpha_blocks.begin(); it != d.alpha_blocks.end(); ++it) {
    if (it->front() != x) continue;
    ensure(it->size() >= 2, "alpha block of length one in a double-descent-free permutation");
    Word moved = reversed(fs_phi_set(*it, double_ascents_in(p.word(), *it)));
    d.alpha_blocks.erase(it);
    auto gap = std::find_if(d.beta_blocks.begin(), d.beta_blocks.end(),
                            [x](const Word& b) { return b.back() > x; });
    d.beta_blocks.insert(gap, std::move(moved));
    Permutation out = from_blocks(d);
    ensure(has_no_double_descents(out), "bfs_psi left the double-descent-free class");
    return out;
  }

  for (auto it = d.beta_blocks.begin(); it != d.beta_blocks.end(); ++it) {
    if (it->back() != x || it->size() < 2) continue;
    Word moved = reversed(fs_phi_set(*it, double_ascents_in(p.word(), *it)));
    d.beta_blocks.erase(it);
    auto gap = std::find_if(d.alpha_blocks.begin(), d.alpha_blocks.end(),
                            [x](const Word& a) { return a.front() < x; });
    d.alpha_blocks.insert(gap, std::move(moved));
    Permutation out = from_blocks(d);
    ensure(has_no_double_descents(out), "bfs_psi left the double-descent-free class");
    return out;
  }

  if (x != 1 && contains(valleys(p.word()), x)) return Permutation(fs_phi(p.word(), x));
  return p;
}

Permutation bfs_psi_set(const Permutation& p, const std::vector<Letter>& s) {
  Permutation out = p;
  for (Letter x : s) out = bfs_psi(out, x);
  return out;
}

std::vector<Permutation> bfs_orbit(const Permutation& p) {
  std::set<Permutation> seen{p};
  std::deque<Permutation> queue{p};
  while (!queue.empty()) {
    const Permutation cur = std::move(queue.front());
    queue.pop_front();
    for (Letter x = 1; x <= cur.size(); ++x) {
      Permutation next = bfs_psi(cur, x);
      if (seen.insert(next).second) queue.push_back(std::move(next));
    }
  }
  return {seen.begin(), seen.end()};
}

bool is_orbit_representative(const Permutation& p) {
  if (p.empty() || p.at(1) != 1) return false;
  const auto d = bi_basic(p);
  return std::all_of(d.beta_blocks.begin(), d.beta_blocks.end(), [](const Word& b) {
    return is_andre(Word(b.begin(), b.end() - 1));
  });
}

Permutation orbit_representative(const Permutation& p) {
  std::vector<Permutation> found;
  for (const auto& q : bfs_orbit(p)) {
    if (is_orbit_representative(q)) found.push_back(q);
  }
  ensure(found.size() == 1, "orbit of " + p.to_string() + " has " + std::to_string(found.size()) +
                                " representatives");
  return found.front();
}

Permutation c_map(const BiBasicDecomposition& d) {
  require(d.alpha_blocks.empty(), "c_map: decomposition has alpha blocks");
  const int n = Permutation(d.concat()).size();
  std::vector<Cycle> cycles;
  for (const auto& b : d.beta_blocks) {
    require(!b.empty(), "c_map: empty block");
    Cycle c;
    for (Letter v : b) c.push_back(v - 1);
    cycles.push_back(std::move(c));
  }
  return Permutation::from_cycles(n - 1, cycles);
}

}  // namespace webperm
