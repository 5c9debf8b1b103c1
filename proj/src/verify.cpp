#include "webperm/verify.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <functional>
#include <map>
#include <set>
#include <sstream>
#include <thread>

#include "json.hpp"
#include "webperm/actions.hpp"
#include "webperm/chord.hpp"
#include "webperm/errors.hpp"
#include "webperm/eulerian.hpp"
#include "webperm/grid.hpp"
#include "webperm/min_max_tree.hpp"
#include "webperm/sequences.hpp"
#include "webperm/series.hpp"

namespace webperm {

bool SuiteReport::passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.passed; });
}

std::string SuiteReport::to_json(bool with_timing) const {
  nlohmann::ordered_json j;
  j["suite"] = suite;
  j["params"] = {{"max_n", params.max_n},
                 {"max_chords", params.max_chords},
                 {"threads", params.threads},
                 {"unsafe_no_cap", params.unsafe_no_cap}};
  j["checks"] = nlohmann::ordered_json::array();
  for (const auto& c : checks) {
    nlohmann::ordered_json item;
    item["id"] = c.id;
    item["status"] = c.passed ? "pass" : "fail";
    item["witness"] = c.witness ? nlohmann::ordered_json(*c.witness) : nlohmann::ordered_json();
    j["checks"].push_back(std::move(item));
  }
  j["elapsed_ms"] = with_timing ? elapsed_ms : 0;
  return j.dump(2);
}

namespace {

// Collects the outcomes of one task. Every check records pass/fail; only the
// first counterexample per check is kept as its witness.
class Recorder {
 public:
  void check(const std::string& id, bool ok, const std::function<std::string()>& witness) {
    auto [it, inserted] = results_.try_emplace(id, CheckResult{id, true, std::nullopt});
    if (!ok && it->second.passed) {
      it->second.passed = false;
      it->second.witness = witness();
    }
  }
  void pass(const std::string& id) { check(id, true, {}); }

  std::vector<CheckResult> take() {
    std::vector<CheckResult> out;
    for (auto& [id, r] : results_) out.push_back(std::move(r));
    return out;
  }

 private:
  std::map<std::string, CheckResult> results_;
};

struct Task {
  std::string id;  // used for the failure record if the task throws
  std::function<void(Recorder&)> run;
};

std::string tag(const std::string& claim, int n) { return claim + "[n=" + std::to_string(n) + "]"; }

template <typename T>
std::string str(const T& v) {
  std::ostringstream os;
  os << v;
  return os.str();
}

std::string poly_row(const std::vector<MultiPoly>& row) {
  std::string s = "[";
  for (std::size_t i = 0; i < row.size(); ++i) s += (i ? "; " : "") + row[i].to_string();
  return s + "]";
}

// Permissive enumeration cap; sizes were validated against the suite caps.
int cap_for(const SuiteParams& p) { return std::max(p.max_n, p.max_chords) + 1; }

// ---------------------------------------------------------------- suites

void first_letter_tasks(const SuiteParams& p, std::vector<Task>& tasks) {
  const int cap = cap_for(p);
  for (int n = 1; n <= p.max_n; ++n) {
    tasks.push_back({tag("web.resolution", n), [n, cap](Recorder& r) {
      const auto first = resolve(Permutation::identity(n), SelectionStrategy::First, cap);
      const auto last = resolve(Permutation::identity(n), SelectionStrategy::Last, cap);
      r.check(tag("web.selection-strategy-independent", n), first == last,
              [&] { return str(first.size()) + " vs " + str(last.size()) + " permutations"; });

      std::vector<Permutation> by_cycles;
      for_each_permutation(n, [&](const Permutation& s) {
        if (is_web(s)) by_cycles.push_back(s);
      }, cap);
      r.check(tag("web.resolution-equals-andre-cycles", n), first == by_cycles, [&] {
        return "resolved " + str(first.size()) + ", Andre-cycle " + str(by_cycles.size());
      });
      r.check(tag("web.count-is-euler-number", n),
              BigInt(first.size()) == euler_number(n + 1),
              [&] { return str(first.size()) + " != " + str(euler_number(n + 1)); });
    }});

    tasks.push_back({tag("first-letter.seidel", n), [n, cap](Recorder& r) {
      const auto row = f_row(n, cap);
      auto fv = [&](int k) { return row[static_cast<std::size_t>(k)]; };
      if (n % 2 == 0 && n >= 2) {
        const int m = n / 2;
        const SeidelTriangle s(n - 1);
        for (int k = 1; k <= m; ++k) {
          r.check(tag("first-letter.even-size", n), BigInt(fv(2 * k - 1)) == s.at(n - 1, m - k + 1), [&] {
            return "f(" + str(n) + "," + str(2 * k - 1) + ")=" + str(fv(2 * k - 1)) +
                   " vs s(" + str(n - 1) + "," + str(m - k + 1) + ")=" + str(s.at(n - 1, m - k + 1));
          });
        }
      } else if (n % 2 == 1 && n >= 3) {
        const int m = (n + 1) / 2;
        const SeidelTriangle s(n - 1);
        for (int k = 1; k <= m; ++k) {
          r.check(tag("first-letter.odd-size", n), BigInt(fv(2 * k - 1)) == s.at(n - 1, k), [&] {
            return "f(" + str(n) + "," + str(2 * k - 1) + ")=" + str(fv(2 * k - 1)) + " vs s(" +
                   str(n - 1) + "," + str(k) + ")=" + str(s.at(n - 1, k));
          });
        }
      }
      int total = 0;
      for (int k = 1; k <= n; ++k) total += fv(k);
      r.check(tag("first-letter.row-sum-is-tilde-web-count", n),
              total == static_cast<int>(tilde_web(n, cap).size()), [&] { return str(total); });
    }});
  }
}

void gamma_tasks(const SuiteParams& p, std::vector<Task>& tasks) {
  const int cap = cap_for(p);
  for (int n = 1; n <= p.max_n; ++n) {
    tasks.push_back({tag("gamma", n), [n, cap](Recorder& r) {
      const MultiPoly a = at_eulerian(n, cap);
      const auto gamma = gamma_expand(a, n);
      r.check(tag("gamma.reconstructs", n), gamma_reconstruct(gamma, n) == a,
              [&] { return a.to_string(); });
      const auto direct = gamma_direct(n, cap);
      r.check(tag("gamma.equals-no-double-descent-sum", n), gamma == direct,
              [&] { return poly_row(gamma) + " vs " + poly_row(direct); });
      const auto d = d_web_row(n, cap);
      std::vector<MultiPoly> scaled;
      for (std::size_t i = 0; i < d.size(); ++i) scaled.push_back(d[i] * MultiPoly(BigInt(BigInt(1) << i)));
      r.check(tag("gamma.equals-2^i-web-drop", n), gamma == scaled,
              [&] { return poly_row(gamma) + " vs " + poly_row(scaled); });
      bool nonneg = true;
      for (const auto& g : gamma) {
        for (const auto& [m, c] : g.terms()) nonneg = nonneg && c > 0;
      }
      r.check(tag("gamma.nonnegative", n), nonneg, [&] { return poly_row(gamma); });

      const auto andre = d_andre_row(n, cap);
      bool at_one = andre.size() == d.size();
      for (std::size_t i = 0; at_one && i < d.size(); ++i) {
        const auto v = d[i].at_t_alpha_one();
        at_one = v.coeff({}) == andre[i] && v.terms().size() <= 1;
      }
      r.check(tag("gamma.web-drop-at-one-counts-andre", n), at_one, [&] { return poly_row(d); });

      const MultiPoly eul = eulerian(n, cap);
      r.pass(tag("eulerian.des-equals-drop", n));
      std::vector<MultiPoly> classical;
      for (std::size_t i = 0; i < andre.size(); ++i) classical.emplace_back(BigInt(andre[i] << i));
      r.check(tag("eulerian.andre-gamma-expansion", n), gamma_reconstruct(classical, n) == eul,
              [&] { return eul.to_string(); });
      r.check(tag("eulerian.specialises-at-one", n), a.at_t_alpha_one() == eul,
              [&] { return a.at_t_alpha_one().to_string(); });
    }});
  }
}

void equidist_tasks(const SuiteParams& p, std::vector<Task>& tasks) {
  const int cap = cap_for(p);
  for (int n = 0; n <= p.max_n; ++n) {
    tasks.push_back({tag("equidist", n), [n, cap](Recorder& r) {
      const MultiPoly web = web_fix_cyc(n, cap);
      const MultiPoly delta = delta_fix_cyc(n, cap);
      r.check(tag("equidist.fix-cyc-web-vs-cycle-up-down", n), web == delta,
              [&] { return web.to_string() + " vs " + delta.to_string(); });
      const auto dw = d_web_row(n + 1, cap);
      const auto dd = d_delta_row(n + 1, cap);
      r.check(tag("equidist.drop-vs-drop-hat", n), dw == dd,
              [&] { return poly_row(dw) + " vs " + poly_row(dd); });
    }});
  }
}

void series_tasks(const SuiteParams& p, std::vector<Task>& tasks) {
  const int cap = cap_for(p);
  const int order = std::min(p.max_n, kMaxSeriesOrder);
  tasks.push_back({"series.oracle", [order, cap](Recorder& r) {
    const auto oracle = series_oracle(order);
    r.check("series.constant-term-is-one", oracle[0] == MultiPoly(1),
            [&] { return oracle[0].to_string(); });
    for (int n = 0; n <= order; ++n) {
      const MultiPoly web = web_fix_cyc(n, cap);
      const MultiPoly delta = delta_fix_cyc(n, cap);
      const auto& coeff = oracle[static_cast<std::size_t>(n)];
      r.check(tag("series.matches-web", n), coeff == web,
              [&] { return coeff.to_string() + " vs " + web.to_string(); });
      r.check(tag("series.matches-cycle-up-down", n), coeff == delta,
              [&] { return coeff.to_string() + " vs " + delta.to_string(); });
    }
  }});
}

void lambda_tasks(const SuiteParams& p, std::vector<Task>& tasks) {
  const int cap = cap_for(p);
  tasks.push_back({"lambda.worked-example", [](Recorder& r) {
    const Word got = lambda(Word{5, 1, 3, 6, 7, 2, 4, 8});
    r.check("lambda.worked-example", got == Word{5, 8, 2, 6, 4, 7, 1, 3},
            [&] { return word_to_string(got); });
  }});
  for (int n = 1; n <= p.max_n; ++n) {
    tasks.push_back({tag("lambda", n), [n, cap](Recorder& r) {
      std::set<Word> up_down;
      std::set<Word> images;
      std::set<Permutation> delta;
      std::set<Permutation> web_images;
      for_each_permutation(n, [&](const Permutation& s) {
        const Word& w = s.word();
        const MinMaxTree t(w);
        const bool andre = is_andre(w);
        r.check(tag("tree.andre-iff-increasing", n),
                andre == is_andre_xfact(w) && andre == t.is_increasing(),
                [&] { return s.to_string(); });
        r.check(tag("tree.mix-counts-two-child-nodes", n), mix(w) == t.two_child_count(),
                [&] { return s.to_string(); });
        r.check(tag("tree.one-child-count", n),
                t.one_child_count() == n - 1 - 2 * t.two_child_count(),
                [&] { return s.to_string(); });
        r.check(tag("tree.inorder-recovers-word", n), t.inorder() == w,
                [&] { return s.to_string(); });
        if (is_up_down(w)) up_down.insert(w);
        if (is_cycle_up_down(s)) delta.insert(s);
        if (andre) {
          r.check(tag("tree.andre-descents-are-two-child-nodes", n),
                  descents(w) == t.two_child_count(), [&] { return s.to_string(); });
          const Word l = lambda(w);
          images.insert(l);
          r.check(tag("lambda.keeps-first-letter", n), l.front() == w.front(),
                  [&] { return s.to_string(); });
          r.check(tag("lambda.descents-to-mix", n), descents(w) == mix(l),
                  [&] { return s.to_string() + " -> " + word_to_string(l); });
          r.check(tag("lambda.inverse", n), lambda_inv(l) == w, [&] { return s.to_string(); });
        }
        if (is_web(s)) {
          const Permutation q = lambda_web(s);
          web_images.insert(q);
          const auto a = statistics(s);
          const auto b = statistics(q);
          r.check(tag("lambda-web.fix-cyc-preserved", n), a.fix == b.fix && a.cyc == b.cyc,
                  [&] { return s.to_string() + " -> " + q.to_string(); });
          r.check(tag("lambda-web.drop-to-drop-hat", n), a.drop == drop_hat(q),
                  [&] { return s.to_string() + " -> " + q.to_string(); });
          r.check(tag("lambda-web.drop-hat-equals-drop-on-web", n), a.drop == drop_hat(s),
                  [&] { return s.to_string(); });
          const auto cs = s.cycles();
          const auto cq = q.cycles();
          bool firsts = cs.size() == cq.size();
          for (std::size_t i = 0; firsts && i < cs.size(); ++i) firsts = cs[i].front() == cq[i].front();
          r.check(tag("lambda-web.cycle-first-letters", n), firsts,
                  [&] { return s.to_string() + " -> " + q.to_string(); });
          r.check(tag("lambda-web.inverse", n), lambda_web_inv(q) == s,
                  [&] { return s.to_string(); });
        }
      }, cap);
      r.check(tag("lambda.onto-up-down", n), images == up_down,
              [&] { return str(images.size()) + " images, " + str(up_down.size()) + " up-down"; });
      r.check(tag("lambda-web.onto-cycle-up-down", n), web_images == delta, [&] {
        return str(web_images.size()) + " images, " + str(delta.size()) + " cycle-up-down";
      });
    }});
  }
}

void action_example_task(std::vector<Task>& tasks) {
  tasks.push_back({"actions.worked-example", [](Recorder& r) {
    const Permutation s = Permutation::parse("3 4 8 5 7 10 1 6 2 9");
    const Word& w = s.word();
    const auto f = x_factorization(w, 5);
    r.check("actions.worked-example.x-factorization", f.w2 == Word{8} && f.w3 == Word{7, 10},
            [&] { return word_to_string(f.w2) + " | " + word_to_string(f.w3); });
    r.check("actions.worked-example.fs-phi",
            fs_phi(w, 5) == Word{3, 4, 7, 10, 5, 8, 1, 6, 2, 9} &&
                fs_phi(w, 4) == Word{3, 8, 5, 7, 10, 4, 1, 6, 2, 9},
            [&] { return word_to_string(fs_phi(w, 5)); });
    const auto d = bi_basic(s);
    r.check("actions.worked-example.bi-basic",
            d.alpha_blocks == std::vector<Word>{{3, 4, 8, 5, 7, 10}} &&
                d.beta_blocks == std::vector<Word>{{6, 2}, {9}},
            [&] { return "unexpected blocks"; });
    r.check("actions.worked-example.valleys", bfs_valleys(s) == Word{3, 5, 2},
            [&] { return word_to_string(bfs_valleys(s)); });
    const std::vector<std::pair<std::vector<Letter>, const char*>> expected = {
        {{2}, "3 4 8 5 7 10 2 6 1 9"},    {{3}, "1 6 2 4 7 10 5 8 3 9"},
        {{5}, "3 4 7 10 5 8 1 6 2 9"},    {{2, 3}, "2 6 1 4 7 10 5 8 3 9"},
        {{2, 5}, "3 4 7 10 5 8 2 6 1 9"}, {{3, 5}, "1 6 2 4 8 5 7 10 3 9"},
        {{2, 3, 5}, "2 6 1 4 8 5 7 10 3 9"}};
    for (const auto& [set, want] : expected) {
      const Permutation got = bfs_psi_set(s, set);
      r.check("actions.worked-example.bfs-psi", got == Permutation::parse(want),
              [&, want = want] { return got.to_string() + " expected " + want; });
    }
    const MinMaxTree t(Word{5, 6, 2, 3, 1, 4});
    const Word hr = hr_phi(t, 2).inorder();
    r.check("actions.worked-example.hr-phi", hr == Word{5, 1, 3, 4, 2, 6},
            [&] { return word_to_string(hr); });
  }});
}

void action_tasks(const SuiteParams& p, std::vector<Task>& tasks) {
  const int cap = cap_for(p);
  action_example_task(tasks);
  for (int n = 1; n <= p.max_n; ++n) {
    tasks.push_back({tag("actions.fs-hr", n), [n, cap](Recorder& r) {
      for_each_permutation(n, [&](const Permutation& s) {
        const Word& w = s.word();
        const MinMaxTree t(w);
        for (Letter x = 1; x <= n; ++x) {
          const Word fx = fs_phi(w, x);
          r.check(tag("fs.involution", n), fs_phi(fx, x) == w,
                  [&] { return s.to_string() + " x=" + str(x); });
          const MinMaxTree hx = hr_phi(t, x);
          r.check(tag("hr.involution", n), hr_phi(hx, x) == t,
                  [&] { return s.to_string() + " i=" + str(x); });
          r.check(tag("hr.keeps-shape", n), hx.same_shape(t),
                  [&] { return s.to_string() + " i=" + str(x); });
          for (Letter y = x + 1; y <= n; ++y) {
            r.check(tag("fs.commute", n), fs_phi(fx, y) == fs_phi(fs_phi(w, y), x),
                    [&] { return s.to_string() + " x=" + str(x) + " y=" + str(y); });
            r.check(tag("hr.commute", n), hr_phi(hx, y) == hr_phi(hr_phi(t, y), x),
                    [&] { return s.to_string() + " i=" + str(x) + " j=" + str(y); });
          }
        }
      }, cap);
    }});

    tasks.push_back({tag("actions.bfs", n), [n, cap](Recorder& r) {
      std::vector<MultiPoly> lhs(static_cast<std::size_t>(n));
      std::vector<MultiPoly> rhs(static_cast<std::size_t>(n));
      std::set<Permutation> reps_image;
      std::size_t rep_count = 0;
      for_each_permutation(n, [&](const Permutation& s) {
        if (!has_no_double_descents(s)) return;
        const StatRecord st = statistics(s);
        lhs[static_cast<std::size_t>(st.des)].add({st.rmida, st.lrmi(), 0}, 1);
        const Word valleys = bfs_valleys(s);
        for (Letter x = 1; x <= n; ++x) {
          const Permutation q = bfs_psi(s, x);
          const StatRecord sq = statistics(q);
          r.check(tag("bfs.involution", n), bfs_psi(q, x) == s,
                  [&] { return s.to_string() + " x=" + str(x); });
          r.check(tag("bfs.keeps-lrmi-rmida-des", n),
                  st.lrmi() == sq.lrmi() && st.rmida == sq.rmida && st.des == sq.des,
                  [&] { return s.to_string() + " x=" + str(x); });
          const bool in_v = std::find(valleys.begin(), valleys.end(), x) != valleys.end();
          r.check(tag("bfs.moves-exactly-valleys", n), (q != s) == in_v,
                  [&] { return s.to_string() + " x=" + str(x); });
          for (Letter y = x + 1; y <= n; ++y) {
            r.check(tag("bfs.commute", n), bfs_psi(q, y) == bfs_psi(bfs_psi(s, y), x),
                    [&] { return s.to_string() + " x=" + str(x) + " y=" + str(y); });
          }
        }
        const auto orbit = bfs_orbit(s);
        r.check(tag("bfs.orbit-size", n), orbit.size() == (std::size_t{1} << valleys.size()),
                [&] { return s.to_string() + " orbit " + str(orbit.size()); });
        const Permutation rep = orbit_representative(s);  // throws unless unique
        r.pass(tag("bfs.unique-representative", n));
        if (rep != s) return;
        ++rep_count;
        const StatRecord sr = statistics(rep);
        rhs[static_cast<std::size_t>(sr.des)].add({sr.rmida, sr.rmi - 1, 0},
                                                 BigInt(BigInt(1) << sr.des));
        const Permutation tau = c_map(bi_basic(rep));
        const StatRecord stau = statistics(tau);
        reps_image.insert(tau);
        r.check(tag("bfs.representative-to-web", n),
                is_web(tau) && sr.rmida == stau.fix && sr.rmi - 1 == stau.cyc && sr.des == stau.drop,
                [&] { return rep.to_string() + " -> " + tau.to_string(); });
      }, cap);
      std::size_t web_count = 0;
      for_each_permutation(n - 1, [&](const Permutation& s) { web_count += is_web(s) ? 1 : 0; }, cap);
      r.check(tag("bfs.representatives-biject-onto-web", n),
              reps_image.size() == rep_count && rep_count == web_count,
              [&] { return str(rep_count) + " representatives, " + str(web_count) + " web"; });
      r.check(tag("bfs.orbit-sum-identity", n), lhs == rhs,
              [&] { return poly_row(lhs) + " vs " + poly_row(rhs); });
    }});
  }
}

void chord_tasks(const SuiteParams& p, std::vector<Task>& tasks) {
  const int chord_cap = std::max(p.max_chords, kDefaultChordCap);
  const int cap = cap_for(p);
  // A(n, k) has n + 1 chords.
  for (int n = 0; n + 1 <= p.max_chords; ++n) {
    tasks.push_back({tag("chord.b", n), [n, chord_cap](Recorder& r) {
      std::vector<BigInt> plus;
      std::vector<BigInt> minus;
      for (int k = 0; k <= n; ++k) {
        auto [bp, bm] = b_plus_minus(n, k, chord_cap);
        plus.push_back(bp);
        minus.push_back(bm);
      }
      for (int k = 1; k <= n; ++k) {
        const auto i = static_cast<std::size_t>(k);
        r.check(tag("chord.minus-is-shifted-plus", n), minus[i] == plus[i - 1],
                [&] { return "k=" + str(k); });
      }
      if (n >= 1) {
        const int m = (n + 1) / 2;
        const SeidelTriangle s(n + 1);
        for (int k = 0; k <= n; ++k) {
          const BigInt want = n % 2 == 1 ? s.at(2 * m, m - k / 2) : s.at(n + 1, k / 2 + 1);
          r.check(tag("chord.plus-matches-seidel", n), plus[static_cast<std::size_t>(k)] == want,
                  [&] {
                    return "k=" + str(k) + ": " + str(plus[static_cast<std::size_t>(k)]) +
                           " vs " + str(want);
                  });
        }
      }
      if (n + 1 <= 6) {
        for (int k = 0; k <= n; ++k) {
          const auto e = a_diagram(n, k);
          r.check(tag("chord.expansion-strategy-independent", n),
                  ncd(e, CrossingStrategy::First, chord_cap) == ncd(e, CrossingStrategy::Last, chord_cap),
                  [&] { return "k=" + str(k); });
        }
      }
    }});
  }
  // h(p_k(id_n)) needs b+(n-1, .), i.e. n chords.
  for (int n = 2; n <= std::min(p.max_n, p.max_chords); ++n) {
    tasks.push_back({tag("chord.h", n), [n, cap, chord_cap](Recorder& r) {
      for (int k = 1; k <= n - 1; ++k) {
        const int got = h(p_transform(Permutation::identity(n), k), cap);
        const BigInt want = b_plus(n - 1, n - k - 1, chord_cap);
        r.check(tag("chord.h-of-rotated-identity", n), BigInt(got) == want,
                [&] { return "k=" + str(k) + ": " + str(got) + " vs " + str(want); });
      }
    }});
  }
  // f(m, .) needs b+(m-2, .), i.e. m-1 chords.
  for (int m = 2; m <= p.max_n && m - 1 <= p.max_chords; ++m) {
    tasks.push_back({tag("chord.f", m), [m, cap, chord_cap](Recorder& r) {
      const auto row = f_row(m, cap);
      if (m % 2 == 0) {
        const int n = m / 2;
        for (int k = 1; k <= n; ++k) {
          const BigInt want = b_plus(2 * n - 2, 2 * n - 2 * k, chord_cap);
          const int got = row[static_cast<std::size_t>(2 * k - 1)];
          r.check(tag("chord.f-even-size", m), BigInt(got) == want,
                  [&] { return "k=" + str(k) + ": " + str(got) + " vs " + str(want); });
        }
      } else {
        const int n = (m + 1) / 2;
        for (int k = 1; k <= n - 1; ++k) {
          const BigInt want = b_plus(2 * n - 3, 2 * n - 2 * k - 1, chord_cap);
          const int got = row[static_cast<std::size_t>(2 * k - 1)];
          r.check(tag("chord.f-odd-size", m), BigInt(got) == want,
                  [&] { return "k=" + str(k) + ": " + str(got) + " vs " + str(want); });
        }
        r.check(tag("chord.f-odd-size-last-letter-zero", m), row.back() == 0,
                [&] { return str(row.back()); });
      }
    }});
  }
}

void pk_mix_tasks(const SuiteParams& p, std::vector<Task>& tasks) {
  const int cap = cap_for(p);
  for (int n = 1; n <= p.max_n; ++n) {
    tasks.push_back({tag("pk-mix", n), [n, cap](Recorder& r) {
      r.check(tag("pk-mix.equidistributed", n), pk_mix_check(n, cap), [&] {
        std::string s = "pk";
        for (const auto& v : pk_distribution(n, cap)) s += " " + str(v);
        s += " mix";
        for (const auto& v : mix_distribution(n, cap)) s += " " + str(v);
        return s;
      });
    }});
  }
}

using SuiteBuilder = void (*)(const SuiteParams&, std::vector<Task>&);

const std::vector<std::pair<std::string, SuiteBuilder>>& builders() {
  static const std::vector<std::pair<std::string, SuiteBuilder>> table = {
      {"conjecture-hjo", first_letter_tasks},
      {"gamma-xz", gamma_tasks},
      {"equidist", equidist_tasks},
      {"lambda", lambda_tasks},
      {"actions", action_tasks},
      {"chord", chord_tasks},
      {"series", series_tasks},
      {"pk-mix", pk_mix_tasks},
  };
  return table;
}

std::vector<CheckResult> run_tasks(std::vector<Task>& tasks, int threads) {
  std::vector<std::vector<CheckResult>> slots(tasks.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < tasks.size(); i = next++) {
      Recorder rec;
      try {
        tasks[i].run(rec);
        slots[i] = rec.take();
      } catch (const CapExceeded&) {
        throw;
      } catch (const std::exception& e) {
        slots[i] = rec.take();
        slots[i].push_back({tasks[i].id + ".completed", false, std::string(e.what())});
      }
    }
  };
  const int count = std::max(1, std::min<int>(threads, static_cast<int>(tasks.size())));
  if (count == 1) {
    worker();
  } else {
    std::vector<std::exception_ptr> errors(static_cast<std::size_t>(count));
    std::vector<std::thread> pool;
    for (int t = 0; t < count; ++t) {
      pool.emplace_back([&, t] {
        try {
          worker();
        } catch (...) {
          errors[static_cast<std::size_t>(t)] = std::current_exception();
        }
      });
    }
    for (auto& th : pool) th.join();
    for (const auto& e : errors) {
      if (e) std::rethrow_exception(e);
    }
  }
  std::vector<CheckResult> out;
  for (auto& s : slots) std::move(s.begin(), s.end(), std::back_inserter(out));
  std::sort(out.begin(), out.end(), [](const CheckResult& a, const CheckResult& b) { return a.id < b.id; });
  return out;
}

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> v;
    for (const auto& [name, fn] : builders()) v.push_back(name);
    v.push_back("all");
    return v;
  }();
  return names;
}

void validate(const SuiteParams& params) {
  require(params.max_n >= 1, "--max-n must be at least 1");
  require(params.max_chords >= 1, "--max-chords must be at least 1");
  require(params.threads >= 1, "--threads must be at least 1");
  if (!params.unsafe_no_cap) {
    check_cap(params.max_n, kHardMaxN, "--max-n");
    check_cap(params.max_chords, kHardMaxChords, "--max-chords");
  }
}

SuiteReport run_suite(const std::string& name, const SuiteParams& params) {
  const auto& names = suite_names();
  require(std::find(names.begin(), names.end(), name) != names.end(), "unknown suite '" + name + "'");
  validate(params);

  const auto start = std::chrono::steady_clock::now();
  std::vector<Task> tasks;
  for (const auto& [suite, build] : builders()) {
    if (name == "all" || name == suite) build(params, tasks);
  }
  SuiteReport report;
  report.suite = name;
  report.params = params;
  report.checks = run_tasks(tasks, params.threads);
  report.elapsed_ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                          std::chrono::steady_clock::now() - start)
                          .count();
  return report;
}

}  // namespace webperm
