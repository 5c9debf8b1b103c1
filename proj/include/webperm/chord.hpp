#pragma once

#include <compare>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "webperm/bigint.hpp"

namespace webperm {

inline constexpr int kDefaultChordCap = 8;

// A chord between two circle vertices, stored with a < b.
struct Chord {
  int a = 0;
  int b = 0;
  auto operator<=>(const Chord&) const = default;
};

// Vertices 0..2m-1 sit counterclockwise on a circle. A chord diagram is a
// perfect matching of them; canonical form sorts chords by smaller endpoint.
class ChordDiagram {
 public:
  ChordDiagram() = default;
  explicit ChordDiagram(std::vector<Chord> chords);

  // Builds the diagram from a partner table (partner[v] = other end of v).
  static ChordDiagram from_partners(const std::vector<int>& partner);

  int chord_count() const { return static_cast<int>(chords_.size()); }
  int vertex_count() const { return 2 * chord_count(); }
  const std::vector<Chord>& chords() const { return chords_; }
  std::vector<int> partners() const;

  int crossing_count() const;
  bool nonintersecting() const { return crossing_count() == 0; }

  std::string to_string() const;

  auto operator<=>(const ChordDiagram&) const = default;

 private:
  std::vector<Chord> chords_;
};

// Exactly one endpoint of `second` lies strictly inside the counterclockwise
// arc from first.a to first.b. Shared endpoints are a precondition error.
bool crosses(Chord first, Chord second);

// Expansion of E at the crossing {a,c},{b,d} (a < b < c < d). Reading the
// four endpoints clockwise as x1..x4 = d, c, b, a, the first result replaces
// the pair with {x1x2, x3x4} = {ab, cd}, the second with {x2x3, x4x1} = {bc, ad}.
std::pair<ChordDiagram, ChordDiagram> expand(const ChordDiagram& e, std::pair<Chord, Chord> s);

// Multiplicities of the nonintersecting leaves of an expansion tree.
using NCDMultiset = std::map<ChordDiagram, BigInt>;

// Which crossing pair to expand at each node: first or last in the
// lexicographic order of (chord index, chord index).
enum class CrossingStrategy { First, Last };

NCDMultiset ncd(const ChordDiagram& e, CrossingStrategy strategy = CrossingStrategy::First,
                int cap = kDefaultChordCap);

// Multiplicity m(E, F) of each target F in NCD(E), without materialising the
// whole multiset.
std::vector<BigInt> multiplicities(const ChordDiagram& e, const std::vector<ChordDiagram>& targets,
                                   CrossingStrategy strategy = CrossingStrategy::First,
                                   int cap = kDefaultChordCap);

// A(n, k) on v_0..v_{2n+1}: the extra chord {v_0, v_{k+1}} and an n-crossing
// joining the i-th and (i+n)-th of the remaining 2n vertices. The extra chord
// cuts off v_1..v_k, one endpoint of k distinct crossing chords.
ChordDiagram a_diagram(int n, int k);

// Nonintersecting, and every chord joins circularly adjacent vertices.
bool is_necklace(const ChordDiagram& f);

// The m-necklace whose ears are {v_s, v_{s+1}}, {v_{s+2}, v_{s+3}}, ...
// with s = parity mod 2.
ChordDiagram necklace(int m, int parity);

// b+(n,k) = m(A(n,k), N+) with N+ containing the ear v_k v_{k+1};
// b-(n,k) uses the ear v_{k+1} v_{k+2}.
BigInt b_plus(int n, int k, int cap = kDefaultChordCap);
BigInt b_minus(int n, int k, int cap = kDefaultChordCap);

// Both values at once; one expansion serves the two necklaces.
std::pair<BigInt, BigInt> b_plus_minus(int n, int k, int cap = kDefaultChordCap);

// Every perfect matching on 2m vertices.
std::vector<ChordDiagram> all_chord_diagrams(int m);

}  // namespace webperm
