#ifndef RFORGE_COLORING_HPP
#define RFORGE_COLORING_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "rforge/bitset.hpp"
#include "rforge/error.hpp"
#include "rforge/hadamard.hpp"
#include "rforge/srg.hpp"

namespace rforge::coloring {

// Edge coloring of the complete multipartite graph K_{c x s}. Vertices are
// (part a, slot i) with 1-based labels, flattened row-major to 0-based ids
// a*s + i. Only cross-part pairs carry a color (1..k); intra-part pairs are
// non-edges and report color 0. Per color and vertex, the set of same-color
// neighbors is kept as a bit row so pair counting is an AND + popcount.
class MultipartiteColoring {
 public:
  MultipartiteColoring(int parts, int part_size, int num_colors);

  int parts() const { return c_; }
  int part_size() const { return s_; }
  int num_colors() const { return k_; }
  int vertices() const { return c_ * s_; }
  int part_of(int v) const { return v / s_; }
  int flat_id(int part1, int slot1) const;          // 1-based pair -> 0-based id
  std::pair<int, int> part_slot(int v) const;       // 0-based id -> 1-based pair
  bool cross(int u, int v) const { return part_of(u) != part_of(v); }

  int color(int u, int v) const;
  void set_color(int u, int v, int w);
  bool fully_colored() const;
  long long colored_pairs() const;

  const Bitset& color_row(int v, int w) const { return rows_[w - 1][v]; }

  // cross-part pairs (u, v), u < v, in increasing (u, v) order; this is the
  // canonical edge order used by certificates and the exhaustive search
  std::vector<std::pair<int, int>> canonical_edges() const;

  bool operator==(const MultipartiteColoring&) const = default;

 private:
  size_t pair_index(int u, int v) const;  // u < v

  int c_, s_, k_;
  std::vector<uint8_t> colors_;            // triangular, 0 = uncolored/intra-part
  std::vector<std::vector<Bitset>> rows_;  // rows_[w-1][v]
};

// The two-coloring of K_{n x zeta} driven by a strongly regular graph and a
// symmetric sign matrix: the pair {(a,i),(b,j)} takes the sign h(i,j) when
// ab is an edge and -h(i,j) otherwise; +1 is color 1, -1 is color 2.
// Symmetry of the matrix is what makes the coloring well defined.
MultipartiteColoring build_psi(const srg::Graph& g, const hadamard::SignMatrix& h);

// number of vertices joined to both v1 and v2 by color-w edges
long long delta(const MultipartiteColoring& col, int v1, int v2, int w);

struct DeltaWitness {
  int v1 = -1, v2 = -1, w = 0;
  long long value = -1;
};

// verdict == avoided exactly when max_delta <= target_m - 1; a monochromatic
// K_{2,m} exists exactly when some pair reaches delta >= m, so the scan is a
// complete decision procedure, not a heuristic
struct AvoidanceCertificate {
  int target_m;
  long long max_delta;
  DeltaWitness witness;  // smallest (v1, v2, w) attaining max_delta
  bool avoided() const { return max_delta <= target_m - 1; }
};

// Full scan over vertex pairs and colors. The default runs the pair loop
// under OpenMP; the serial variant is the reference the tests compare
// against. Both return the same witness: ties break toward the
// lexicographically smallest (v1, v2, w).
AvoidanceCertificate certify_avoidance(const MultipartiteColoring& col, int m);
AvoidanceCertificate certify_avoidance_serial(const MultipartiteColoring& col, int m);

struct BicliqueWitness {
  std::vector<int> side_a, side_b;  // disjoint vertex sets, all cross pairs colored w
};

// Exhaustive search for a monochromatic K_{a,b} in color w; returns the
// lexicographically first witness or nothing. Node budget guards runaway
// instances and overruns raise budget-exceeded instead of returning a guess.
std::optional<BicliqueWitness> find_mono_biclique(const MultipartiteColoring& col, int a, int b,
                                                  int w, uint64_t node_budget);

struct SearchOptions {
  uint64_t node_budget;  // 0 = use default_budget()
  bool parallel = true;
  SearchOptions() : node_budget(0) {}
};

struct SearchResult {
  enum class Verdict { avoiding, forced };
  Verdict verdict;
  std::optional<MultipartiteColoring> coloring;  // set when avoiding
  uint64_t nodes_visited;
};

// Decide whether every k-coloring of K_{c x s} contains a monochromatic
// K_{2,m}: runs a depth-first enumeration over edge colors in canonical
// order with the first edge pinned to color 1 (color swaps are symmetries)
// and a branch cut as soon as any pair already has m common same-color
// neighbors. Returns the lexicographically smallest avoiding coloring if one
// exists, independent of thread count.
SearchResult exhaustive_ramsey(int c, int s, int m, int k, const SearchOptions& opt = {});

// 2^26 unless RAMSEY_FORGE_BUDGET is set
uint64_t default_budget();

}  // namespace rforge::coloring

#endif
