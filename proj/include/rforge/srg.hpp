#ifndef RFORGE_SRG_HPP
#define RFORGE_SRG_HPP

#include <string>
#include <utility>
#include <vector>

#include "rforge/bitset.hpp"
#include "rforge/error.hpp"
#include "rforge/gf.hpp"
#include "rforge/rational.hpp"

namespace rforge::srg {

// Simple undirected graph on bit rows; no loops, 0-based vertices.
class Graph {
 public:
  explicit Graph(int n);

  int n() const { return n_; }
  void add_edge(int u, int v);
  bool adjacent(int u, int v) const { return rows_[u].test(v); }
  int degree(int v) const { return static_cast<int>(rows_[v].count()); }
  long long common_neighbors(int u, int v) const { return and_count(rows_[u], rows_[v]); }
  const Bitset& row(int v) const { return rows_[v]; }

  Graph complement() const;
  bool is_complete() const;
  bool is_empty() const;

  bool operator==(const Graph&) const = default;

  // Text format: first line the vertex count, then "u v" per edge with
  // 1-based endpoints, u < v, sorted, final newline mandatory.
  std::string to_text() const;
  static Graph from_text(const std::string& text);

 private:
  int n_;
  std::vector<Bitset> rows_;
};

struct SrgParams {
  long long n, k, lambda, mu;
  bool operator==(const SrgParams&) const = default;
};

// checks (n-k-1) mu = k (k-lambda-1) plus the basic ranges
void validate(const SrgParams& p);

struct SrgCheck {
  bool is_srg;
  SrgParams params;               // meaningful when is_srg
  std::pair<int, int> witness;    // 0-based counterexample pair otherwise
  std::string reason;             // "not-regular" / "lambda-mismatch" / "mu-mismatch"
};

// Exhaustive pair verification of strong regularity: every adjacent pair
// must share exactly lambda neighbors and every non-adjacent pair exactly
// mu, with the reference values read off the lexicographically first pairs.
// The default entry point runs the pair scan in parallel; the serial scan is
// the reference implementation and must return identical results.
SrgCheck srg_params(const Graph& g);
SrgCheck srg_params_serial(const Graph& g);

// Vertices are field elements in enumeration order, adjacent when their
// difference is a nonzero square; needs q = 1 mod 4 so the relation is
// symmetric. Passes srg_params with (q, (q-1)/2, (q-5)/4, (q-1)/4).
Graph paley_graph(const gf::FieldSpec& f);

enum class NamedKind { rook, triangular };

// rook: cells of an n x n grid, adjacent in the same row or column,
//       (n^2, 2n-2, n-2, 2), n >= 2.
// triangular: 2-subsets of {1..n} in lexicographic order, adjacent when
//       intersecting, (n(n-1)/2, 2(n-2), n-2, 4), n >= 4.
Graph named_graph(NamedKind kind, int n);

SrgParams complement_params(const SrgParams& p);

struct NeighborhoodPartition {
  long long g1, g2, g3, g4;  // both adjacent / neither / only b / only a
};
NeighborhoodPartition neighborhood_partition(const Graph& g, int a, int b);  // 0-based

// max of {k/2, lambda, mu, (n-k-1)/2, n-2-2k+mu, n-2k+lambda}; always an
// integer for parameters satisfying the srg identity, asserted rather than
// rounded.
long long theta(const SrgParams& p);
Rat theta_ratio(const SrgParams& p);

}  // namespace rforge::srg

#endif
