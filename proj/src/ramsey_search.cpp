#include <atomic>
#include <mutex>

#include "rforge/coloring.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace rforge::coloring {

namespace {

constexpr int kMaxSearchVertices = 64;

// Branch state for the edge-color enumeration. Colors are assigned along the
// canonical edge order; delta[(u,v),w] tracks the number of common w-colored
// neighbors of the pair and is maintained incrementally, so a branch dies the
// moment any pair reaches delta >= m. Dead branches cannot hide an avoiding
// coloring: delta only grows as edges are added.
struct SearchState {
  int V, k, m;
  std::vector<std::pair<int, int>> edges;
  std::vector<std::vector<int>> edge_id;  // -1 for intra-part pairs
  std::vector<uint8_t> colors;            // per edge, 0 = unassigned
  std::vector<int> delta;                 // [pair_idx * k + (w-1)]
  uint64_t local_nodes = 0;

  SearchState(int c, int s, int m_, int k_) : k(k_), m(m_) {
    V = c * s;
    edge_id.assign(V, std::vector<int>(V, -1));
    for (int u = 0; u < V; ++u)
      for (int v = u + 1; v < V; ++v)
        if (u / s != v / s) {
          edge_id[u][v] = edge_id[v][u] = static_cast<int>(edges.size());
          edges.emplace_back(u, v);
        }
    colors.assign(edges.size(), 0);
    delta.assign(static_cast<size_t>(V) * V * k, 0);
  }

  int& delta_at(int u, int v, int w) {
    if (u > v) std::swap(u, v);
    return delta[(static_cast<size_t>(u) * V + v) * k + (w - 1)];
  }

  // Assigns edge (x,y) color w. A colored edge (y,z) of the same color makes
  // y a new common w-neighbor of the pair (x,z), and symmetrically with x
  // and y swapped. Returns false (state still applied) when a pair hits m.
  bool apply(int e, int w) {
    const auto [x, y] = edges[e];
    colors[e] = static_cast<uint8_t>(w);
    bool ok = true;
    for (int z = 0; z < V; ++z) {
      if (z == x || z == y) continue;
      const int exz = edge_id[x][z], eyz = edge_id[y][z];
      if (eyz >= 0 && colors[eyz] == w) {
        if (++delta_at(x, z, w) >= m) ok = false;
      }
      if (exz >= 0 && colors[exz] == w) {
        if (++delta_at(y, z, w) >= m) ok = false;
      }
    }
    return ok;
  }

  void undo(int e, int w) {
    const auto [x, y] = edges[e];
    colors[e] = 0;
    for (int z = 0; z < V; ++z) {
      if (z == x || z == y) continue;
      const int exz = edge_id[x][z], eyz = edge_id[y][z];
      if (eyz >= 0 && colors[eyz] == w) --delta_at(x, z, w);
      if (exz >= 0 && colors[exz] == w) --delta_at(y, z, w);
    }
  }
};

struct Budget {
  uint64_t limit;
  std::atomic<uint64_t> used{0};
  std::atomic<bool> blown{false};

  // batched so parallel workers do not fight over the counter; trips the
  // abort flag when the limit is crossed. The budget is a hard cap on total
  // nodes: crossing it is an error even if a branch happened to finish.
  bool charge(uint64_t n) {
    if (used.fetch_add(n, std::memory_order_relaxed) + n > limit)
      blown.store(true, std::memory_order_relaxed);
    return !blown.load(std::memory_order_relaxed);
  }
};

constexpr uint64_t kFlushEvery = 4096;

// depth-first over edges [e, E); colors tried in increasing order, so the
// first complete coloring reached is the lexicographically smallest avoiding
// one within this branch
bool dfs(SearchState& st, int e, Budget& budget) {
  if (e == static_cast<int>(st.edges.size())) return true;
  for (int w = 1; w <= st.k; ++w) {
    if (++st.local_nodes >= kFlushEvery) {
      const bool keep_going = budget.charge(st.local_nodes);
      st.local_nodes = 0;
      if (!keep_going) return false;
    }
    if (st.apply(e, w)) {
      if (dfs(st, e + 1, budget)) return true;
    }
    st.undo(e, w);
  }
  return false;
}

MultipartiteColoring to_coloring(const SearchState& st, int c, int s, int k) {
  MultipartiteColoring col(c, s, k);
  for (size_t e = 0; e < st.edges.size(); ++e)
    col.set_color(st.edges[e].first, st.edges[e].second, st.colors[e]);
  return col;
}

}  // namespace

SearchResult exhaustive_ramsey(int c, int s, int m, int k, const SearchOptions& opt) {
  if (c < 2) fail(errc::invalid_input, "need at least 2 parts");
  if (s < 1) fail(errc::invalid_input, "part size must be >= 1");
  if (m < 1) fail(errc::invalid_input, "target width must be >= 1");
  if (k < 2) fail(errc::invalid_input, "need at least 2 colors");
  if (c * s > kMaxSearchVertices)
    fail(errc::invalid_input, "exhaustive search supports at most 64 vertices");

  Budget budget{opt.node_budget == 0 ? default_budget() : opt.node_budget};
  const int E = c * (c - 1) / 2 * s * s;

#ifdef _OPENMP
  const bool parallel = opt.parallel && E >= 8;
#else
  const bool parallel = false;
#endif

  if (!parallel) {
    // the first edge is pinned to color 1: permuting colors maps avoiding
    // colorings to avoiding colorings, and the lexicographically smallest
    // avoiding coloring starts with color 1
    SearchState st(c, s, m, k);
    st.local_nodes = 1;
    const bool found = st.apply(0, 1) && dfs(st, 1, budget);
    budget.charge(st.local_nodes);
    if (budget.blown.load())
      fail(errc::budget_exceeded,
           "search budget exhausted after " + std::to_string(budget.used.load()) + " nodes");
    if (found)
      return SearchResult{SearchResult::Verdict::avoiding, to_coloring(st, c, s, k),
                          budget.used.load()};
    return SearchResult{SearchResult::Verdict::forced, std::nullopt, budget.used.load()};
  }

#ifdef _OPENMP
  // Split on the colors of edges [1, 1+P). Task p enumerates one prefix with
  // edge 1 in the most significant digit, so increasing p walks prefixes in
  // lexicographic order; the surviving result is the one with the smallest
  // task id, which makes the outcome independent of the schedule.
  int P = 0;
  long long combos = 1;
  while (P < E - 1 && P < 16 && combos * k <= 2048) {
    combos *= k;
    ++P;
  }

  std::atomic<long long> best_id{-1};
  std::mutex best_mutex;
  std::vector<uint8_t> best_colors;

#pragma omp parallel for schedule(dynamic, 1)
  for (long long id = 0; id < combos; ++id) {
    if (budget.blown.load(std::memory_order_relaxed)) continue;
    {
      const long long cur = best_id.load(std::memory_order_relaxed);
      if (cur >= 0 && cur < id) continue;  // a smaller branch already succeeded
    }
    SearchState st(c, s, m, k);
    st.local_nodes = 1;
    bool alive = st.apply(0, 1);
    long long rest = id;
    for (int d = P - 1; d >= 0 && alive; --d) {
      long long div = 1;
      for (int i = 0; i < d; ++i) div *= k;
      const int w = static_cast<int>(rest / div) + 1;
      rest %= div;
      ++st.local_nodes;
      alive = st.apply(1 + (P - 1 - d), w);
    }
    const bool found = alive && dfs(st, 1 + P, budget);
    budget.charge(st.local_nodes);
    if (found) {
      std::lock_guard<std::mutex> lock(best_mutex);
      const long long cur = best_id.load();
      if (cur < 0 || id < cur) {
        best_id.store(id);
        best_colors = st.colors;
      }
    }
  }

  if (budget.blown.load())
    fail(errc::budget_exceeded,
         "search budget exhausted after " + std::to_string(budget.used.load()) + " nodes");
  if (best_id.load() >= 0) {
    SearchState st(c, s, m, k);
    st.colors = best_colors;
    return SearchResult{SearchResult::Verdict::avoiding, to_coloring(st, c, s, k),
                        budget.used.load()};
  }
  return SearchResult{SearchResult::Verdict::forced, std::nullopt, budget.used.load()};
#else
  fail(errc::internal_assertion, "unreachable");
#endif
}

}  // namespace rforge::coloring
