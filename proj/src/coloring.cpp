#include "rforge/coloring.hpp"

#include <algorithm>
#include <cstdlib>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace rforge::coloring {

namespace {

constexpr int kMaxVertices = 1 << 12;

struct BestDelta {
  long long value = -1;
  int v1 = -1, v2 = -1, w = 0;
  // larger delta wins; ties break to the smallest (v1, v2, w)
  bool better_than(const BestDelta& o) const {
    if (value != o.value) return value > o.value;
    if (v1 != o.v1) return v1 < o.v1;
    if (v2 != o.v2) return v2 < o.v2;
    return w < o.w;
  }
};

BestDelta scan_pair(const MultipartiteColoring& col, int u, int v) {
  BestDelta best;
  for (int w = 1; w <= col.num_colors(); ++w) {
    const long long d = and_count(col.color_row(u, w), col.color_row(v, w));
    BestDelta cand{d, u, v, w};
    if (cand.better_than(best)) best = cand;
  }
  return best;
}

AvoidanceCertificate make_certificate(const BestDelta& best, int m) {
  return AvoidanceCertificate{m, best.value, DeltaWitness{best.v1, best.v2, best.w, best.value}};
}

}  // namespace

MultipartiteColoring::MultipartiteColoring(int parts, int part_size, int num_colors)
    : c_(parts), s_(part_size), k_(num_colors) {
  if (c_ < 2) fail(errc::invalid_input, "need at least 2 parts");
  if (s_ < 1) fail(errc::invalid_input, "part size must be >= 1");
  if (k_ < 2) fail(errc::invalid_input, "need at least 2 colors");
  if (k_ > 255) fail(errc::invalid_input, "too many colors");
  const long long v = static_cast<long long>(c_) * s_;
  if (v > kMaxVertices) fail(errc::invalid_input, "vertex count out of range");
  colors_.assign(static_cast<size_t>(v) * (v - 1) / 2, 0);
  rows_.assign(k_, std::vector<Bitset>(v, Bitset(static_cast<int>(v))));
}

int MultipartiteColoring::flat_id(int part1, int slot1) const {
  if (part1 < 1 || part1 > c_ || slot1 < 1 || slot1 > s_)
    fail(errc::invalid_input, "part/slot out of range");
  return (part1 - 1) * s_ + (slot1 - 1);
}

std::pair<int, int> MultipartiteColoring::part_slot(int v) const {
  if (v < 0 || v >= vertices()) fail(errc::invalid_input, "vertex out of range");
  return {v / s_ + 1, v % s_ + 1};
}

size_t MultipartiteColoring::pair_index(int u, int v) const {
  return static_cast<size_t>(v) * (v - 1) / 2 + u;
}

int MultipartiteColoring::color(int u, int v) const {
  if (u == v || u < 0 || v < 0 || u >= vertices() || v >= vertices())
    fail(errc::invalid_input, "bad vertex pair");
  if (!cross(u, v)) return 0;
  if (u > v) std::swap(u, v);
  return colors_[pair_index(u, v)];
}

void MultipartiteColoring::set_color(int u, int v, int w) {
  if (u == v || u < 0 || v < 0 || u >= vertices() || v >= vertices())
    fail(errc::invalid_input, "bad vertex pair");
  if (!cross(u, v)) fail(errc::invalid_input, "pairs inside a part carry no color");
  if (w < 1 || w > k_) fail(errc::invalid_input, "color out of range");
  if (u > v) std::swap(u, v);
  uint8_t& slot = colors_[pair_index(u, v)];
  if (slot != 0) {
    rows_[slot - 1][u].reset(v);
    rows_[slot - 1][v].reset(u);
  }
  slot = static_cast<uint8_t>(w);
  rows_[w - 1][u].set(v);
  rows_[w - 1][v].set(u);
}

bool MultipartiteColoring::fully_colored() const {
  for (int u = 0; u < vertices(); ++u)
    for (int v = u + 1; v < vertices(); ++v)
      if (cross(u, v) && colors_[pair_index(u, v)] == 0) return false;
  return true;
}

long long MultipartiteColoring::colored_pairs() const {
  long long n = 0;
  for (uint8_t w : colors_)
    if (w != 0) ++n;
  return n;
}

std::vector<std::pair<int, int>> MultipartiteColoring::canonical_edges() const {
  std::vector<std::pair<int, int>> edges;
  edges.reserve(colors_.size());
  for (int u = 0; u < vertices(); ++u)
    for (int v = u + 1; v < vertices(); ++v)
      if (cross(u, v)) edges.emplace_back(u, v);
  return edges;
}

MultipartiteColoring build_psi(const srg::Graph& g, const hadamard::SignMatrix& h) {
  if (!h.symmetric())
    fail(errc::asymmetric_matrix, "the pair coloring needs a symmetric sign matrix");
  if (h.order() < 2) fail(errc::invalid_input, "matrix order must be >= 2");
  const srg::SrgCheck chk = srg_params(g);
  if (!chk.is_srg)
    fail(errc::invalid_input, std::string("graph is not strongly regular (") + chk.reason + ")");

  const int n = g.n();
  const int z = h.order();
  MultipartiteColoring col(n, z, 2);
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b) {
      const bool edge = g.adjacent(a, b);
      for (int i = 0; i < z; ++i)
        for (int j = 0; j < z; ++j) {
          const int sign = edge ? h.at(i, j) : -h.at(i, j);
          col.set_color(a * z + i, b * z + j, sign == 1 ? 1 : 2);
        }
    }
  return col;
}

long long delta(const MultipartiteColoring& col, int v1, int v2, int w) {
  if (v1 == v2) fail(errc::invalid_input, "vertices must be distinct");
  if (w < 1 || w > col.num_colors()) fail(errc::invalid_input, "color out of range");
  if (v1 < 0 || v2 < 0 || v1 >= col.vertices() || v2 >= col.vertices())
    fail(errc::invalid_input, "vertex out of range");
  return and_count(col.color_row(v1, w), col.color_row(v2, w));
}

AvoidanceCertificate certify_avoidance_serial(const MultipartiteColoring& col, int m) {
  if (m < 1) fail(errc::invalid_input, "target width must be >= 1");
  const int v = col.vertices();
  BestDelta best;
  for (int a = 0; a < v; ++a)
    for (int b = a + 1; b < v; ++b) {
      BestDelta cand = scan_pair(col, a, b);
      if (cand.better_than(best)) best = cand;
    }
  return make_certificate(best, m);
}

AvoidanceCertificate certify_avoidance(const MultipartiteColoring& col, int m) {
  if (m < 1) fail(errc::invalid_input, "target width must be >= 1");
  const int v = col.vertices();
  BestDelta best;
#ifdef _OPENMP
#pragma omp parallel
  {
    BestDelta local;
#pragma omp for schedule(dynamic, 4) nowait
    for (int a = 0; a < v; ++a) {
      for (int b = a + 1; b < v; ++b) {
        BestDelta cand = scan_pair(col, a, b);
        if (cand.better_than(local)) local = cand;
      }
    }
#pragma omp critical(rforge_delta_merge)
    {
      if (local.better_than(best)) best = local;
    }
  }
#else
  for (int a = 0; a < v; ++a)
    for (int b = a + 1; b < v; ++b) {
      BestDelta cand = scan_pair(col, a, b);
      if (cand.better_than(best)) best = cand;
    }
#endif
  return make_certificate(best, m);
}

namespace {

struct BicliqueSearch {
  const MultipartiteColoring& col;
  int a, b, w;
  uint64_t budget;
  uint64_t nodes = 0;
  std::vector<int> chosen;

  std::optional<BicliqueWitness> extend(int from, const Bitset& cand) {
    if (++nodes > budget) fail(errc::budget_exceeded, "biclique search exceeded its node budget");
    if (static_cast<int>(chosen.size()) == a) {
      if (cand.count() < b) return std::nullopt;
      BicliqueWitness wit;
      wit.side_a = chosen;
      for (int v = cand.next(0); v >= 0 && static_cast<int>(wit.side_b.size()) < b;
           v = cand.next(v + 1))
        wit.side_b.push_back(v);
      return wit;
    }
    for (int v = from; v < col.vertices(); ++v) {
      Bitset next = chosen.empty() ? col.color_row(v, w) : (cand & col.color_row(v, w));
      if (next.count() < b) {
        if (++nodes > budget) fail(errc::budget_exceeded, "biclique search exceeded its node budget");
        continue;
      }
      chosen.push_back(v);
      if (auto res = extend(v + 1, next)) return res;
      chosen.pop_back();
    }
    return std::nullopt;
  }
};

}  // namespace

std::optional<BicliqueWitness> find_mono_biclique(const MultipartiteColoring& col, int a, int b,
                                                  int w, uint64_t node_budget) {
  if (a < 1 || b < 1) fail(errc::invalid_input, "biclique sides must be >= 1");
  if (w < 1 || w > col.num_colors()) fail(errc::invalid_input, "color out of range");
  BicliqueSearch search{col, a, b, w, node_budget == 0 ? default_budget() : node_budget, 0, {}};
  return search.extend(0, Bitset(col.vertices()));
}

uint64_t default_budget() {
  if (const char* env = std::getenv("RAMSEY_FORGE_BUDGET")) {
    char* end = nullptr;
    const unsigned long long v = std::strtoull(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) return v;
    fail(errc::invalid_input, "RAMSEY_FORGE_BUDGET must be a positive integer");
  }
  return uint64_t{1} << 26;
}

}  // namespace rforge::coloring
