#include "rforge/srg.hpp"

#include <algorithm>
#include <sstream>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace rforge::srg {

namespace {

constexpr int kMaxVertices = 1 << 14;

struct Violation {
  int u = -1, v = -1;
  const char* reason = nullptr;
  bool better_than(const Violation& o) const {  // lexicographically smaller pair wins
    if (o.u < 0) return u >= 0;
    if (u < 0) return false;
    return u < o.u || (u == o.u && v < o.v);
  }
};

// Reference lambda and mu come from the lexicographically first adjacent and
// non-adjacent pairs, so serial and parallel scans agree bit for bit.
bool reference_counts(const Graph& g, long long& lambda, long long& mu) {
  const int n = g.n();
  bool have_l = false, have_m = false;
  for (int u = 0; u < n && !(have_l && have_m); ++u)
    for (int v = u + 1; v < n && !(have_l && have_m); ++v) {
      if (g.adjacent(u, v) && !have_l) {
        lambda = g.common_neighbors(u, v);
        have_l = true;
      } else if (!g.adjacent(u, v) && !have_m) {
        mu = g.common_neighbors(u, v);
        have_m = true;
      }
    }
  return have_l && have_m;
}

void check_preconditions(const Graph& g) {
  if (g.n() < 4) fail(errc::invalid_input, "need at least 4 vertices");
  if (g.is_complete() || g.is_empty())
    fail(errc::degenerate_input, "complete and empty graphs have no srg parameters");
}

SrgCheck scan_serial(const Graph& g, long long lambda, long long mu, long long k) {
  const int n = g.n();
  for (int u = 0; u < n; ++u)
    if (g.degree(u) != k) return SrgCheck{false, {}, {0, u}, "not-regular"};
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      const long long cn = g.common_neighbors(u, v);
      if (g.adjacent(u, v)) {
        if (cn != lambda) return SrgCheck{false, {}, {u, v}, "lambda-mismatch"};
      } else {
        if (cn != mu) return SrgCheck{false, {}, {u, v}, "mu-mismatch"};
      }
    }
  }
  return SrgCheck{true, SrgParams{n, k, lambda, mu}, {-1, -1}, ""};
}

SrgCheck scan_parallel(const Graph& g, long long lambda, long long mu, long long k) {
  const int n = g.n();
  for (int u = 0; u < n; ++u)
    if (g.degree(u) != k) return SrgCheck{false, {}, {0, u}, "not-regular"};

  Violation best;
#ifdef _OPENMP
#pragma omp parallel
  {
    Violation local;
#pragma omp for schedule(dynamic, 8) nowait
    for (int u = 0; u < n; ++u) {
      for (int v = u + 1; v < n; ++v) {
        const long long cn = g.common_neighbors(u, v);
        const bool adj = g.adjacent(u, v);
        if (cn != (adj ? lambda : mu)) {
          Violation cand{u, v, adj ? "lambda-mismatch" : "mu-mismatch"};
          if (cand.better_than(local)) local = cand;
        }
      }
    }
#pragma omp critical(rforge_srg_merge)
    {
      if (local.better_than(best)) best = local;
    }
  }
#else
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) {
      const long long cn = g.common_neighbors(u, v);
      const bool adj = g.adjacent(u, v);
      if (cn != (adj ? lambda : mu)) {
        Violation cand{u, v, adj ? "lambda-mismatch" : "mu-mismatch"};
        if (cand.better_than(best)) best = cand;
      }
    }
#endif
  if (best.u >= 0) return SrgCheck{false, {}, {best.u, best.v}, best.reason};
  return SrgCheck{true, SrgParams{n, k, lambda, mu}, {-1, -1}, ""};
}

}  // namespace

Graph::Graph(int n) : n_(n) {
  if (n < 1 || n > kMaxVertices) fail(errc::invalid_input, "vertex count out of range");
  rows_.assign(n, Bitset(n));
}

void Graph::add_edge(int u, int v) {
  if (u < 0 || v < 0 || u >= n_ || v >= n_) fail(errc::invalid_input, "vertex out of range");
  if (u == v) fail(errc::invalid_input, "loops are not allowed");
  rows_[u].set(v);
  rows_[v].set(u);
}

Graph Graph::complement() const {
  Graph c(n_);
  for (int u = 0; u < n_; ++u)
    for (int v = u + 1; v < n_; ++v)
      if (!adjacent(u, v)) c.add_edge(u, v);
  return c;
}

bool Graph::is_complete() const {
  for (int v = 0; v < n_; ++v)
    if (degree(v) != n_ - 1) return false;
  return true;
}

bool Graph::is_empty() const {
  for (int v = 0; v < n_; ++v)
    if (degree(v) != 0) return false;
  return true;
}

std::string Graph::to_text() const {
  std::string out = std::to_string(n_);
  out += '\n';
  for (int u = 0; u < n_; ++u)
    for (int v = u + 1; v < n_; ++v)
      if (adjacent(u, v)) {
        out += std::to_string(u + 1);
        out += ' ';
        out += std::to_string(v + 1);
        out += '\n';
      }
  return out;
}

Graph Graph::from_text(const std::string& text) {
  if (text.empty() || text.back() != '\n') fail(errc::format_error, "graph text must end with a newline");
  std::istringstream in(text);
  std::string line;
  if (!std::getline(in, line)) fail(errc::format_error, "missing vertex-count line");
  size_t pos = 0;
  int n = 0;
  try {
    n = std::stoi(line, &pos);
  } catch (const std::exception&) {
    fail(errc::format_error, "vertex count is not a number");
  }
  if (pos != line.size() || n < 1) fail(errc::format_error, "bad vertex-count line");
  Graph g(n);
  std::pair<int, int> prev{0, 0};
  while (std::getline(in, line)) {
    std::istringstream ls(line);
    int u = 0, v = 0;
    char extra;
    if (!(ls >> u >> v) || (ls >> extra)) fail(errc::format_error, "bad edge line: " + line);
    if (u < 1 || v < 1 || u > n || v > n || u >= v)
      fail(errc::format_error, "edge endpoints must satisfy 1 <= u < v <= n");
    if (std::pair{u, v} <= prev) fail(errc::format_error, "edges must be sorted and unique");
    prev = {u, v};
    g.add_edge(u - 1, v - 1);
  }
  return g;
}

void validate(const SrgParams& p) {
  if (p.n < 4) fail(errc::invalid_input, "srg parameters need n >= 4");
  if (!(0 <= p.lambda && p.lambda < p.k && p.k < p.n))
    fail(errc::invalid_input, "srg parameters need 0 <= lambda < k < n");
  if (!(0 <= p.mu && p.mu <= p.k)) fail(errc::invalid_input, "srg parameters need 0 <= mu <= k");
  if ((p.n - p.k - 1) * p.mu != p.k * (p.k - p.lambda - 1))
    fail(errc::invalid_input, "srg identity (n-k-1)mu = k(k-lambda-1) violated");
}

SrgCheck srg_params(const Graph& g) {
  check_preconditions(g);
  long long lambda = 0, mu = 0;
  reference_counts(g, lambda, mu);
  return scan_parallel(g, lambda, mu, g.degree(0));
}

SrgCheck srg_params_serial(const Graph& g) {
  check_preconditions(g);
  long long lambda = 0, mu = 0;
  reference_counts(g, lambda, mu);
  return scan_serial(g, lambda, mu, g.degree(0));
}

Graph paley_graph(const gf::FieldSpec& f) {
  const long long q = f.order();
  if (q % 4 != 1)
    fail(errc::wrong_residue, "needs field order 1 mod 4, got " + std::to_string(q));
  const int n = static_cast<int>(q);
  const auto& elems = f.order_list();
  Graph g(n);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (f.quad_char(f.sub(elems[i], elems[j])) == 1) g.add_edge(i, j);
  return g;
}

Graph named_graph(NamedKind kind, int n) {
  if (kind == NamedKind::rook) {
    if (n < 2) fail(errc::invalid_input, "rook graph needs n >= 2");
    Graph g(n * n);  // cell (r, c) -> r*n + c
    for (int a = 0; a < n * n; ++a)
      for (int b = a + 1; b < n * n; ++b)
        if (a / n == b / n || a % n == b % n) g.add_edge(a, b);
    return g;
  }
  if (n < 4) fail(errc::invalid_input, "triangular graph needs n >= 4");
  std::vector<std::pair<int, int>> pairs;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) pairs.emplace_back(i, j);
  Graph g(static_cast<int>(pairs.size()));
  for (size_t a = 0; a < pairs.size(); ++a)
    for (size_t b = a + 1; b < pairs.size(); ++b) {
      const auto& [x1, y1] = pairs[a];
      const auto& [x2, y2] = pairs[b];
      if (x1 == x2 || x1 == y2 || y1 == x2 || y1 == y2)
        g.add_edge(static_cast<int>(a), static_cast<int>(b));
    }
  return g;
}

SrgParams complement_params(const SrgParams& p) {
  validate(p);
  return SrgParams{p.n, p.n - p.k - 1, p.n - 2 - 2 * p.k + p.mu, p.n - 2 * p.k + p.lambda};
}

NeighborhoodPartition neighborhood_partition(const Graph& g, int a, int b) {
  if (a == b) fail(errc::invalid_input, "vertices must be distinct");
  if (a < 0 || b < 0 || a >= g.n() || b >= g.n()) fail(errc::invalid_input, "vertex out of range");
  NeighborhoodPartition p{0, 0, 0, 0};
  for (int c = 0; c < g.n(); ++c) {
    if (c == a || c == b) continue;
    const bool ac = g.adjacent(a, c), bc = g.adjacent(b, c);
    if (ac && bc) ++p.g1;
    else if (!ac && !bc) ++p.g2;
    else if (bc) ++p.g3;
    else ++p.g4;
  }
  return p;
}

long long theta(const SrgParams& p) {
  validate(p);
  // doubled so the two halves stay integral until the final division
  const long long doubled = std::max({p.k, 2 * p.lambda, 2 * p.mu, p.n - p.k - 1,
                                      2 * (p.n - 2 - 2 * p.k + p.mu), 2 * (p.n - 2 * p.k + p.lambda)});
  if (doubled % 2 != 0)
    fail(errc::internal_assertion,
         "theta came out non-integral for (" + std::to_string(p.n) + "," + std::to_string(p.k) +
             "," + std::to_string(p.lambda) + "," + std::to_string(p.mu) + ")");
  return doubled / 2;
}

Rat theta_ratio(const SrgParams& p) { return Rat(theta(p), p.n); }

}  // namespace rforge::srg
