#include "rforge/hadamard.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace rforge::hadamard {

namespace {

bool compute_symmetric(int order, const std::vector<int8_t>& e) {
  for (int i = 0; i < order; ++i)
    for (int j = i + 1; j < order; ++j)
      if (e[static_cast<size_t>(i) * order + j] != e[static_cast<size_t>(j) * order + i])
        return false;
  return true;
}

std::vector<int> sorted_unique_1based(std::vector<int> v, int order, const char* what) {
  std::sort(v.begin(), v.end());
  for (size_t i = 0; i < v.size(); ++i) {
    if (v[i] < 1 || v[i] > order) fail(errc::invalid_input, std::string(what) + " index out of range");
    if (i > 0 && v[i] == v[i - 1]) fail(errc::invalid_input, std::string(what) + " index repeated");
  }
  return v;
}

}  // namespace

SignMatrix::SignMatrix(int order, std::vector<int8_t> entries) : order_(order), e_(std::move(entries)) {
  if (order_ < 1) fail(errc::invalid_input, "matrix order must be >= 1");
  if (e_.size() != static_cast<size_t>(order_) * order_)
    fail(errc::invalid_input, "entry count does not match order");
  for (int8_t v : e_)
    if (v != 1 && v != -1) fail(errc::invalid_input, "entries must be +1 or -1");
  symmetric_ = compute_symmetric(order_, e_);
}

long long SignMatrix::row_dot(int i, int j) const {
  const int8_t* a = e_.data() + static_cast<size_t>(i) * order_;
  const int8_t* b = e_.data() + static_cast<size_t>(j) * order_;
  long long s = 0;
  for (int c = 0; c < order_; ++c) s += static_cast<int>(a[c]) * b[c];
  return s;
}

std::string SignMatrix::to_text() const {
  std::string out = std::to_string(order_);
  out += '\n';
  for (int r = 0; r < order_; ++r) {
    for (int c = 0; c < order_; ++c) out += at(r, c) == 1 ? '+' : '-';
    out += '\n';
  }
  return out;
}

SignMatrix SignMatrix::from_text(const std::string& text) {
  if (text.empty() || text.back() != '\n')
    fail(errc::format_error, "sign-matrix text must end with a newline");
  std::istringstream in(text);
  std::string line;
  if (!std::getline(in, line)) fail(errc::format_error, "missing order line");
  size_t pos = 0;
  int order = 0;
  try {
    order = std::stoi(line, &pos);
  } catch (const std::exception&) {
    fail(errc::format_error, "order line is not a number");
  }
  if (pos != line.size() || order < 1) fail(errc::format_error, "bad order line");
  std::vector<int8_t> e;
  e.reserve(static_cast<size_t>(order) * order);
  for (int r = 0; r < order; ++r) {
    if (!std::getline(in, line)) fail(errc::format_error, "missing matrix row");
    if (static_cast<int>(line.size()) != order) fail(errc::format_error, "row has wrong length");
    for (char ch : line) {
      if (ch == '+') e.push_back(1);
      else if (ch == '-') e.push_back(-1);
      else fail(errc::format_error, "row characters must be '+' or '-'");
    }
  }
  if (std::getline(in, line)) fail(errc::format_error, "trailing content after matrix");
  return SignMatrix(order, std::move(e));
}

AlphaProfile alpha_of(const SignMatrix& h) {
  const int z = h.order();
  long long best = 0;
  for (int i = 0; i < z; ++i)
    for (int j = i + 1; j < z; ++j) {
      long long d = h.row_dot(i, j);
      if (d < 0) d = -d;
      if (d > best) best = d;
    }
  if (z >= 2 && (best - z) % 2 != 0)
    fail(errc::internal_assertion, "Gram entry parity differs from order parity");
  return AlphaProfile{static_cast<int>(best), z};
}

bool is_alpha_hadamard(const SignMatrix& h, int alpha, AlphaMode mode) {
  if (alpha < 0 || alpha > h.order()) fail(errc::invalid_input, "alpha out of [0, order]");
  const int measured = alpha_of(h).alpha;
  return mode == AlphaMode::upper ? measured <= alpha : measured == alpha;
}

SignMatrix sylvester(int k) {
  if (k < 0) fail(errc::invalid_input, "sylvester exponent must be >= 0");
  if (k > 13) fail(errc::invalid_input, "sylvester order exceeds supported range");
  int z = 1;
  std::vector<int8_t> e{1};
  for (int step = 0; step < k; ++step) {
    const int nz = 2 * z;
    std::vector<int8_t> ne(static_cast<size_t>(nz) * nz);
    for (int i = 0; i < z; ++i)
      for (int j = 0; j < z; ++j) {
        int8_t v = e[static_cast<size_t>(i) * z + j];
        ne[static_cast<size_t>(i) * nz + j] = v;
        ne[static_cast<size_t>(i) * nz + j + z] = v;
        ne[static_cast<size_t>(i + z) * nz + j] = v;
        ne[static_cast<size_t>(i + z) * nz + j + z] = static_cast<int8_t>(-v);
      }
    z = nz;
    e = std::move(ne);
  }
  return SignMatrix(z, std::move(e));
}

SignMatrix paley_one_hadamard(const gf::FieldSpec& f) {
  const long long q = f.order();
  if (q % 4 != 3)
    fail(errc::wrong_residue, "needs field order 3 mod 4, got " + std::to_string(q));
  const int z = static_cast<int>(q);
  std::vector<int8_t> e(static_cast<size_t>(z) * z);
  const auto& elems = f.order_list();
  for (int i = 0; i < z; ++i)
    for (int j = 0; j < z; ++j) {
      if (i == j) {
        e[static_cast<size_t>(i) * z + j] = 1;  // I contributes the diagonal, chi(0) = 0
      } else {
        e[static_cast<size_t>(i) * z + j] =
            static_cast<int8_t>(f.quad_char(f.sub(elems[i], elems[j])));
      }
    }
  SignMatrix h(z, std::move(e));
  // Gram identity check: diagonal z, off-diagonal -1 everywhere.
  for (int i = 0; i < z; ++i)
    for (int j = i; j < z; ++j) {
      long long d = h.row_dot(i, j);
      if (i == j ? d != z : d != -1)
        fail(errc::internal_assertion, "conference construction lost its Gram identity");
    }
  return h;
}

PaleyDoubleResult paley_double(const gf::FieldSpec& f) {
  const long long q = f.order();
  if (q % 4 != 1)
    fail(errc::wrong_residue, "needs field order 1 mod 4, got " + std::to_string(q));
  const int n = static_cast<int>(q);
  const int z = 2 * n;
  const auto& elems = f.order_list();
  std::vector<int> Q(static_cast<size_t>(n) * n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      Q[static_cast<size_t>(i) * n + j] = i == j ? 0 : f.quad_char(f.sub(elems[i], elems[j]));

  static constexpr int A[2][2] = {{1, 1}, {1, -1}};
  static constexpr int B[2][2] = {{1, -1}, {-1, -1}};
  std::vector<int8_t> e(static_cast<size_t>(z) * z);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int r = 0; r < 2; ++r)
        for (int c = 0; c < 2; ++c) {
          int v = Q[static_cast<size_t>(i) * n + j] * A[r][c] + (i == j ? B[r][c] : 0);
          e[static_cast<size_t>(2 * i + r) * z + (2 * j + c)] = static_cast<int8_t>(v);
        }
  SignMatrix h(z, std::move(e));

  const AlphaProfile prof = alpha_of(h);
  if (prof.alpha > 4)
    fail(errc::internal_assertion, "doubled construction exceeded its stated Gram bound 4");

  // Compare the actual Gram matrix against the stated block form
  // 2(q+1) I + (J+Q) x [[-2,-4],[4,-2]] and count where they disagree.
  static constexpr int D[2][2] = {{-2, -4}, {4, -2}};
  long long mismatches = 0;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int r = 0; r < 2; ++r)
        for (int c = 0; c < 2; ++c) {
          long long actual = h.row_dot(2 * i + r, 2 * j + c);
          long long stated = (Q[static_cast<size_t>(i) * n + j] + 1) * D[r][c] +
                             (2 * i + r == 2 * j + c ? 2LL * (q + 1) : 0);
          if (actual != stated) ++mismatches;
        }
  const bool sym = h.symmetric();
  return PaleyDoubleResult{std::move(h), prof.alpha, sym, mismatches};
}

SignMatrix delete_general(const SignMatrix& h, const std::vector<int>& rows,
                          const std::vector<int>& cols) {
  const int z = h.order();
  if (rows.size() != cols.size())
    fail(errc::invalid_input, "row and column deletion sets must have equal size");
  const int a = static_cast<int>(rows.size());
  if (2 * a > z) fail(errc::deletion_too_large, "can delete at most order/2 rows");
  if (alpha_of(h).alpha != 0) fail(errc::invalid_input, "input is not a Hadamard matrix");
  auto rs = sorted_unique_1based(rows, z, "row");
  auto cs = sorted_unique_1based(cols, z, "column");

  std::vector<int8_t> keep_row(z, 1), keep_col(z, 1);
  for (int r : rs) keep_row[r - 1] = 0;
  for (int c : cs) keep_col[c - 1] = 0;
  std::vector<int8_t> e;
  e.reserve(static_cast<size_t>(z - a) * (z - a));
  for (int i = 0; i < z; ++i) {
    if (!keep_row[i]) continue;
    for (int j = 0; j < z; ++j)
      if (keep_col[j]) e.push_back(static_cast<int8_t>(h.at(i, j)));
  }
  SignMatrix out(z - a, std::move(e));
  if (alpha_of(out).alpha > a)
    fail(errc::internal_assertion, "minor exceeded the deletion Gram bound");
  return out;
}

SignMatrix delete_symmetric(const SignMatrix& h, int alpha) {
  const int z = h.order();
  if (!h.symmetric()) fail(errc::invalid_input, "input must be symmetric");
  if (alpha < 0) fail(errc::invalid_input, "alpha must be >= 0");
  if (2 * alpha > z) fail(errc::deletion_too_large, "can delete at most order/2 indices");
  if (alpha_of(h).alpha != 0) fail(errc::invalid_input, "input is not a Hadamard matrix");

  // Normalize: force row 1 to all ones by negating column j and row j
  // together wherever row 1 carries a -1. This keeps both symmetry and all
  // pairwise orthogonality.
  std::vector<int8_t> e(static_cast<size_t>(z) * z);
  for (int i = 0; i < z; ++i)
    for (int j = 0; j < z; ++j) e[static_cast<size_t>(i) * z + j] = static_cast<int8_t>(h.at(i, j));
  for (int j = 0; j < z; ++j) {
    if (e[j] == -1) {
      for (int r = 0; r < z; ++r) e[static_cast<size_t>(r) * z + j] = static_cast<int8_t>(-e[static_cast<size_t>(r) * z + j]);
      for (int c = 0; c < z; ++c) e[static_cast<size_t>(j) * z + c] = static_cast<int8_t>(-e[static_cast<size_t>(j) * z + c]);
    }
  }

  if (alpha == 0) return SignMatrix(z, std::move(e));

  // Pivot row: the smallest index >= 2 with a +1 diagonal entry. Deleting
  // -1 positions of a row whose own index stays keeps the witness pair
  // (row 1, pivot row) in the minor, whose inner product lands exactly on
  // alpha; deleting the row's own index instead can silently undershoot.
  // Orders >= 3 always have such a row (the trace of a symmetric Hadamard
  // matrix is a multiple of sqrt(order), which rules out an all -1 diagonal
  // below row 1); order 2 falls back to row 2 with a vacuous exactness claim.
  int pivot = 1;
  for (int i = 1; i < z; ++i) {
    if (e[static_cast<size_t>(i) * z + i] == 1) {
      pivot = i;
      break;
    }
  }

  std::vector<int> del;
  for (int j = 0; j < z && static_cast<int>(del.size()) < alpha; ++j)
    if (e[static_cast<size_t>(pivot) * z + j] == -1) del.push_back(j);
  if (static_cast<int>(del.size()) < alpha)
    fail(errc::deletion_too_large, "pivot row has fewer -1 entries than alpha");

  std::vector<int8_t> keep(z, 1);
  for (int j : del) keep[j] = 0;
  std::vector<int8_t> out;
  out.reserve(static_cast<size_t>(z - alpha) * (z - alpha));
  for (int i = 0; i < z; ++i) {
    if (!keep[i]) continue;
    for (int j = 0; j < z; ++j)
      if (keep[j]) out.push_back(e[static_cast<size_t>(i) * z + j]);
  }
  SignMatrix m(z - alpha, std::move(out));
  if (!m.symmetric()) fail(errc::internal_assertion, "symmetric deletion lost symmetry");
  if (m.order() >= 2 && alpha_of(m).alpha != alpha)
    fail(errc::internal_assertion, "symmetric deletion missed the exact Gram maximum");
  return m;
}

PairPartition pair_partition(const SignMatrix& h, int row_i, int row_j) {
  const int z = h.order();
  if (row_i < 1 || row_i > z || row_j < 1 || row_j > z)
    fail(errc::invalid_input, "row index out of range");
  if (row_i == row_j) fail(errc::invalid_input, "rows must be distinct");
  PairPartition p{0, 0, 0, 0};
  const int i = row_i - 1, j = row_j - 1;
  for (int k = 0; k < z; ++k) {
    const bool pi = h.at(i, k) == 1, pj = h.at(j, k) == 1;
    if (pi && pj) ++p.i1;
    else if (!pi && !pj) ++p.i2;
    else if (pi) ++p.i3;
    else ++p.i4;
  }
  return p;
}

SignMatrix equiv_transform(const SignMatrix& h, const std::vector<int>& row_perm,
                           const std::vector<int>& col_perm, const std::vector<int>& row_signs,
                           const std::vector<int>& col_signs) {
  const int z = h.order();
  if (static_cast<int>(row_perm.size()) != z || static_cast<int>(col_perm.size()) != z ||
      static_cast<int>(row_signs.size()) != z || static_cast<int>(col_signs.size()) != z)
    fail(errc::invalid_input, "transform vectors must match the order");
  auto check_perm = [z](const std::vector<int>& p) {
    std::set<int> seen(p.begin(), p.end());
    if (static_cast<int>(seen.size()) != z || *seen.begin() != 1 || *seen.rbegin() != z)
      fail(errc::invalid_input, "not a permutation of 1..order");
  };
  check_perm(row_perm);
  check_perm(col_perm);
  for (int s : row_signs)
    if (s != 1 && s != -1) fail(errc::invalid_input, "row signs must be +-1");
  for (int s : col_signs)
    if (s != 1 && s != -1) fail(errc::invalid_input, "column signs must be +-1");

  std::vector<int8_t> e(static_cast<size_t>(z) * z);
  for (int i = 0; i < z; ++i)
    for (int j = 0; j < z; ++j)
      e[static_cast<size_t>(i) * z + j] =
          static_cast<int8_t>(row_signs[i] * col_signs[j] * h.at(row_perm[i] - 1, col_perm[j] - 1));
  return SignMatrix(z, std::move(e));
}

}  // namespace rforge::hadamard
