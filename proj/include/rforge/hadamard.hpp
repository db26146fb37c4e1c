#ifndef RFORGE_HADAMARD_HPP
#define RFORGE_HADAMARD_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "rforge/error.hpp"
#include "rforge/gf.hpp"

namespace rforge::hadamard {

// Square +-1 matrix. Immutable after construction; the symmetry flag is
// computed once. Entry access is 0-based, while operations that take row or
// column indices from callers (deletions, pair partitions, permutations) are
// 1-based like the usual matrix notation.
class SignMatrix {
 public:
  SignMatrix(int order, std::vector<int8_t> entries);

  int order() const { return order_; }
  int at(int r, int c) const { return e_[static_cast<size_t>(r) * order_ + c]; }
  bool symmetric() const { return symmetric_; }

  long long row_dot(int i, int j) const;  // 0-based rows

  bool operator==(const SignMatrix&) const = default;

  // Text format: first line the order, then one line per row of '+'/'-'
  // characters, nothing else, final newline mandatory.
  std::string to_text() const;
  static SignMatrix from_text(const std::string& text);

 private:
  int order_;
  std::vector<int8_t> e_;
  bool symmetric_;
};

struct AlphaProfile {
  int alpha;            // max |row_i . row_j| over i != j, 0 for order 1
  long long gram_diag;  // common diagonal of H H^t, equals the order
};

struct PairPartition {
  long long i1, i2, i3, i4;  // column counts for sign patterns ++, --, +-, -+
};

enum class AlphaMode { upper, exact };

AlphaProfile alpha_of(const SignMatrix& h);
bool is_alpha_hadamard(const SignMatrix& h, int alpha, AlphaMode mode);

// order-2^k symmetric Hadamard matrix by the doubling recursion from [1]
SignMatrix sylvester(int k);

// H = I + Q with Q(i,j) = chi(a_i - a_j), for q = 3 mod 4. The result has
// H H^t = (q+1) I - J exactly and off-diagonal Gram maximum 1; it is not
// symmetric (Q changes sign under transpose).
SignMatrix paley_one_hadamard(const gf::FieldSpec& f);

// Kronecker doubling H = Q x [[1,1],[1,-1]] + I x [[1,-1],[-1,-1]] for
// q = 1 mod 4, order 2q. The construction is stated to keep every
// off-diagonal Gram entry within 4 and to satisfy
// H H^t = 2(q+1) I + (J+Q) x [[-2,-4],[4,-2]]; we measure both claims on the
// built matrix and report what actually holds instead of assuming it.
struct PaleyDoubleResult {
  SignMatrix matrix;
  int alpha;                          // measured off-diagonal Gram maximum
  bool symmetric;                     // measured, the stated claim is "not symmetric"
  long long stated_gram_mismatches;   // entries where H H^t differs from the block formula
};
PaleyDoubleResult paley_double(const gf::FieldSpec& f);

// Remove |rows| = |cols| = a rows and columns from a Hadamard matrix;
// the minor has every off-diagonal Gram entry within a. 1-based index sets.
SignMatrix delete_general(const SignMatrix& h, const std::vector<int>& rows,
                          const std::vector<int>& cols);

// Symmetric variant: normalize so row 1 is all ones (negating row j and
// column j together), then delete a symmetric index set chosen along a pivot
// row so that the result is symmetric and hits the Gram bound exactly.
SignMatrix delete_symmetric(const SignMatrix& h, int alpha);

PairPartition pair_partition(const SignMatrix& h, int row_i, int row_j);  // 1-based rows

// Row/column permutation plus row/column sign changes; perms map result
// index -> source index, 1-based. The off-diagonal Gram maximum is invariant.
SignMatrix equiv_transform(const SignMatrix& h, const std::vector<int>& row_perm,
                           const std::vector<int>& col_perm, const std::vector<int>& row_signs,
                           const std::vector<int>& col_signs);

}  // namespace rforge::hadamard

#endif
