#ifndef RFORGE_GF_HPP
#define RFORGE_GF_HPP

#include <cstdint>
#include <vector>

#include "rforge/error.hpp"

namespace rforge::gf {

// Element of GF(p^t), stored as the coefficient vector of a residue
// polynomial: coeffs[j] is the x^j coefficient, each in [0, p-1].
struct FieldElement {
  std::vector<int32_t> coeffs;
  bool operator==(const FieldElement&) const = default;
};

// Arithmetic context for GF(p^t). Construction is deterministic: the modulus
// is the smallest monic irreducible of degree t (non-leading coefficients
// read as a base-p integer), and the element enumeration orders coefficient
// vectors as base-p numerals with coeffs[0] least significant, so a_0 = 0
// and for prime fields a_i = i. Immutable after create(); all member
// functions are const and safe to call concurrently.
class FieldSpec {
 public:
  static FieldSpec create(long long p, int t);

  long long p() const { return p_; }
  int t() const { return t_; }
  long long order() const { return q_; }

  // monic modulus, length t+1, coeffs[0] constant term, coeffs[t] == 1
  const std::vector<int32_t>& irreducible() const { return irr_; }
  const std::vector<FieldElement>& order_list() const { return elems_; }

  long long index_of(const FieldElement& e) const;
  const FieldElement& element(long long idx) const;

  FieldElement zero() const;
  FieldElement one() const;
  bool is_zero(const FieldElement& e) const;

  FieldElement add(const FieldElement& a, const FieldElement& b) const;
  FieldElement sub(const FieldElement& a, const FieldElement& b) const;
  FieldElement neg(const FieldElement& a) const;
  FieldElement mul(const FieldElement& a, const FieldElement& b) const;
  FieldElement pow(const FieldElement& a, long long e) const;

  // Quadratic character: 0 for zero, +1 for nonzero squares, -1 otherwise.
  // Decided by b^((q-1)/2); rejects p = 2 where the +1/-1 split degenerates.
  int quad_char(const FieldElement& b) const;
  int quad_char_at(long long idx) const;

  bool operator==(const FieldSpec&) const = default;

 private:
  FieldSpec() = default;
  void validate_element(const FieldElement& e) const;

  long long p_ = 0;
  long long q_ = 0;
  int t_ = 0;
  std::vector<int32_t> irr_;
  std::vector<FieldElement> elems_;
  std::vector<int8_t> chi_;  // indexed like order_list; empty when p == 2
};

bool is_prime(long long n);
// decompose n = p^t with p prime; returns false if n is not a prime power
bool prime_power(long long n, long long& p, int& t);

}  // namespace rforge::gf

#endif
