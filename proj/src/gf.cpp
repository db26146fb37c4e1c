#include "rforge/gf.hpp"

#include <algorithm>

namespace rforge::gf {

namespace {

constexpr long long kMaxOrder = 1 << 20;

// dense polynomial helpers over GF(p), coefficient 0 first, no implied degree
using Poly = std::vector<int32_t>;

Poly trim(Poly a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
  return a;
}

long long mod_pow(long long b, long long e, long long m) {
  long long r = 1 % m;
  b %= m;
  while (e > 0) {
    if (e & 1) r = r * b % m;
    b = b * b % m;
    e >>= 1;
  }
  return r;
}

long long mod_inv(long long a, long long p) { return mod_pow(a, p - 2, p); }

// remainder of a by monic-or-not divisor b, both over GF(p)
Poly poly_rem(Poly a, const Poly& b, long long p) {
  a = trim(std::move(a));
  Poly d = trim(b);
  long long lead_inv = mod_inv(d.back(), p);
  while (a.size() >= d.size() && !a.empty()) {
    long long c = a.back() * lead_inv % p;
    size_t shift = a.size() - d.size();
    for (size_t i = 0; i < d.size(); ++i)
      a[shift + i] = static_cast<int32_t>(((a[shift + i] - c * d[i]) % p + p) % p);
    a = trim(std::move(a));
  }
  return a;
}

// Irreducibility by trial division against every monic polynomial of degree
// 1..t/2; at these field sizes exhaustion is cheaper than being clever.
bool poly_irreducible(const Poly& f, long long p, int t) {
  for (int d = 1; d <= t / 2; ++d) {
    long long count = 1;
    for (int i = 0; i < d; ++i) count *= p;
    for (long long v = 0; v < count; ++v) {
      Poly g(d + 1, 0);
      long long rest = v;
      for (int i = 0; i < d; ++i) {
        g[i] = static_cast<int32_t>(rest % p);
        rest /= p;
      }
      g[d] = 1;
      if (poly_rem(f, g, p).empty()) return false;
    }
  }
  return true;
}

}  // namespace

bool is_prime(long long n) {
  if (n < 2) return false;
  for (long long d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

bool prime_power(long long n, long long& p, int& t) {
  if (n < 2) return false;
  for (long long d = 2; d * d <= n; ++d) {
    if (n % d == 0) {
      long long m = n;
      int e = 0;
      while (m % d == 0) {
        m /= d;
        ++e;
      }
      if (m != 1) return false;
      p = d;
      t = e;
      return true;
    }
  }
  p = n;
  t = 1;
  return true;
}

FieldSpec FieldSpec::create(long long p, int t) {
  if (!is_prime(p)) fail(errc::invalid_input, "p must be prime, got " + std::to_string(p));
  if (t < 1) fail(errc::invalid_input, "extension degree must be >= 1");

  long long q = 1;
  for (int i = 0; i < t; ++i) {
    q *= p;
    if (q > kMaxOrder) fail(errc::invalid_input, "field order exceeds supported range");
  }

  FieldSpec f;
  f.p_ = p;
  f.t_ = t;
  f.q_ = q;

  if (t == 1) {
    f.irr_ = {0, 1};  // x itself; reduction is plain mod p
  } else {
    long long count = q;  // p^t candidates for the non-leading coefficients
    bool found = false;
    for (long long v = 0; v < count && !found; ++v) {
      Poly cand(t + 1, 0);
      long long rest = v;
      for (int i = 0; i < t; ++i) {
        cand[i] = static_cast<int32_t>(rest % p);
        rest /= p;
      }
      cand[t] = 1;
      if (poly_irreducible(cand, p, t)) {
        f.irr_ = cand;
        found = true;
      }
    }
    if (!found) fail(errc::internal_assertion, "no irreducible polynomial found");
  }

  f.elems_.resize(q);
  for (long long i = 0; i < q; ++i) {
    FieldElement e;
    e.coeffs.resize(t);
    long long rest = i;
    for (int j = 0; j < t; ++j) {
      e.coeffs[j] = static_cast<int32_t>(rest % p);
      rest /= p;
    }
    f.elems_[i] = std::move(e);
  }

  if (p != 2) {
    f.chi_.resize(q);
    for (long long i = 0; i < q; ++i) {
      const FieldElement& b = f.elems_[i];
      if (f.is_zero(b)) {
        f.chi_[i] = 0;
        continue;
      }
      FieldElement r = f.pow(b, (q - 1) / 2);
      if (r == f.one()) {
        f.chi_[i] = 1;
      } else if (r == f.neg(f.one())) {
        f.chi_[i] = -1;
      } else {
        fail(errc::internal_assertion, "character power not +-1");
      }
    }
  }
  return f;
}

void FieldSpec::validate_element(const FieldElement& e) const {
  if (static_cast<int>(e.coeffs.size()) != t_)
    fail(errc::invalid_input, "element has wrong coefficient count");
  for (int32_t c : e.coeffs)
    if (c < 0 || c >= p_) fail(errc::invalid_input, "element coefficient out of range");
}

long long FieldSpec::index_of(const FieldElement& e) const {
  validate_element(e);
  long long idx = 0;
  for (int j = t_ - 1; j >= 0; --j) idx = idx * p_ + e.coeffs[j];
  return idx;
}

const FieldElement& FieldSpec::element(long long idx) const {
  if (idx < 0 || idx >= q_) fail(errc::invalid_input, "element index out of range");
  return elems_[idx];
}

FieldElement FieldSpec::zero() const { return elems_[0]; }

FieldElement FieldSpec::one() const {
  FieldElement e;
  e.coeffs.assign(t_, 0);
  e.coeffs[0] = 1;
  return e;
}

bool FieldSpec::is_zero(const FieldElement& e) const {
  return std::all_of(e.coeffs.begin(), e.coeffs.end(), [](int32_t c) { return c == 0; });
}

FieldElement FieldSpec::add(const FieldElement& a, const FieldElement& b) const {
  validate_element(a);
  validate_element(b);
  FieldElement r;
  r.coeffs.resize(t_);
  for (int j = 0; j < t_; ++j) r.coeffs[j] = static_cast<int32_t>((a.coeffs[j] + b.coeffs[j]) % p_);
  return r;
}

FieldElement FieldSpec::sub(const FieldElement& a, const FieldElement& b) const {
  validate_element(a);
  validate_element(b);
  FieldElement r;
  r.coeffs.resize(t_);
  for (int j = 0; j < t_; ++j)
    r.coeffs[j] = static_cast<int32_t>(((a.coeffs[j] - b.coeffs[j]) % p_ + p_) % p_);
  return r;
}

FieldElement FieldSpec::neg(const FieldElement& a) const { return sub(zero(), a); }

FieldElement FieldSpec::mul(const FieldElement& a, const FieldElement& b) const {
  validate_element(a);
  validate_element(b);
  std::vector<long long> prod(2 * t_ - 1, 0);
  for (int i = 0; i < t_; ++i) {
    if (a.coeffs[i] == 0) continue;
    for (int j = 0; j < t_; ++j) prod[i + j] += static_cast<long long>(a.coeffs[i]) * b.coeffs[j];
  }
  // reduce degree >= t terms by the monic modulus: x^t = -(irr_[0..t-1])
  for (int d = 2 * t_ - 2; d >= t_; --d) {
    long long c = prod[d] % p_;
    if (c == 0) continue;
    prod[d] = 0;
    for (int j = 0; j < t_; ++j) prod[d - t_ + j] -= c * irr_[j];
  }
  FieldElement r;
  r.coeffs.resize(t_);
  for (int j = 0; j < t_; ++j) r.coeffs[j] = static_cast<int32_t>(((prod[j] % p_) + p_) % p_);
  return r;
}

FieldElement FieldSpec::pow(const FieldElement& a, long long e) const {
  FieldElement base = a;
  FieldElement r = one();
  while (e > 0) {
    if (e & 1) r = mul(r, base);
    base = mul(base, base);
    e >>= 1;
  }
  return r;
}

int FieldSpec::quad_char(const FieldElement& b) const {
  if (p_ == 2) fail(errc::unsupported_field, "quadratic character needs odd characteristic");
  return chi_[index_of(b)];
}

int FieldSpec::quad_char_at(long long idx) const {
  if (p_ == 2) fail(errc::unsupported_field, "quadratic character needs odd characteristic");
  if (idx < 0 || idx >= q_) fail(errc::invalid_input, "element index out of range");
  return chi_[idx];
}

}  // namespace rforge::gf
