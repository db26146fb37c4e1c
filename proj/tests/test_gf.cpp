#include <doctest.h>

#include "oracles.hpp"
#include "rforge/gf.hpp"

using namespace rforge;
using gf::FieldElement;
using gf::FieldSpec;

namespace {

FieldElement el(const FieldSpec& f, std::vector<int32_t> coeffs) {
  FieldElement e;
  e.coeffs = std::move(coeffs);
  (void)f;
  return e;
}

template <typename Fn>
errc thrown_code(Fn&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  return errc::internal_assertion;  // placeholder meaning "did not throw"
}

// all odd prime powers up to 49
const std::vector<std::pair<long long, int>> kOddFields = {
    {3, 1}, {5, 1}, {7, 1}, {3, 2}, {11, 1}, {13, 1}, {17, 1}, {19, 1},
    {23, 1}, {5, 2}, {3, 3}, {29, 1}, {31, 1}, {37, 1}, {41, 1}, {43, 1}, {47, 1}, {7, 2}};

}  // namespace

TEST_SUITE("gf") {

TEST_CASE("prime field enumerates residues in order") {
  const auto f = FieldSpec::create(3, 1);
  REQUIRE(f.order() == 3);
  CHECK(f.order_list()[0].coeffs == std::vector<int32_t>{0});
  CHECK(f.order_list()[1].coeffs == std::vector<int32_t>{1});
  CHECK(f.order_list()[2].coeffs == std::vector<int32_t>{2});
}

TEST_CASE("create validates its inputs") {
  CHECK(thrown_code([] { FieldSpec::create(4, 1); }) == errc::invalid_input);
  CHECK(thrown_code([] { FieldSpec::create(1, 1); }) == errc::invalid_input);
  CHECK(thrown_code([] { FieldSpec::create(3, 0); }) == errc::invalid_input);
  CHECK(thrown_code([] { FieldSpec::create(2, 40); }) == errc::invalid_input);  // order overflow
}

TEST_CASE("gf(9) picks the smallest irreducible quadratic") {
  const auto f = FieldSpec::create(3, 2);
  REQUIRE(f.order() == 9);
  REQUIRE(static_cast<int>(f.order_list().size()) == 9);

  // Oracle: walk all 9 monic quadratics x^2 + a1 x + a0 over GF(3) in
  // (a0 + 3 a1) order and find the first with no root; degree 2 is
  // irreducible exactly when root-free.
  int first = -1, count = 0;
  for (int v = 0; v < 9; ++v) {
    const int a0 = v % 3, a1 = v / 3;
    bool has_root = false;
    for (int x = 0; x < 3 && !has_root; ++x)
      if ((x * x + a1 * x + a0) % 3 == 0) has_root = true;
    if (!has_root) {
      ++count;
      if (first < 0) first = v;
    }
  }
  CHECK(count == 3);   // x^2+1, x^2+x+2, x^2+2x+2
  CHECK(first == 1);   // x^2 + 1
  CHECK(f.irreducible() == std::vector<int32_t>{1, 0, 1});
}

TEST_CASE("gf(27) modulus is irreducible by trial division") {
  const auto f = FieldSpec::create(3, 3);
  CHECK(f.irreducible() == std::vector<int32_t>{1, 2, 0, 1});  // x^3 + 2x + 1
  // root-free over GF(3)
  for (int x = 0; x < 3; ++x) CHECK((x * x * x + 2 * x + 1) % 3 != 0);
}

TEST_CASE("multiplication reduces by the modulus") {
  const auto f3 = FieldSpec::create(3, 1);
  CHECK(f3.mul(el(f3, {2}), el(f3, {2})).coeffs == std::vector<int32_t>{1});

  const auto f9 = FieldSpec::create(3, 2);
  const auto x = el(f9, {0, 1});
  CHECK(f9.mul(x, x).coeffs == std::vector<int32_t>{2, 0});  // x^2 = -1

  for (const auto& [p, t] : {std::pair<long long, int>{5, 1}, {3, 2}, {3, 3}}) {
    const auto f = FieldSpec::create(p, t);
    for (const auto& y : f.order_list()) CHECK(f.is_zero(f.mul(f.zero(), y)));
  }
}

TEST_CASE("mul rejects out-of-range coefficients") {
  const auto f = FieldSpec::create(3, 1);
  CHECK(thrown_code([&] { f.mul(el(f, {3}), el(f, {1})); }) == errc::invalid_input);
  CHECK(thrown_code([&] { f.mul(el(f, {-1}), el(f, {1})); }) == errc::invalid_input);
  CHECK(thrown_code([&] { f.mul(el(f, {1, 1}), el(f, {1})); }) == errc::invalid_input);
}

TEST_CASE("field axioms hold on sampled triples") {
  std::mt19937 rng(20240811);
  for (const auto& [p, t] : {std::pair<long long, int>{3, 2}, {3, 3}, {7, 2}}) {
    const auto f = FieldSpec::create(p, t);
    std::uniform_int_distribution<long long> pick(0, f.order() - 1);
    for (int trial = 0; trial < 200; ++trial) {
      const auto a = f.element(pick(rng)), b = f.element(pick(rng)), c = f.element(pick(rng));
      CHECK(f.mul(f.mul(a, b), c) == f.mul(a, f.mul(b, c)));
      CHECK(f.mul(a, f.add(b, c)) == f.add(f.mul(a, b), f.mul(a, c)));
      if (!f.is_zero(a)) CHECK(f.mul(a, f.pow(a, f.order() - 2)) == f.one());
    }
  }
}

TEST_CASE("quad_char piecewise values") {
  const auto f7 = FieldSpec::create(7, 1);
  CHECK(f7.quad_char(f7.zero()) == 0);

  // oracle: squares mod 7 enumerate to {1, 2, 4}
  std::set<int> squares;
  for (int x = 1; x < 7; ++x) squares.insert(x * x % 7);
  CHECK(squares == std::set<int>{1, 2, 4});
  CHECK(f7.quad_char(el(f7, {2})) == 1);
  CHECK(f7.quad_char(el(f7, {3})) == -1);

  // chi(-1) = -1 when the order is 3 mod 4, by enumeration
  for (long long q : {7, 11}) {
    const auto f = FieldSpec::create(q, 1);
    const auto minus1 = f.neg(f.one());
    CHECK(oracles::chi_by_enumeration(f, minus1) == -1);
    CHECK(f.quad_char(minus1) == -1);
  }
}

TEST_CASE("characteristic 2 is rejected") {
  const auto f = FieldSpec::create(2, 2);
  CHECK(f.order() == 4);
  CHECK(thrown_code([&] { f.quad_char(f.one()); }) == errc::unsupported_field);
}

TEST_CASE("quad_char properties for every odd prime power up to 49") {
  for (const auto& [p, t] : kOddFields) {
    const auto f = FieldSpec::create(p, t);
    const long long q = f.order();
    CAPTURE(q);

    long long plus = 0, minus = 0;
    for (const auto& b : f.order_list()) {
      const int c = f.quad_char(b);
      CHECK(c == oracles::chi_by_enumeration(f, b));  // exponentiation vs enumeration
      if (c == 1) ++plus;
      if (c == -1) ++minus;
    }
    CHECK(plus == (q - 1) / 2);  // balance
    CHECK(minus == (q - 1) / 2);

    // multiplicativity, exhaustive over nonzero pairs
    for (const auto& x : f.order_list()) {
      if (f.is_zero(x)) continue;
      for (const auto& y : f.order_list()) {
        if (f.is_zero(y)) continue;
        if (f.quad_char(f.mul(x, y)) != f.quad_char(x) * f.quad_char(y)) {
          FAIL("multiplicativity broke at q=" << q);
        }
      }
    }
  }
}

TEST_CASE("field construction is deterministic") {
  for (const auto& [p, t] : {std::pair<long long, int>{3, 2}, {5, 2}, {3, 3}, {13, 1}}) {
    const auto a = FieldSpec::create(p, t);
    const auto b = FieldSpec::create(p, t);
    CHECK(a == b);
  }
}

TEST_CASE("element indexing round-trips") {
  const auto f = FieldSpec::create(5, 2);
  for (long long i = 0; i < f.order(); ++i) CHECK(f.index_of(f.element(i)) == i);
}

TEST_CASE("prime power decomposition") {
  long long p = 0;
  int t = 0;
  CHECK(gf::prime_power(27, p, t));
  CHECK(p == 3);
  CHECK(t == 3);
  CHECK(gf::prime_power(13, p, t));
  CHECK(p == 13);
  CHECK(t == 1);
  CHECK_FALSE(gf::prime_power(15, p, t));
  CHECK_FALSE(gf::prime_power(1, p, t));
}

}  // TEST_SUITE
