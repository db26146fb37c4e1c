#include <doctest.h>

#include <tuple>
#include <vector>

#include "oracles.hpp"
#include "rforge/certificate.hpp"
#include "rforge/coloring.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

using namespace rforge;
using namespace rforge::coloring;

namespace {

template <typename Fn>
errc thrown_code(Fn&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  return errc::internal_assertion;
}

MultipartiteColoring psi_13x4() {
  return build_psi(srg::paley_graph(gf::FieldSpec::create(13, 1)), hadamard::sylvester(2));
}

MultipartiteColoring mono_2x2() {
  MultipartiteColoring col(2, 2, 2);
  for (const auto& [u, v] : col.canonical_edges()) col.set_color(u, v, 1);
  return col;
}

}  // namespace

TEST_SUITE("coloring") {

TEST_CASE("psi coloring shape and symmetry") {
  const auto col = psi_13x4();
  CHECK(col.parts() == 13);
  CHECK(col.part_size() == 4);
  CHECK(col.colored_pairs() == 1248);
  CHECK(col.fully_colored());
  for (int u = 0; u < col.vertices(); u += 5)
    for (int v = 0; v < col.vertices(); ++v) {
      if (u == v) continue;
      CHECK(col.color(u, v) == col.color(v, u));
    }
  CHECK(col.color(0, 1) == 0);  // same part, no edge

  const auto small = build_psi(srg::paley_graph(gf::FieldSpec::create(5, 1)),
                               hadamard::sylvester(1));
  CHECK(small.parts() == 5);
  CHECK(small.part_size() == 2);
}

TEST_CASE("psi rejects bad generators") {
  const auto g13 = srg::paley_graph(gf::FieldSpec::create(13, 1));
  CHECK(thrown_code([&] {
          build_psi(g13, hadamard::paley_one_hadamard(gf::FieldSpec::create(7, 1)));
        }) == errc::asymmetric_matrix);

  srg::Graph p4(4);
  p4.add_edge(0, 1);
  p4.add_edge(1, 2);
  p4.add_edge(2, 3);
  CHECK(thrown_code([&] { build_psi(p4, hadamard::sylvester(2)); }) == errc::invalid_input);
  CHECK(thrown_code([&] { build_psi(g13, hadamard::sylvester(0)); }) == errc::invalid_input);
}

TEST_CASE("delta on a one-color square") {
  const auto col = mono_2x2();
  // same-part pair sees both cross vertices in color 1, none in color 2
  CHECK(delta(col, 0, 1, 1) == 2);
  CHECK(delta(col, 0, 1, 2) == 0);
  CHECK(thrown_code([&] { delta(col, 1, 1, 1); }) == errc::invalid_input);
  CHECK(thrown_code([&] { delta(col, 0, 1, 3); }) == errc::invalid_input);
}

TEST_CASE("delta matches the naive count and the case closed forms") {
  const auto g = srg::paley_graph(gf::FieldSpec::create(13, 1));
  const auto h = hadamard::sylvester(2);
  const auto col = build_psi(g, h);
  const auto prm = srg::srg_params(g).params;
  const long long kbar = prm.n - prm.k - 1;
  const int z = h.order();

  std::mt19937 rng(20240812);
  std::uniform_int_distribution<int> pick(0, col.vertices() - 1);
  std::uniform_int_distribution<int> coin(1, 2);
  int case1 = 0, case2 = 0, case3 = 0;
  for (int trial = 0; trial < 1000; ++trial) {
    const int v1 = pick(rng), v2 = pick(rng);
    if (v1 == v2) continue;
    const int w = coin(rng);
    const long long direct = delta(col, v1, v2, w);
    CHECK(direct == oracles::naive_delta(col, v1, v2, w));

    const auto [a, i] = col.part_slot(v1);
    const auto [b, j] = col.part_slot(v2);
    if (a != b && i == j) {
      long long p = 0;
      for (int c = 0; c < z; ++c)
        if (h.at(i - 1, c) == 1) ++p;
      const auto np = srg::neighborhood_partition(g, a - 1, b - 1);
      CHECK(direct == oracles::case1_formula(np.g1, np.g2, p, z, w));
      ++case1;
    } else if (a == b) {
      const auto pp = hadamard::pair_partition(h, i, j);
      CHECK(direct == oracles::case2_formula(pp, prm.k, kbar, w));
      ++case2;
    } else {
      const auto np = srg::neighborhood_partition(g, a - 1, b - 1);
      const auto pp = hadamard::pair_partition(h, i, j);
      CHECK(direct == oracles::case3_formula(np, pp, w));
      ++case3;
    }
  }
  CHECK(case1 > 0);
  CHECK(case2 > 0);
  CHECK(case3 > 30);
}

TEST_CASE("avoidance certification on the 13x4 coloring") {
  const auto col = psi_13x4();
  const auto cert = certify_avoidance(col, 13);
  CHECK(cert.max_delta == 12);  // frozen from the exhaustive scan
  CHECK(cert.avoided());
  CHECK(cert.witness.v1 == 0);
  CHECK(cert.witness.v2 == 1);
  CHECK(cert.witness.w == 1);

  const auto violated = certify_avoidance(col, 1);
  CHECK_FALSE(violated.avoided());

  const auto small = build_psi(srg::paley_graph(gf::FieldSpec::create(5, 1)),
                               hadamard::sylvester(1));
  const auto small_cert = certify_avoidance(small, 3);  // theta (zeta+alpha) + 1 = 3
  CHECK(small_cert.avoided());
  CHECK(small_cert.max_delta == 2);
}

TEST_CASE("parallel scan equals the serial reference and the naive oracle") {
  const auto col = psi_13x4();
  const auto par = certify_avoidance(col, 13);
  const auto ser = certify_avoidance_serial(col, 13);
  const auto naive = oracles::naive_certify(col, 13);
  CHECK(par.max_delta == ser.max_delta);
  CHECK(par.witness.v1 == ser.witness.v1);
  CHECK(par.witness.v2 == ser.witness.v2);
  CHECK(par.witness.w == ser.witness.w);
  CHECK(par.max_delta == naive.max_delta);
  CHECK(par.witness.v1 == naive.witness.v1);
  CHECK(par.witness.v2 == naive.witness.v2);
  CHECK(par.witness.w == naive.witness.w);

#ifdef _OPENMP
  SUBCASE("witness independent of the thread count") {
    const int before = omp_get_max_threads();
    omp_set_num_threads(1);
    const auto one = certify_avoidance(col, 13);
    omp_set_num_threads(before);
    const auto many = certify_avoidance(col, 13);
    CHECK(one.witness.v1 == many.witness.v1);
    CHECK(one.witness.v2 == many.witness.v2);
    CHECK(one.witness.w == many.witness.w);
  }
#endif
}

TEST_CASE("the construction bound holds across graph/matrix pairings") {
  // symmetric matrices of orders 2..8 from doubling and symmetric deletion
  std::vector<hadamard::SignMatrix> mats;
  mats.push_back(hadamard::sylvester(1));                      // order 2, alpha 0
  mats.push_back(hadamard::sylvester(2));                      // order 4, alpha 0
  mats.push_back(hadamard::sylvester(3));                      // order 8, alpha 0
  mats.push_back(hadamard::delete_symmetric(hadamard::sylvester(2), 1));  // order 3, alpha 1
  mats.push_back(hadamard::delete_symmetric(hadamard::sylvester(2), 2));  // order 2, alpha 2
  mats.push_back(hadamard::delete_symmetric(hadamard::sylvester(3), 1));  // order 7, alpha 1
  mats.push_back(hadamard::delete_symmetric(hadamard::sylvester(3), 2));  // order 6, alpha 2
  mats.push_back(hadamard::delete_symmetric(hadamard::sylvester(3), 3));  // order 5, alpha 3

  const std::vector<std::tuple<long long, long long, int>> paley_cases = {
      {5, 5, 1}, {13, 13, 1}, {17, 17, 1}};
  for (const auto& [q, p, t] : paley_cases) {
    const auto g = srg::paley_graph(gf::FieldSpec::create(p, t));
    const long long theta = srg::theta(srg::srg_params(g).params);
    for (const auto& m : mats) {
      if (m.order() < 2) continue;
      const long long alpha = hadamard::alpha_of(m).alpha;
      const long long bound = theta * (m.order() + alpha);
      const auto cert = certify_avoidance(build_psi(g, m), static_cast<int>(bound) + 1);
      CAPTURE(q);
      CAPTURE(m.order());
      CHECK(cert.max_delta <= bound);
      CHECK(cert.avoided());
    }
  }
}

TEST_CASE("biclique finder") {
  const auto square = mono_2x2();
  SUBCASE("single edges") {
    CHECK(find_mono_biclique(square, 1, 1, 1, 0).has_value());
    CHECK_FALSE(find_mono_biclique(square, 1, 1, 2, 0).has_value());
  }
  SUBCASE("the full square is a one-colored 2x2 biclique") {
    const auto wit = find_mono_biclique(square, 2, 2, 1, 0);
    REQUIRE(wit.has_value());
    CHECK(wit->side_a == std::vector<int>{0, 1});
    CHECK(wit->side_b == std::vector<int>{2, 3});
  }
  SUBCASE("agrees with the delta scan on the 13x4 coloring") {
    const auto col = psi_13x4();
    const auto cert = certify_avoidance(col, 13);
    for (int w = 1; w <= 2; ++w) CHECK_FALSE(find_mono_biclique(col, 2, 13, w, 0).has_value());
    // the witness color does reach a (2, max_delta) biclique
    CHECK(find_mono_biclique(col, 2, static_cast<int>(cert.max_delta), cert.witness.w, 0)
              .has_value());
    // verdict agreement across widths: avoided exactly when no color holds
    // a (2, m) biclique
    for (int m = 11; m <= 14; ++m) {
      bool found = false;
      for (int w = 1; w <= 2; ++w)
        if (find_mono_biclique(col, 2, m, w, 0).has_value()) found = true;
      CHECK(certify_avoidance(col, m).avoided() == !found);
    }
  }
  SUBCASE("budget overruns raise instead of guessing") {
    // no K_{3,13} exists here (pairwise commons top out at 12), so the
    // search must exhaust and a 5-node budget cannot cover that
    const auto col = psi_13x4();
    CHECK(thrown_code([&] { find_mono_biclique(col, 3, 13, 1, 5); }) == errc::budget_exceeded);
  }
  SUBCASE("input validation") {
    CHECK(thrown_code([&] { find_mono_biclique(square, 0, 1, 1, 0); }) == errc::invalid_input);
    CHECK(thrown_code([&] { find_mono_biclique(square, 1, 1, 9, 0); }) == errc::invalid_input);
  }
}

TEST_CASE("exhaustive search small cases") {
  SUBCASE("single edge cannot hold a 2x2 biclique") {
    const auto res = exhaustive_ramsey(2, 1, 2, 2);
    CHECK(res.verdict == SearchResult::Verdict::avoiding);
  }
  SUBCASE("4x4 sides admit an avoiding coloring, and it verifies") {
    const auto res = exhaustive_ramsey(2, 4, 2, 2);
    REQUIRE(res.verdict == SearchResult::Verdict::avoiding);
    REQUIRE(res.coloring.has_value());
    const auto cert = certify_avoidance(*res.coloring, 2);
    CHECK(cert.avoided());
    CHECK(oracles::naive_certify(*res.coloring, 2).max_delta <= 1);
  }
  SUBCASE("serial and parallel agree, including the coloring") {
    SearchOptions serial;
    serial.parallel = false;
    for (int s = 1; s <= 4; ++s) {
      const auto a = exhaustive_ramsey(2, s, 2, 2);
      const auto b = exhaustive_ramsey(2, s, 2, 2, serial);
      CHECK(a.verdict == b.verdict);
      if (a.coloring && b.coloring) CHECK(*a.coloring == *b.coloring);
    }
  }
  SUBCASE("three colors") {
    const auto res = exhaustive_ramsey(2, 2, 2, 3);
    REQUIRE(res.verdict == SearchResult::Verdict::avoiding);
    CHECK(certify_avoidance(*res.coloring, 2).avoided());
    SearchOptions serial;
    serial.parallel = false;
    const auto ser = exhaustive_ramsey(2, 3, 2, 3, serial);
    const auto par = exhaustive_ramsey(2, 3, 2, 3);
    CHECK(ser.verdict == par.verdict);
    if (ser.coloring && par.coloring) CHECK(*ser.coloring == *par.coloring);
  }
  SUBCASE("budget exhaustion is an error, not an answer") {
    SearchOptions opt;
    opt.node_budget = 50;
    CHECK(thrown_code([&] { exhaustive_ramsey(2, 5, 2, 2, opt); }) == errc::budget_exceeded);
  }
  SUBCASE("input validation") {
    CHECK(thrown_code([] { exhaustive_ramsey(1, 2, 2, 2); }) == errc::invalid_input);
    CHECK(thrown_code([] { exhaustive_ramsey(2, 0, 2, 2); }) == errc::invalid_input);
    CHECK(thrown_code([] { exhaustive_ramsey(2, 2, 2, 1); }) == errc::invalid_input);
    CHECK(thrown_code([] { exhaustive_ramsey(9, 8, 2, 2); }) == errc::invalid_input);
  }
}

TEST_CASE("restriction embedding: avoidance survives dropping a slot") {
  // any coloring of K_{2x6} restricted to the first 5 slots per part is a
  // coloring of K_{2x5}; a monochromatic biclique in the restriction is one
  // in the whole, so avoidance passes down to restrictions
  std::mt19937 rng(31415);
  std::uniform_int_distribution<int> coin(1, 2);
  for (int trial = 0; trial < 50; ++trial) {
    MultipartiteColoring full(2, 6, 2);
    for (const auto& [u, v] : full.canonical_edges()) full.set_color(u, v, coin(rng));
    MultipartiteColoring restricted(2, 5, 2);
    for (const auto& [u, v] : restricted.canonical_edges()) {
      const auto [pu, su] = restricted.part_slot(u);
      const auto [pv, sv] = restricted.part_slot(v);
      restricted.set_color(u, v, full.color(full.flat_id(pu, su), full.flat_id(pv, sv)));
    }
    for (int m = 3; m <= 5; ++m) {
      if (certify_avoidance(full, m).avoided()) CHECK(certify_avoidance(restricted, m).avoided());
    }
  }
}

TEST_CASE("certificates round-trip, verify, and catch tampering") {
  const auto col = psi_13x4();
  const auto cert = certify_avoidance(col, 13);
  certificate::Provenance prov;
  prov.generator = "psi-coloring";
  prov.srg_params = srg::SrgParams{13, 6, 2, 3};
  prov.matrix_source = "sign matrix, order 4, alpha 0, symmetric";
  prov.delta_bound = 12;
  const std::string text = certificate::write(col, cert, prov);

  const auto loaded = certificate::read(text);
  CHECK(loaded.coloring == col);
  CHECK(loaded.target_m == 13);
  CHECK(loaded.stated_max_delta == 12);
  CHECK(loaded.hash_ok());

  const auto ok = certificate::verify(loaded, std::nullopt);
  CHECK_FALSE(ok.tampered);
  CHECK(ok.consistent);
  CHECK(ok.avoided);

  SUBCASE("verdict at a stricter override target") {
    const auto strict = certificate::verify(loaded, 12);
    CHECK_FALSE(strict.tampered);
    CHECK_FALSE(strict.avoided);  // max delta is exactly 12
  }
  SUBCASE("flipping any single color is detected") {
    std::mt19937 rng(1618);
    const auto edges = col.canonical_edges();
    std::uniform_int_distribution<size_t> pick(0, edges.size() - 1);
    int detected = 0;
    for (int trial = 0; trial < 100; ++trial) {
      auto tampered_col = col;
      const auto [u, v] = edges[pick(rng)];
      tampered_col.set_color(u, v, 3 - col.color(u, v));
      const std::string bad = certificate::write(tampered_col, cert, prov);
      // reuse the original header hash: emulate an in-place edit of the body
      auto broken = certificate::read(bad);
      broken.stored_body_hash = loaded.stored_body_hash;
      const auto res = certificate::verify(broken, std::nullopt);
      if (res.tampered) ++detected;
    }
    CHECK(detected == 100);
  }
  SUBCASE("footer inconsistencies are reported") {
    auto edited = loaded;
    edited.stated_max_delta = 3;
    const auto res = certificate::verify(edited, std::nullopt);
    CHECK_FALSE(res.consistent);
  }
  SUBCASE("garbage input is a format error") {
    CHECK(thrown_code([] { certificate::read("not json"); }) == errc::format_error);
    CHECK(thrown_code([] { certificate::read("{}"); }) == errc::format_error);
  }
}

}  // TEST_SUITE
