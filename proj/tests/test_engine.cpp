#include <random>

#include "doctest.h"
#include "edim/engine.hpp"
#include "edim/sampling.hpp"

using namespace edim;
using namespace edim::engine;
using abelian::Coords;
using catalog::SimpleFactor;

namespace {

catalog::GroupSpec spec(std::vector<SimpleFactor> f, std::vector<Coords> mu = {}) {
  catalog::GroupSpec s{std::move(f), {}};
  for (auto& m : mu) s.mu_generators.push_back(abelian::GroupElement{std::move(m)});
  return s;
}

std::vector<SimpleFactor> copies(const SimpleFactor& f, std::size_t m) { return std::vector<SimpleFactor>(m, f); }

// Generators of the kernel of the product map for m factors with center Z/2.
std::vector<Coords> kernel_of_product(std::size_t m) {
  std::vector<Coords> out;
  for (std::size_t i = 0; i + 1 < m; ++i) {
    Coords c(m, 0);
    c[i] = c[i + 1] = 1;
    out.push_back(c);
  }
  return out;
}

bool has_caveat(const EdReport& r, const std::string& needle) {
  for (const auto& c : r.caveats)
    if (c.find(needle) != std::string::npos) return true;
  return false;
}

}  // namespace

TEST_CASE("single spin groups follow the closed forms") {
  for (std::int64_t n = 15; n <= 25; n += 2) {
    const auto r = compute_ed(spec({SimpleFactor::spin(n)}));
    const BigInt expected = pow_big(2, (n - 1) / 2) - BigInt(n) * (n - 1) / 2;
    REQUIRE(r.exact);
    CHECK(*r.ed == expected);
    CHECK(*r.ed_red == expected - 1);
  }
  for (std::int64_t n = 18; n <= 26; n += 4) {
    const auto r = compute_ed(spec({SimpleFactor::spin(n)}));
    const BigInt expected = pow_big(2, (n - 2) / 2) - BigInt(n) * (n - 1) / 2;
    REQUIRE(r.exact);
    CHECK(*r.ed == expected);
    CHECK(*r.ed_red == expected - 1);
  }
}

TEST_CASE("upper bound examples") {
  auto g = catalog::build(spec({SimpleFactor::spin(15)}));
  CHECK(upper_bound(g, {abelian::Character{{1}}}, {0}) == 23);
  CHECK(upper_bound_red(g, {abelian::Character{{1}}}, {0}) == 22);

  auto h = catalog::build(spec({SimpleFactor::spin(10), SimpleFactor::spin(3), SimpleFactor::spin(3)},
                               {{2, 1, 0}, {2, 0, 1}}));
  CHECK(upper_bound(h, {abelian::Character{{1, 1, 1}}}, {0}) == 13);
  CHECK(upper_bound_red(h, {abelian::Character{{1, 1, 1}}}, {0}) == 12);

  auto e = catalog::build(spec({SimpleFactor::e6(), SimpleFactor::e6()}, {{1, 2}}));
  CHECK(upper_bound(e, {abelian::Character{{1, 1}}}, {0}) == 573);
  CHECK(upper_bound_red(e, {abelian::Character{{1, 1}}}, {0}) == 572);
}

TEST_CASE("upper bound hypotheses") {
  auto g = catalog::build(spec({SimpleFactor::spin(16)}));
  const std::vector<abelian::Character> b{{{1, 0}}, {{1, 1}}};
  CHECK_THROWS_AS(upper_bound(g, b, {0}), Error);  // row 1
  CHECK_THROWS_AS(upper_bound(g, b, {}), Error);   // nothing covers
  CHECK_THROWS_AS(upper_bound(g, {abelian::Character{{1, 0}}}, {0}), Error);  // too small
  auto s = catalog::build(spec({SimpleFactor::spin(7), SimpleFactor::spin(9)}));
  CHECK_THROWS_AS(upper_bound(s, {abelian::Character{{1, 1}}, abelian::Character{{1, 1}}}, {0}), Error);
}

TEST_CASE("lower bound examples") {
  CHECK(lower_bound(catalog::build(spec({SimpleFactor::spin(15)})), 2) == 23);
  CHECK(lower_bound(catalog::build(spec(copies(SimpleFactor::sp(4), 3), kernel_of_product(3))), 2) == 404);
  CHECK(lower_bound(catalog::build(spec(copies(SimpleFactor::sl_order(2), 5), kernel_of_product(5))), 2) == 17);
  CHECK(lower_bound(catalog::build(spec({SimpleFactor::spin(16)})), 2) == 24);
  CHECK_THROWS_AS(lower_bound(catalog::build(spec({SimpleFactor::spin(15)})), 3), Error);
}

TEST_CASE("certification") {
  SUBCASE("Spin(17)") {
    auto r = compute_ed(spec({SimpleFactor::spin(17)}));
    CHECK(r.exact);
    CHECK(*r.ed == 120);
    CHECK(*r.ed_red == 119);
  }
  SUBCASE("Spin(18)") {
    auto r = compute_ed(spec({SimpleFactor::spin(18)}));
    CHECK(*r.ed == 103);
    CHECK(*r.ed_red == 102);
    CHECK(r.basis.front().character == abelian::Character{{1}});
  }
  SUBCASE("Spin(10)^2 / (1,3)") {
    auto r = compute_ed(spec({SimpleFactor::spin(10), SimpleFactor::spin(10)}, {{1, 3}}));
    CHECK(*r.ed == 166);
    CHECK(*r.ed_red == 165);
  }
  SUBCASE("a wrong basis is downgraded, not thrown") {
    auto g = catalog::build(spec({SimpleFactor::spin(16)}));
    auto r = certify_exact(g, 2, {abelian::Character{{1, 0}}, abelian::Character{{0, 1}}}, {});
    CHECK_FALSE(r.exact);
    CHECK_FALSE(r.hypothesis_failures.empty());
    CHECK(*r.lower == 24);
  }
}

TEST_CASE("pipelines per family") {
  auto spin7 = compute_ed(spec(copies(SimpleFactor::spin(7), 3), kernel_of_product(3)));
  CHECK(*spin7.ed == 449);
  CHECK(*spin7.ed_red == 448);
  auto sp8 = compute_ed(spec(copies(SimpleFactor::sp(4), 3), kernel_of_product(3)));
  CHECK(*sp8.ed == 404);
  CHECK(*sp8.ed_red == 403);
  auto sl2 = compute_ed(spec(copies(SimpleFactor::sl_order(2), 5), kernel_of_product(5)));
  CHECK(*sl2.ed == 17);
  CHECK(*sl2.ed_red == 16);
  auto e6 = compute_ed(spec(copies(SimpleFactor::e6(), 2), {{1, 2}}));
  CHECK(*e6.ed == 573);
  CHECK(*e6.ed_red == 572);
}

TEST_CASE("Spin(16) is bounds only") {
  auto r = compute_ed(spec({SimpleFactor::spin(16)}));
  CHECK_FALSE(r.exact);
  CHECK(*r.lower == 24);
  CHECK_FALSE(r.upper.has_value());
  CHECK_FALSE(r.hypothesis_failures.empty());
  CHECK(has_caveat(r, "Spin(16)"));
}

TEST_CASE("Spin(20) uses the relaxed upper bound") {
  auto r = compute_ed(spec({SimpleFactor::spin(20)}));
  CHECK_FALSE(r.exact);
  CHECK(*r.lower == 326);
  CHECK(*r.upper == 342);
  CHECK(*r.ed_red_upper == 340);
  CHECK(has_caveat(r, "central extension"));
}

TEST_CASE("Sp with a non-2-power rank is never exact") {
  auto r = compute_ed(spec(copies(SimpleFactor::sp(3), 3), kernel_of_product(3)));
  CHECK_FALSE(r.exact);
  CHECK(r.upper.has_value());
  CHECK(*r.upper == 216 - 63);
  CHECK(has_caveat(r, "2-power"));
}

TEST_CASE("non-reduced groups are rejected") {
  try {
    compute_ed(spec({SimpleFactor::spin(7), SimpleFactor::spin(9)}, {{1, 0}}));
    FAIL("expected NotReduced");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::NotReduced);
  }
}

TEST_CASE("factor order is echoed") {
  auto r = compute_ed(spec({SimpleFactor::spin(3), SimpleFactor::spin(10), SimpleFactor::spin(3)},
                           {{1, 2, 0}, {0, 2, 1}}));
  CHECK(*r.ed == 13);
  CHECK(r.permutation == std::vector<std::size_t>{1, 0, 2});
  CHECK(has_caveat(r, "reordered"));
}

TEST_CASE("central extension") {
  auto h = spec({SimpleFactor::spin(10), SimpleFactor::spin(10)}, {{2, 2}});
  auto r = extend_ed(h, abelian::GroupElement{{1, 3}});
  REQUIRE(r.extension.has_value());
  CHECK(r.exact);
  CHECK(*r.ed == 168);
  CHECK(*r.ed_red == 166);
  CHECK(r.extension->n_h_omega == 2);
  // Collapsing nu recovers ed(G).
  auto g = compute_ed(r.extension->g_spec);
  CHECK(*g.ed == *r.ed - r.extension->n_h_omega);

  CHECK_THROWS_AS(extend_ed(h, abelian::GroupElement{{2, 2}}), Error);  // already in mu
  CHECK_THROWS_AS(extend_ed(h, abelian::GroupElement{{1, 0}}), Error);  // order 4 in Z(H)
}

TEST_CASE("report invariants on random groups") {
  std::mt19937_64 rng(99);
  for (int trial = 0; trial < 40; ++trial) {
    const auto s = sampling::random_reduced_spec(rng, 27);
    EdReport r;
    try {
      r = compute_ed(s);
    } catch (const Error& e) {
      // Only SL components outside the table may leave nothing to score.
      REQUIRE(e.kind() == ErrorKind::HypothesisFailed);
      continue;
    }
    if (r.lower && r.upper) REQUIRE(*r.lower <= *r.upper);
    if (r.exact) {
      REQUIRE(*r.lower == *r.ed);
      REQUIRE(*r.upper == *r.ed);
    }
    if (r.ed_red_exact) REQUIRE(*r.ed_red == *r.ed - r.rank_z);
    if (r.upper) {
      BigInt sum = 0;
      for (const auto& e : r.basis) sum += e.dim_v;
      REQUIRE(*r.upper == sum - r.dim_g);
    }
  }
}
