#include <random>
#include <set>

#include "doctest.h"
#include "edim/abelian_oracle.hpp"
#include "edim/catalog.hpp"

using namespace edim;
using namespace edim::catalog;
using abelian::Coords;

namespace {

GroupSpec spec(std::vector<SimpleFactor> f, std::vector<Coords> mu = {}) {
  GroupSpec s{std::move(f), {}};
  for (auto& m : mu) s.mu_generators.push_back(GroupElement{std::move(m)});
  return s;
}

// Reducedness by enumerating <mu> and testing each factor's center block.
bool slow_reduced(const GroupSpec& s) {
  const auto amb = product_center(s.factors);
  std::vector<Coords> raw;
  for (const auto& m : s.mu_generators) raw.push_back(m.coords);
  const auto mu = abelian::oracle::closure(amb, raw);
  const auto offsets = block_offsets(s.factors);
  for (std::size_t i = 0; i < s.factors.size(); ++i) {
    const auto orders = s.factors[i].center_orders();
    bool all_in = true;
    abelian::for_each_tuple(orders, [&](const Coords& c) {
      Coords x(amb.size(), 0);
      for (std::size_t j = 0; j < c.size(); ++j) x[offsets[i] + j] = c[j];
      if (!mu.count(x)) all_in = false;
      return all_in;
    });
    if (all_in) return false;
  }
  return true;
}

}  // namespace

TEST_CASE("factor data") {
  CHECK(SimpleFactor::spin(15).dimension() == 105);
  CHECK(SimpleFactor::spin(10).center_orders() == std::vector<std::int64_t>{4});
  CHECK(SimpleFactor::spin(12).center_orders() == std::vector<std::int64_t>{2, 2});
  CHECK(SimpleFactor::spin(7).center_orders() == std::vector<std::int64_t>{2});
  CHECK(SimpleFactor::sp(4).dimension() == 36);
  CHECK(SimpleFactor::sp(4).name() == "Sp(8)");
  CHECK(SimpleFactor::sl_order(8).dimension() == 63);
  CHECK(SimpleFactor::sl_order(8) == SimpleFactor::sl(2, 3));
  CHECK(SimpleFactor::sl_order(9).center_orders() == std::vector<std::int64_t>{9});
  CHECK(SimpleFactor::e6().dimension() == 78);
  for (std::int64_t n = 3; n < 40; ++n) {
    if (n == 4) continue;
    const auto f = SimpleFactor::spin(n);
    const std::int64_t expected = n % 2 ? 2 : 4;
    CHECK(f.center_order() == expected);
    CHECK(f.dimension() == n * (n - 1) / 2);
  }
}

TEST_CASE("bad parameters") {
  CHECK_THROWS_AS(SimpleFactor::spin(4), Error);
  CHECK_THROWS_AS(SimpleFactor::spin(2), Error);
  CHECK_THROWS_AS(SimpleFactor::sp(2), Error);
  CHECK_THROWS_AS(SimpleFactor::sl_order(6), Error);
  CHECK_THROWS_AS(SimpleFactor::sl_order(1), Error);
}

TEST_CASE("build examples") {
  SUBCASE("Spin(15)") {
    auto g = build(spec({SimpleFactor::spin(15)}));
    CHECK(g.dim_g == 105);
    CHECK(g.center_tilde == abelian::CyclicDecomposition({2}));
    CHECK(g.char_group.order() == 2);
    CHECK(g.rank_z == 1);
  }
  SUBCASE("Spin(10)^2 / (1,3)") {
    auto g = build(spec({SimpleFactor::spin(10), SimpleFactor::spin(10)}, {{1, 3}}));
    CHECK(g.dim_g == 90);
    CHECK(g.char_group.structure() == abelian::CyclicDecomposition({4}));
    CHECK(g.char_group.contains(Character{{1, 1}}));
  }
  SUBCASE("E6^2 / (1,2)") {
    auto g = build(spec({SimpleFactor::e6(), SimpleFactor::e6()}, {{1, 2}}));
    CHECK(g.dim_g == 156);
    CHECK(g.char_group.structure() == abelian::CyclicDecomposition({3}));
    CHECK(g.char_group.contains(Character{{1, 1}}));
    CHECK(g.prime == 3);
  }
  SUBCASE("family mixes") {
    CHECK_THROWS_AS(build(spec({SimpleFactor::spin(7), SimpleFactor::sp(3)})), Error);
    CHECK_THROWS_AS(build(spec({SimpleFactor::sl_order(2), SimpleFactor::sl_order(3)})), Error);
    CHECK_NOTHROW(build(spec({SimpleFactor::spin(7), SimpleFactor::spin(10)})));
  }
  SUBCASE("malformed mu") {
    CHECK_THROWS_AS(build(spec({SimpleFactor::spin(7)}, {{2}})), Error);
    CHECK_THROWS_AS(build(spec({SimpleFactor::spin(7)}, {{1, 0}})), Error);
  }
}

TEST_CASE("factor order is canonical") {
  auto g = build(spec({SimpleFactor::spin(3), SimpleFactor::spin(10), SimpleFactor::spin(3)}, {{1, 2, 0}, {0, 2, 1}}));
  CHECK(g.factor(0).parameter() == 10);
  CHECK(g.permutation == std::vector<std::size_t>{1, 0, 2});
  CHECK(g.permuted());
  CHECK(g.spec.mu_generators[0] == GroupElement{{2, 1, 0}});
  CHECK(g.spec.mu_generators[1] == GroupElement{{2, 0, 1}});
}

TEST_CASE("reducedness examples") {
  CHECK(is_reduced(build(spec({SimpleFactor::spin(7), SimpleFactor::spin(7), SimpleFactor::spin(7)},
                              {{1, 1, 0}, {0, 1, 1}}))));
  CHECK_FALSE(is_reduced(build(spec({SimpleFactor::spin(7), SimpleFactor::spin(9)}, {{1, 0}}))));
  CHECK(is_reduced(build(spec({SimpleFactor::spin(12)}))));
  CHECK_FALSE(is_reduced(build(spec({SimpleFactor::spin(12)}, {{1, 0}, {0, 1}}))));
  CHECK(is_reduced(build(spec({SimpleFactor::spin(12)}, {{1, 1}}))));
}

TEST_CASE("reducedness agrees with enumeration") {
  std::mt19937_64 rng(3);
  const std::vector<std::int64_t> ns{3, 6, 7, 8, 10, 12};
  for (int trial = 0; trial < 200; ++trial) {
    std::vector<SimpleFactor> fs;
    const int m = std::uniform_int_distribution<int>(1, 3)(rng);
    for (int i = 0; i < m; ++i) fs.push_back(SimpleFactor::spin(ns[rng() % ns.size()]));
    const auto amb = product_center(fs);
    std::vector<Coords> mu;
    const int k = std::uniform_int_distribution<int>(0, 3)(rng);
    for (int j = 0; j < k; ++j) {
      Coords c;
      for (auto d : amb.orders()) c.push_back(static_cast<std::int64_t>(rng() % d));
      mu.push_back(c);
    }
    const auto s = spec(fs, mu);
    REQUIRE(is_reduced(build(s)) == slow_reduced(s));
  }
}

TEST_CASE("support") {
  const std::vector<SimpleFactor> f{SimpleFactor::spin(11), SimpleFactor::spin(13), SimpleFactor::spin(7)};
  CHECK(support(f, Character{{1, 1, 0}}) == std::vector<std::size_t>{0, 1});
  CHECK(support(f, Character{{0, 0, 0}}).empty());
  const std::vector<SimpleFactor> h{SimpleFactor::spin(16), SimpleFactor::spin(7)};
  CHECK(support(h, Character{{1, 1, 0}}) == std::vector<std::size_t>{0});
}

TEST_CASE("annihilator order law for built groups") {
  auto g = build(spec({SimpleFactor::sl_order(2), SimpleFactor::sl_order(2), SimpleFactor::sl_order(2),
                       SimpleFactor::sl_order(2), SimpleFactor::sl_order(2)},
                      {{1, 1, 0, 0, 0}, {0, 1, 1, 0, 0}, {0, 0, 1, 1, 0}, {0, 0, 0, 1, 1}}));
  CHECK(g.char_group.order() == 2);
  CHECK(g.char_group.contains(Character{{1, 1, 1, 1, 1}}));
}
