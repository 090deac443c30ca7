#include "doctest.h"
#include "edim/repdata.hpp"

using namespace edim;
using namespace edim::repdata;
using abelian::Character;
using catalog::SimpleFactor;

namespace {

std::vector<std::int64_t> c1(std::int64_t a) { return {a}; }

catalog::SemisimpleGroup group(std::vector<SimpleFactor> f) { return catalog::build({std::move(f), {}}); }

}  // namespace

TEST_CASE("representation dimensions") {
  CHECK(rep_dimension(SimpleFactor::spin(15), c1(1)) == 128);
  CHECK(rep_dimension(SimpleFactor::spin(12), std::vector<std::int64_t>{1, 1}) == 12);
  CHECK(rep_dimension(SimpleFactor::spin(10), c1(2)) == 10);
  CHECK(rep_dimension(SimpleFactor::spin(10), c1(3)) == 16);
  CHECK(rep_dimension(SimpleFactor::e6(), c1(1)) == 27);
  CHECK(rep_dimension(SimpleFactor::sp(4), c1(1)) == 8);
  CHECK(rep_dimension(SimpleFactor::sl_order(8), c1(7)) == 8);
  CHECK(rep_dimension(SimpleFactor::spin(9), c1(0)) == 1);
  CHECK_THROWS_AS(rep_dimension(SimpleFactor::sl_order(8), c1(3)), Error);
  CHECK_THROWS_AS(rep_dimension(SimpleFactor::spin(9), c1(2)), Error);
}

TEST_CASE("n of components") {
  CHECK(n_component(SimpleFactor::spin(12), std::vector<std::int64_t>{1, 1}).value == 4);
  CHECK(n_component(SimpleFactor::spin(16), std::vector<std::int64_t>{1, 1}).value == 16);
  CHECK(n_component(SimpleFactor::spin(10), c1(2)).value == 2);
  CHECK(n_component(SimpleFactor::sl_order(8), c1(7)).value == 8);
  CHECK(n_component(SimpleFactor::sp(4), c1(1)).validity == Validity::Exact);
  CHECK(n_component(SimpleFactor::sp(3), c1(1)).validity == Validity::UpperBoundOnly);
  CHECK(n_component(SimpleFactor::sp(3), c1(1)).value == 6);
}

TEST_CASE("n and dim V of characters") {
  auto g = group({SimpleFactor::spin(13), SimpleFactor::spin(11)});
  CHECK(n_char(g, Character{{1, 1}}).value == 2048);
  CHECK(n_char(g, Character{{0, 0}}).value == 1);

  auto h = group({SimpleFactor::spin(10), SimpleFactor::spin(10)});
  CHECK(n_char(h, Character{{2, 0}}).value == 2);

  auto k = group({SimpleFactor::spin(10), SimpleFactor::spin(3), SimpleFactor::spin(3)});
  CHECK(dim_V(k, Character{{1, 1, 1}}) == 64);

  auto sp = group({SimpleFactor::sp(4), SimpleFactor::sp(4), SimpleFactor::sp(4)});
  CHECK(dim_V(sp, Character{{1, 1, 1}}) == 512);

  auto e = group({SimpleFactor::e6(), SimpleFactor::e6()});
  CHECK(dim_V(e, Character{{1, 1}}) == 729);
}

TEST_CASE("n divides dim V and equals it off the vector characters") {
  std::vector<SimpleFactor> fs;
  for (std::int64_t n = 3; n <= 30; ++n)
    if (n != 4) fs.push_back(SimpleFactor::spin(n));
  for (std::int64_t r = 3; r <= 9; ++r) fs.push_back(SimpleFactor::sp(r));
  for (std::int64_t q : {2, 3, 4, 5, 8, 9, 16, 27}) fs.push_back(SimpleFactor::sl_order(q));
  fs.push_back(SimpleFactor::e6());
  for (const auto& f : fs) {
    abelian::for_each_tuple(f.center_orders(), [&](const abelian::Coords& c) {
      if (!supported_component(f, c)) return true;
      const auto rep = rep_choice(f, c);
      const auto n = n_component(f, c).value;
      REQUIRE(rep.dimension % n == 0);
      if (f.is_spin() && rep.tag != RepTag::Vector) REQUIRE(n == rep.dimension);
      return true;
    });
  }
}
