#include "edim/sampling.hpp"

#include <set>
#include <vector>

#include "edim/repdata.hpp"

namespace edim::sampling {

using catalog::SimpleFactor;

namespace {

template <class T>
const T& pick(std::mt19937_64& rng, const std::vector<T>& xs) {
  return xs[std::uniform_int_distribution<std::size_t>(0, xs.size() - 1)(rng)];
}

std::vector<SimpleFactor> random_factors(std::mt19937_64& rng) {
  const int family = std::uniform_int_distribution<int>(0, 4)(rng);
  const std::size_t m = std::uniform_int_distribution<std::size_t>(1, family == 4 ? 2 : 3)(rng);
  std::vector<SimpleFactor> out;
  const std::int64_t sl_q = pick(rng, std::vector<std::int64_t>{2, 4, 3, 9});
  const std::int64_t sl_p = sl_q % 2 == 0 ? 2 : 3;
  for (std::size_t i = 0; i < m; ++i) {
    switch (family) {
      case 0: out.push_back(SimpleFactor::spin(pick(rng, std::vector<std::int64_t>{3, 5, 6, 7, 8, 9, 10, 11, 12, 14}))); break;
      case 1: out.push_back(SimpleFactor::sp(std::uniform_int_distribution<std::int64_t>(3, 6)(rng))); break;
      case 2: out.push_back(SimpleFactor::sl_order(pick(rng, std::vector<std::int64_t>{sl_p, sl_p * sl_p}))); break;
      case 3: out.push_back(SimpleFactor::sl_order(sl_q)); break;
      default: out.push_back(SimpleFactor::e6()); break;
    }
  }
  return out;
}

// Every nonzero socle class has a lift whose components all carry n-values.
bool every_class_tabulated(const catalog::SemisimpleGroup& g, const abelian::SocleDual& socle) {
  std::set<abelian::Character> covered;
  for (const auto& chi : g.char_group.elements()) {
    bool ok = true;
    for (std::size_t i = 0; i < g.factor_count(); ++i)
      ok = ok && repdata::supported_component(g.factor(i), g.component(chi, i));
    if (ok) covered.insert(socle.restrict(chi));
  }
  return covered.size() == static_cast<std::size_t>(socle.structure().order());
}

}  // namespace

catalog::GroupSpec random_reduced_spec(std::mt19937_64& rng, std::int64_t max_socle_order) {
  for (;;) {
    catalog::GroupSpec spec;
    spec.factors = random_factors(rng);
    const auto center = catalog::product_center(spec.factors);
    const std::size_t gens = std::uniform_int_distribution<std::size_t>(0, 2)(rng);
    for (std::size_t k = 0; k < gens; ++k) {
      abelian::GroupElement x;
      for (auto d : center.orders()) x.coords.push_back(std::uniform_int_distribution<std::int64_t>(0, d - 1)(rng));
      if (!x.is_zero()) spec.mu_generators.push_back(std::move(x));
    }
    const auto g = catalog::build(spec);
    if (!catalog::is_reduced(g)) continue;
    bool socle_ok = false;
    try {
      const abelian::SocleDual socle(g.char_group, g.prime);
      socle_ok = socle.structure().order() <= max_socle_order && every_class_tabulated(g, socle);
    } catch (const Error&) {
      socle_ok = false;
    }
    if (socle_ok) return spec;
  }
}

}  // namespace edim::sampling
