#include "edim/catalog.hpp"

#include <algorithm>
#include <numeric>

namespace edim::catalog {

namespace {

// Keeps every pairing computation inside 64-bit arithmetic.
constexpr std::int64_t kMaxCenterOrder = std::int64_t{1} << 31;

bool is_prime(std::int64_t n) {
  if (n < 2) return false;
  for (std::int64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

}  // namespace

std::string_view to_string(FamilyTag tag) {
  switch (tag) {
    case FamilyTag::BD: return "BD";
    case FamilyTag::C: return "C";
    case FamilyTag::A: return "A";
    case FamilyTag::E6: return "E6";
  }
  return "?";
}

SimpleFactor SimpleFactor::spin(std::int64_t n) {
  if (n < 3) throw Error(ErrorKind::BadParameter, "Spin(n) needs n >= 3, got " + std::to_string(n));
  if (n == 4) throw Error(ErrorKind::BadParameter, "Spin(4) is not simple");
  return SimpleFactor(n % 2 == 1 ? Family::SpinOdd : Family::SpinEven, n, 0, 0);
}

SimpleFactor SimpleFactor::sp(std::int64_t rank) {
  if (rank < 3)
    throw Error(ErrorKind::BadParameter,
                "Sp(2n) needs n >= 3, got Sp(" + std::to_string(2 * rank) + ")");
  return SimpleFactor(Family::Sp, rank, 0, 0);
}

SimpleFactor SimpleFactor::sl(std::int64_t p, std::int64_t k) {
  if (!is_prime(p)) throw Error(ErrorKind::BadParameter, std::to_string(p) + " is not prime");
  if (k < 1) throw Error(ErrorKind::BadParameter, "SL(p^k) needs k >= 1");
  std::int64_t q = 1;
  for (std::int64_t i = 0; i < k; ++i) {
    if (q > kMaxCenterOrder / p)
      throw Error(ErrorKind::BadParameter, "SL degree exceeds 2^31");
    q *= p;
  }
  return SimpleFactor(Family::SL, k, p, q);
}

SimpleFactor SimpleFactor::sl_order(std::int64_t q) {
  if (q < 2) throw Error(ErrorKind::BadParameter, "SL(q) needs q >= 2");
  std::int64_t p = 2;
  while (q % p != 0) ++p;
  std::int64_t k = 0;
  std::int64_t rest = q;
  while (rest % p == 0) {
    rest /= p;
    ++k;
  }
  if (rest != 1) throw Error(ErrorKind::BadParameter, "SL(" + std::to_string(q) + "): not a prime power");
  return sl(p, k);
}

SimpleFactor SimpleFactor::e6() { return SimpleFactor(Family::E6, 0, 0, 0); }

FamilyTag SimpleFactor::tag() const noexcept {
  switch (family_) {
    case Family::SpinOdd:
    case Family::SpinEven: return FamilyTag::BD;
    case Family::Sp: return FamilyTag::C;
    case Family::SL: return FamilyTag::A;
    case Family::E6: return FamilyTag::E6;
  }
  return FamilyTag::BD;
}

std::vector<std::int64_t> SimpleFactor::center_orders() const {
  switch (family_) {
    case Family::SpinOdd: return {2};
    case Family::SpinEven: return param_ % 4 == 2 ? std::vector<std::int64_t>{4}
                                                  : std::vector<std::int64_t>{2, 2};
    case Family::Sp: return {2};
    case Family::SL: return {degree_};
    case Family::E6: return {3};
  }
  return {};
}

std::int64_t SimpleFactor::center_order() const {
  auto orders = center_orders();
  return std::accumulate(orders.begin(), orders.end(), std::int64_t{1}, std::multiplies<>());
}

BigInt SimpleFactor::dimension() const {
  switch (family_) {
    case Family::SpinOdd:
    case Family::SpinEven: return BigInt(param_) * (param_ - 1) / 2;
    case Family::Sp: return BigInt(param_) * (2 * param_ + 1);
    case Family::SL: return BigInt(degree_) * degree_ - 1;
    case Family::E6: return 78;
  }
  return 0;
}

std::string SimpleFactor::name() const {
  switch (family_) {
    case Family::SpinOdd:
    case Family::SpinEven: return "Spin(" + std::to_string(param_) + ")";
    case Family::Sp: return "Sp(" + std::to_string(2 * param_) + ")";
    case Family::SL: return "SL(" + std::to_string(degree_) + ")";
    case Family::E6: return "E6";
  }
  return "?";
}

std::vector<std::size_t> block_offsets(const std::vector<SimpleFactor>& factors) {
  std::vector<std::size_t> out;
  std::size_t at = 0;
  for (const auto& f : factors) {
    out.push_back(at);
    at += f.center_orders().size();
  }
  return out;
}

abelian::CyclicDecomposition product_center(const std::vector<SimpleFactor>& factors) {
  std::vector<std::int64_t> orders;
  for (const auto& f : factors)
    for (auto o : f.center_orders()) orders.push_back(o);
  return abelian::CyclicDecomposition(std::move(orders));
}

GroupSpec permute(const GroupSpec& spec, std::span<const std::size_t> order) {
  const auto offsets = block_offsets(spec.factors);
  GroupSpec out;
  for (auto i : order) out.factors.push_back(spec.factors[i]);
  for (const auto& g : spec.mu_generators) {
    abelian::Coords coords;
    for (auto i : order) {
      const std::size_t width = spec.factors[i].center_orders().size();
      for (std::size_t w = 0; w < width; ++w) coords.push_back(g.coords.at(offsets[i] + w));
    }
    out.mu_generators.push_back(GroupElement{std::move(coords)});
  }
  return out;
}

std::span<const std::int64_t> SemisimpleGroup::component(const Character& chi, std::size_t i) const {
  const std::size_t width = spec.factors[i].center_orders().size();
  return std::span<const std::int64_t>(chi.coords).subspan(offsets[i], width);
}

bool SemisimpleGroup::permuted() const {
  for (std::size_t i = 0; i < permutation.size(); ++i)
    if (permutation[i] != i) return true;
  return false;
}

SemisimpleGroup build(const GroupSpec& spec) {
  if (spec.factors.empty()) throw Error(ErrorKind::BadParameter, "no simple factors");

  const FamilyTag tag = spec.factors.front().tag();
  for (const auto& f : spec.factors) {
    if (f.tag() != tag)
      throw Error(ErrorKind::UnsupportedFamilyMix,
                  f.name() + " cannot be combined with " + spec.factors.front().name());
    if (tag == FamilyTag::A && f.sl_prime() != spec.factors.front().sl_prime())
      throw Error(ErrorKind::UnsupportedFamilyMix, "SL factors must share one prime");
  }

  const auto input_center = product_center(spec.factors);
  for (std::size_t g = 0; g < spec.mu_generators.size(); ++g) {
    try {
      abelian::validate(input_center, spec.mu_generators[g].coords);
    } catch (const Error& e) {
      throw Error(ErrorKind::MalformedMuGenerator,
                  "mu generator " + std::to_string(g) + ": " + e.detail());
    }
  }

  SemisimpleGroup out;
  out.permutation.resize(spec.factors.size());
  std::iota(out.permutation.begin(), out.permutation.end(), std::size_t{0});
  std::stable_sort(out.permutation.begin(), out.permutation.end(), [&](std::size_t a, std::size_t b) {
    return spec.factors[a].parameter() > spec.factors[b].parameter();
  });
  out.spec = permute(spec, out.permutation);
  out.offsets = block_offsets(out.spec.factors);
  out.center_tilde = product_center(out.spec.factors);
  out.family_tag = tag;
  switch (tag) {
    case FamilyTag::BD:
    case FamilyTag::C: out.prime = 2; break;
    case FamilyTag::A: out.prime = out.spec.factors.front().sl_prime(); break;
    case FamilyTag::E6: out.prime = 3; break;
  }
  out.dim_g = 0;
  for (const auto& f : out.spec.factors) out.dim_g += f.dimension();
  out.char_group = abelian::annihilator(out.center_tilde, out.spec.mu_generators);
  out.rank_z = out.char_group.rank();
  return out;
}

bool is_reduced(const SemisimpleGroup& g) {
  const auto& amb = g.center_tilde;
  auto in_mu = [&](const abelian::Coords& x) {
    // <mu> is the annihilator of Z(G)^*.
    for (const auto& chi : g.char_group.basis())
      if (abelian::pairing(amb, chi.coords, x) != 0) return false;
    return true;
  };
  for (std::size_t i = 0; i < g.factor_count(); ++i) {
    const std::size_t width = g.factor(i).center_orders().size();
    bool whole_center_in_mu = true;
    for (std::size_t w = 0; w < width && whole_center_in_mu; ++w) {
      abelian::Coords unit(amb.size(), 0);
      unit[g.offsets[i] + w] = 1;
      whole_center_in_mu = in_mu(unit);
    }
    if (whole_center_in_mu) return false;
  }
  return true;
}

std::vector<std::size_t> support(const std::vector<SimpleFactor>& factors, const Character& chi) {
  const auto offsets = block_offsets(factors);
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < factors.size(); ++i) {
    const std::size_t width = factors[i].center_orders().size();
    for (std::size_t w = 0; w < width; ++w)
      if (chi.coords.at(offsets[i] + w) != 0) {
        out.push_back(i);
        break;
      }
  }
  return out;
}

}  // namespace edim::catalog
