#include "edim/repdata.hpp"

namespace edim::repdata {

using catalog::Family;

namespace {

bool is_power_of_two(std::int64_t n) { return n > 0 && (n & (n - 1)) == 0; }

std::int64_t two_adic_part(std::int64_t n) { return n & (-n); }

void check_shape(const SimpleFactor& f, std::span<const std::int64_t> c) {
  const auto orders = f.center_orders();
  if (c.size() != orders.size())
    throw Error(ErrorKind::MalformedElement, f.name() + " expects " + std::to_string(orders.size()) +
                                                 " center coordinate(s)");
  for (std::size_t i = 0; i < c.size(); ++i)
    if (c[i] < 0 || c[i] >= orders[i])
      throw Error(ErrorKind::MalformedElement,
                  "component " + std::to_string(c[i]) + " outside the center of " + f.name());
}

bool is_zero(std::span<const std::int64_t> c) {
  for (auto v : c)
    if (v != 0) return false;
  return true;
}

}  // namespace

std::string to_string(const RepChoice& rep) {
  switch (rep.tag) {
    case RepTag::Trivial: return "trivial";
    case RepTag::Spin: return "spin";
    case RepTag::HalfSpinPlus: return "half-spin+";
    case RepTag::HalfSpinMinus: return "half-spin-";
    case RepTag::Vector: return "vector";
    case RepTag::ExtPower: return "ext^" + std::to_string(rep.exterior_degree);
    case RepTag::MinusculePlus: return "minuscule+";
    case RepTag::MinusculeMinus: return "minuscule-";
  }
  return "?";
}

bool supported_component(const SimpleFactor& f, std::span<const std::int64_t> c) {
  if (f.family() != Family::SL) return true;
  return c[0] == 0 || c[0] == 1 || c[0] == f.sl_degree() - 1;
}

RepChoice rep_choice(const SimpleFactor& f, std::span<const std::int64_t> c) {
  check_shape(f, c);
  if (is_zero(c)) return {};
  const std::int64_t n = f.parameter();
  switch (f.family()) {
    case Family::SpinOdd:
      return {RepTag::Spin, 0, pow_big(2, (n - 1) / 2)};
    case Family::SpinEven: {
      const bool vector = (c.size() == 1) ? c[0] == 2 : (c[0] == 1 && c[1] == 1);
      if (vector) return {RepTag::Vector, 0, BigInt(n)};
      const bool plus = (c.size() == 1) ? c[0] == 1 : c[0] == 1;
      return {plus ? RepTag::HalfSpinPlus : RepTag::HalfSpinMinus, 0, pow_big(2, (n - 2) / 2)};
    }
    case Family::Sp:
      return {RepTag::Vector, 0, BigInt(2 * n)};
    case Family::SL:
      if (!supported_component(f, c))
        throw Error(ErrorKind::UnsupportedComponent,
                    f.name() + " component " + std::to_string(c[0]) + " is not 0, 1 or " +
                        std::to_string(f.sl_degree() - 1));
      return {RepTag::ExtPower, c[0], BigInt(f.sl_degree())};
    case Family::E6:
      return {c[0] == 1 ? RepTag::MinusculePlus : RepTag::MinusculeMinus, 0, BigInt(27)};
  }
  return {};
}

BigInt rep_dimension(const SimpleFactor& f, std::span<const std::int64_t> c) {
  return rep_choice(f, c).dimension;
}

NValue n_component(const SimpleFactor& f, std::span<const std::int64_t> c) {
  const RepChoice rep = rep_choice(f, c);
  switch (rep.tag) {
    case RepTag::Trivial: return {1, Validity::Exact};
    case RepTag::Vector:
      if (f.is_spin()) return {BigInt(two_adic_part(f.parameter())), Validity::Exact};
      // Sp(2n): 2n is the gcd only when n is a power of 2.
      return {rep.dimension, is_power_of_two(f.parameter()) ? Validity::Exact : Validity::UpperBoundOnly};
    default:
      return {rep.dimension, Validity::Exact};
  }
}

NValue n_char(const SemisimpleGroup& g, const abelian::Character& chi) {
  NValue out;
  for (std::size_t i = 0; i < g.factor_count(); ++i) {
    const NValue part = n_component(g.factor(i), g.component(chi, i));
    out.value *= part.value;
    if (part.validity != Validity::Exact) out.validity = part.validity;
  }
  return out;
}

BigInt dim_V(const SemisimpleGroup& g, const abelian::Character& chi) {
  BigInt out = 1;
  for (std::size_t i = 0; i < g.factor_count(); ++i)
    out *= rep_dimension(g.factor(i), g.component(chi, i));
  return out;
}

std::vector<RepChoice> rep_choices(const SemisimpleGroup& g, const abelian::Character& chi) {
  std::vector<RepChoice> out;
  for (std::size_t i = 0; i < g.factor_count(); ++i)
    out.push_back(rep_choice(g.factor(i), g.component(chi, i)));
  return out;
}

}  // namespace edim::repdata
