#pragma once

// Tabulated representation data per simple factor and center-character
// component: the chosen representation V(chi_i), its dimension, and the gcd
// invariant n(chi_i).

#include <span>
#include <string>
#include <vector>

#include "edim/catalog.hpp"

namespace edim::repdata {

using catalog::SemisimpleGroup;
using catalog::SimpleFactor;

enum class RepTag {
  Trivial,
  Spin,
  HalfSpinPlus,
  HalfSpinMinus,
  Vector,
  ExtPower,
  MinusculePlus,
  MinusculeMinus,
};

struct RepChoice {
  RepTag tag = RepTag::Trivial;
  /// c for ExtPower(c); 0 otherwise.
  std::int64_t exterior_degree = 0;
  BigInt dimension = 1;

  bool is_spin_type() const noexcept {
    return tag == RepTag::Spin || tag == RepTag::HalfSpinPlus || tag == RepTag::HalfSpinMinus;
  }
  friend bool operator==(const RepChoice&, const RepChoice&) = default;
};

/// "spin", "half-spin+", "vector", "ext^3", ...
std::string to_string(const RepChoice& rep);

enum class Validity {
  Exact,
  /// A representation dimension that bounds n(chi) from above but is not
  /// known to equal it (Sp(2n) with n not a power of 2).
  UpperBoundOnly,
};

struct NValue {
  BigInt value = 1;
  Validity validity = Validity::Exact;
};

/// Throws UnsupportedComponent for SL components outside {0, 1, p^k - 1}
/// and MalformedElement for components outside the factor's center.
RepChoice rep_choice(const SimpleFactor& f, std::span<const std::int64_t> c);
BigInt rep_dimension(const SimpleFactor& f, std::span<const std::int64_t> c);
NValue n_component(const SimpleFactor& f, std::span<const std::int64_t> c);

/// True iff the component is one the tables cover.
bool supported_component(const SimpleFactor& f, std::span<const std::int64_t> c);

/// Product over factors; the validity is the worst of the components.
NValue n_char(const SemisimpleGroup& g, const abelian::Character& chi);
/// dim of the tensor product of the V(chi_i).
BigInt dim_V(const SemisimpleGroup& g, const abelian::Character& chi);
std::vector<RepChoice> rep_choices(const SemisimpleGroup& g, const abelian::Character& chi);

}  // namespace edim::repdata
