#pragma once

// Simple factors of types A, B, C, D, E6 and the semisimple groups
// (G~_1 x ... x G~_m) / mu built from them.
//
// Center coordinate convention (additive, one block per factor):
//   Spin(n), n odd       Z/2      1 -> spin rep V(n)
//   Spin(n), n = 2 mod 4 Z/4      1, 3 -> half-spins V(n)+-, 2 -> vector W(n)
//   Spin(n), n = 0 mod 4 Z/2+Z/2  (1,0), (0,1) -> half-spins, (1,1) -> vector
//   Sp(2n)               Z/2      1 -> W(2n)
//   SL(p^k)              Z/p^k    c -> exterior power c of W(p^k)
//   E6                   Z/3      1, 2 -> the two 27-dimensional minuscule reps
// In root-of-unity terms a primitive 4th root i of Z(Spin(4a+2)) is 1 and
// -1 is 2, so (i, -i) in mu_4 x mu_4 is written (1,3).

#include <compare>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "edim/abelian.hpp"

namespace edim::catalog {

using abelian::Character;
using abelian::GroupElement;

enum class Family { SpinOdd, SpinEven, Sp, SL, E6 };

/// Families that may be combined in one group.
enum class FamilyTag { BD, C, A, E6 };

std::string_view to_string(FamilyTag tag);

class SimpleFactor {
 public:
  /// Spin(n), n >= 3, n != 4.
  static SimpleFactor spin(std::int64_t n);
  /// Sp(2 * rank), rank >= 3.
  static SimpleFactor sp(std::int64_t rank);
  /// SL(p^k) for a prime p and k >= 1.
  static SimpleFactor sl(std::int64_t p, std::int64_t k);
  /// SL(q); q must be a prime power.
  static SimpleFactor sl_order(std::int64_t q);
  static SimpleFactor e6();

  Family family() const noexcept { return family_; }
  FamilyTag tag() const noexcept;
  bool is_spin() const noexcept { return family_ == Family::SpinOdd || family_ == Family::SpinEven; }

  /// n for Spin(n), the rank n for Sp(2n), k for SL(p^k), 0 for E6.
  std::int64_t parameter() const noexcept { return param_; }
  /// The prime of SL(p^k); 0 otherwise.
  std::int64_t sl_prime() const noexcept { return prime_; }
  /// p^k for SL(p^k).
  std::int64_t sl_degree() const noexcept { return degree_; }

  /// Cyclic orders of Z(G~), in block order.
  std::vector<std::int64_t> center_orders() const;
  std::int64_t center_order() const;
  BigInt dimension() const;
  /// "Spin(10)", "Sp(8)", "SL(8)", "E6".
  std::string name() const;

  friend bool operator==(const SimpleFactor&, const SimpleFactor&) = default;

 private:
  SimpleFactor(Family f, std::int64_t param, std::int64_t prime, std::int64_t degree)
      : family_(f), param_(param), prime_(prime), degree_(degree) {}

  Family family_;
  std::int64_t param_;
  std::int64_t prime_;
  std::int64_t degree_;
};

/// The user's description: factors in input order and generators of mu in
/// the flattened center coordinates of the product.
struct GroupSpec {
  std::vector<SimpleFactor> factors;
  std::vector<GroupElement> mu_generators;

  friend bool operator==(const GroupSpec&, const GroupSpec&) = default;
};

/// Position of each factor's block in the flattened center coordinates.
std::vector<std::size_t> block_offsets(const std::vector<SimpleFactor>& factors);
abelian::CyclicDecomposition product_center(const std::vector<SimpleFactor>& factors);

struct SemisimpleGroup {
  /// Factors sorted descending by parameter (stable), mu permuted to match.
  GroupSpec spec;
  /// permutation[i] is the input index of canonical factor i.
  std::vector<std::size_t> permutation;
  BigInt dim_g;
  abelian::CyclicDecomposition center_tilde;
  /// Z(G)^* realized as the annihilator of mu inside Z(G~)^*.
  abelian::CharacterGroup char_group;
  std::size_t rank_z = 0;
  FamilyTag family_tag = FamilyTag::BD;
  /// 2 for B/C/D, p for SL(p^k), 3 for E6.
  std::int64_t prime = 2;
  std::vector<std::size_t> offsets;

  std::size_t factor_count() const noexcept { return spec.factors.size(); }
  const SimpleFactor& factor(std::size_t i) const { return spec.factors[i]; }
  /// The coordinates of chi belonging to factor i.
  std::span<const std::int64_t> component(const Character& chi, std::size_t i) const;
  bool permuted() const;
};

/// Validates, canonicalizes factor order and computes the derived data.
/// Errors: UnsupportedFamilyMix, BadParameter, MalformedMuGenerator.
SemisimpleGroup build(const GroupSpec& spec);

/// False iff some factor's full center lies in <mu>, i.e. an adjoint factor splits off.
bool is_reduced(const SemisimpleGroup& g);

/// Indices of factors on which chi has a nonzero block.
std::vector<std::size_t> support(const std::vector<SimpleFactor>& factors, const Character& chi);

/// Reorders factors and mu blocks: new factor i is old factor order[i].
GroupSpec permute(const GroupSpec& spec, std::span<const std::size_t> order);

}  // namespace edim::catalog
