#pragma once

// Bounds and exact values of ed(G) and ed(G_red).
//
//   upper:  sum over a minimal generating set B of Z(G)^* of dim V_chi, minus
//           dim G, provided a subset B0 of generically free characters covers
//           every factor. The reductive envelope loses rank Z(G) more.
//   lower:  min over bases of the p-socle dual C^* of sum n(chi-bar), minus dim G.
//   exact:  the two agree when the lifts of an index-minimal basis have
//           dim V_chi = n(chi-bar).

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "edim/basis_search.hpp"

namespace edim::engine {

using abelian::Character;
using abelian::GroupElement;
using catalog::GroupSpec;
using catalog::SemisimpleGroup;

struct BasisEntry {
  Character character;
  Character socle_image;
  BigInt n_socle;
  bool n_socle_exact = true;
  BigInt dim_v;
  /// One label per factor, e.g. "half-spin+", "trivial".
  std::vector<std::string> reps;
  std::vector<std::size_t> support;
  freeness::FreenessVerdict verdict;
  bool in_b0 = false;

  friend bool operator==(const BasisEntry&, const BasisEntry&) = default;
};

struct ExtensionInfo {
  GroupElement nu;
  Character omega;
  BigInt n_h_omega;
  BigInt ed_g;
  GroupSpec g_spec;

  friend bool operator==(const ExtensionInfo&, const ExtensionInfo&) = default;
};

struct EdReport {
  /// Canonical (sorted) spec of the group.
  GroupSpec group;
  std::vector<std::size_t> permutation;
  catalog::FamilyTag family = catalog::FamilyTag::BD;
  std::int64_t prime = 2;
  BigInt dim_g;
  std::size_t rank_z = 0;
  /// Invariant factors of Z(G).
  std::vector<std::int64_t> center_structure;
  std::vector<BasisEntry> basis;
  std::vector<std::size_t> b0;
  std::optional<BigInt> lower;
  std::optional<BigInt> upper;
  bool exact = false;
  std::optional<BigInt> ed;
  std::optional<BigInt> ed_red_upper;
  bool ed_red_exact = false;
  std::optional<BigInt> ed_red;
  std::optional<BigInt> index_minimal_score;
  std::vector<std::string> caveats;
  std::vector<std::string> hypothesis_failures;
  std::optional<ExtensionInfo> extension;

  friend bool operator==(const EdReport&, const EdReport&) = default;
};

/// Sum of dim V_chi over `basis` minus dim G. `b0` indexes into `basis`.
/// Throws HypothesisFailed unless |basis| = rank Z(G), the basis generates
/// Z(G)^*, every member of b0 is generically free and b0 covers all factors.
BigInt upper_bound(const SemisimpleGroup& g, const std::vector<Character>& basis,
                   const std::vector<std::size_t>& b0);
BigInt upper_bound_red(const SemisimpleGroup& g, const std::vector<Character>& basis,
                       const std::vector<std::size_t>& b0);

/// Index-minimal score minus dim G (raw, possibly negative). Throws
/// TrivialSocle; HypothesisFailed if the n-table is not exact.
BigInt lower_bound(const SemisimpleGroup& g, std::int64_t p);

/// Report for a lifted basis. Never throws on failed premises: they are
/// recorded in hypothesis_failures and exact stays false.
EdReport certify_exact(const SemisimpleGroup& g, std::int64_t p, const std::vector<Character>& basis,
                       const std::vector<std::size_t>& b0);

/// Full pipeline. `prime` overrides the family prime.
/// Errors: NotReduced, UnsupportedFamilyMix, parameter errors, TrivialSocle.
EdReport compute_ed(const GroupSpec& spec, std::optional<std::int64_t> prime = std::nullopt);

/// ed(H) from ed(H / nu). `nu` is in the center coordinates of h_spec as given.
/// Throws ExtensionHypothesisFailed when nu does not generate a subgroup of
/// order p of Z(H); later failed premises give a bounds-only report for H.
EdReport extend_ed(const GroupSpec& h_spec, const GroupElement& nu,
                   std::optional<std::int64_t> prime = std::nullopt);

/// True iff every invariant factor of Z(G) is a power of p.
bool center_is_p_group(const SemisimpleGroup& g, std::int64_t p);

}  // namespace edim::engine
