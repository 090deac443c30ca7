#pragma once

// Index-minimal bases of the p-socle dual C^* = Z(G)^* / p Z(G)^*: bases of
// the F_p-vector space C^* minimizing the sum of n over their members, where
// n of a socle character is the gcd of n over all of its lifts to Z(G)^*.

#include <cstddef>
#include <optional>
#include <vector>

#include "edim/freeness.hpp"
#include "edim/repdata.hpp"

namespace edim::basis_search {

using abelian::Character;
using catalog::SemisimpleGroup;

/// n of one nonzero socle character.
struct SocleEntry {
  Character socle;
  repdata::NValue n;
  /// Every lift has tabulated components (otherwise n is a gcd over a subset
  /// and only bounds the true value from above).
  bool complete = true;
  /// At least one lift has tabulated components.
  bool available = true;

  bool exact() const noexcept { return available && complete && n.validity == repdata::Validity::Exact; }
};

class SocleTable {
 public:
  /// Throws TrivialSocle when p does not divide |Z(G)|.
  SocleTable(const SemisimpleGroup& g, std::int64_t p);

  const abelian::SocleDual& socle() const noexcept { return socle_; }
  std::size_t rank() const noexcept { return socle_.rank(); }
  std::int64_t prime() const noexcept { return socle_.prime(); }
  /// Nonzero socle characters in lexicographic order.
  const std::vector<SocleEntry>& entries() const noexcept { return entries_; }
  const SocleEntry& lookup(const Character& socle_char) const;
  /// True iff every entry is exact.
  bool all_exact() const noexcept { return all_exact_; }

 private:
  abelian::SocleDual socle_;
  std::vector<SocleEntry> entries_;
  bool all_exact_ = true;
};

/// n(chi-bar) as the gcd of n_char over the tabulated lifts of chi-bar.
SocleEntry socle_n(const SemisimpleGroup& g, const abelian::SocleDual& socle, const Character& socle_char);

/// True iff the vectors are linearly independent over F_p.
bool independent_mod_p(const std::vector<Character>& vectors, std::int64_t p);

struct BasisCandidate {
  /// Lifts in Z(G)^*; filled with the canonical representatives by
  /// index_minimal_basis and replaced by lift_basis.
  std::vector<Character> chars;
  std::vector<Character> socle_images;
  BigInt score;
  /// Per character: components satisfy the exactness rules of the family.
  std::vector<bool> flags;
};

struct SearchResult {
  BigInt best_score;
  /// Optimal socle bases in lexicographic order (at most `limit`).
  std::vector<std::vector<Character>> optimal;
  /// The table was exact everywhere, so best_score is the true minimum.
  bool certified = true;
};

/// Branch-and-bound over r-subsets of C^* in lexicographic order.
SearchResult index_minimal_bases(const SocleTable& table, std::size_t limit = 64);

/// The lexicographically first index-minimal basis. Throws TrivialSocle.
BasisCandidate index_minimal_basis(const SemisimpleGroup& g, std::int64_t p);

/// Every basis of C^* (as sorted subsets), up to `cap`, with its score.
std::vector<std::pair<BigInt, std::vector<Character>>> all_bases(const SocleTable& table,
                                                                  std::size_t cap);

/// Unpruned minimum of sum n over generating sets of size r, computed by
/// enumerating Z(G)^* and its cosets directly. Test oracle; throws TooLarge
/// beyond |C^*| = 3^8 or when the enumeration would be too long.
BigInt brute_force_min(const SemisimpleGroup& g, std::int64_t p);

enum class LiftMode {
  /// Components also satisfy the rules that make dim V_chi = n(chi):
  /// B/D no component 2 and (1,1) only on Spin(2^k).
  Exact,
  /// Any representation with central character chi (SL still restricted to
  /// tabulated components).
  Relaxed,
};

bool satisfies_rules(const SemisimpleGroup& g, const Character& chi, LiftMode mode);

struct LiftOption {
  Character chi;
  BigInt dim_v;
  freeness::FreenessVerdict verdict;
  std::vector<std::size_t> support;
};

/// Admissible lifts of one socle character, ordered by (dim V, free first, lex).
std::vector<LiftOption> lift_options(const SemisimpleGroup& g, const abelian::SocleDual& socle,
                                     const Character& socle_char, LiftMode mode);

/// One admissible lift per socle basis element (the first lift_option).
/// Throws NoAdmissibleLift naming the element and the violated rule.
std::vector<Character> lift_basis(const SemisimpleGroup& g, const abelian::SocleDual& socle,
                                  const std::vector<Character>& socle_basis, LiftMode mode);

/// Smallest subset B0 of `basis` whose members are all generically free and
/// whose supports cover every factor; lexicographically first among equals.
std::optional<std::vector<std::size_t>> select_b0(const SemisimpleGroup& g,
                                                  const std::vector<Character>& basis);

}  // namespace edim::basis_search
