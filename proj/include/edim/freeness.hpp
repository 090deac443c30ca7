#pragma once

// Generic freeness of the tensor representations V_chi. For B/D this is
// membership in the classification table of non-generically free tensor
// products of (half-)spin and vector representations; for C, A and E6 it is
// a closed-form criterion on the support of chi. For these homogeneous
// families freeness of V and of P(V) coincide, so one verdict serves both.

#include <cstdint>
#include <string>
#include <vector>

#include "edim/repdata.hpp"

namespace edim::freeness {

enum class Reason {
  NotInTable,
  TableRow,
  TypeCCriterion,
  TypeACriterion,
  E6Criterion,
  CriterionFailed,
};

struct FreenessVerdict {
  bool free = false;
  Reason reason = Reason::CriterionFailed;
  /// Table row (1-10) when reason == TableRow.
  int row = 0;
  std::string detail;

  friend bool operator==(const FreenessVerdict&, const FreenessVerdict&) = default;
};

std::string to_string(const FreenessVerdict& v);

/// One factor of a B/D tensor product: Spin(n) with a (half-)spin or vector rep.
struct SpinRep {
  std::int64_t n = 0;
  repdata::RepTag tag = repdata::RepTag::Spin;
};

/// Trivial-tagged entries are ignored. Throws NotSpinFamily for tags that do
/// not belong to a spin group.
FreenessVerdict check_bd(std::vector<SpinRep> factors);
/// Ranks n of the Sp(2n) factors in the support of chi.
FreenessVerdict check_c(std::vector<std::int64_t> ranks);
/// Exponents k of the SL(p^k) factors in the support of chi.
FreenessVerdict check_a(std::int64_t p, std::vector<std::int64_t> exponents);
FreenessVerdict check_e6(std::size_t support_size);

/// Dispatches on the family of g using the representation chosen for chi.
FreenessVerdict check_character(const catalog::SemisimpleGroup& g, const abelian::Character& chi);

}  // namespace edim::freeness
