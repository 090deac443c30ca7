#pragma once

// Brute-force enumeration over small finite abelian groups. These share no
// code with the Smith-normal-form path and serve as test oracles for it.

#include <cstddef>
#include <set>
#include <vector>

#include "edim/abelian.hpp"

namespace edim::abelian::oracle {

inline constexpr std::size_t kEnumerationCap = std::size_t{1} << 20;

/// Every element of the ambient group in lexicographic order.
std::vector<Coords> enumerate(const CyclicDecomposition& ambient);

/// Subgroup generated by `generators`, by closing {0} under addition.
std::set<Coords> closure(const CyclicDecomposition& ambient, const std::vector<Coords>& generators);

/// Characters pairing to zero with every generator, by scanning the whole dual.
std::set<Coords> annihilator(const CyclicDecomposition& ambient,
                             const std::vector<Coords>& generators);

/// Largest element order in a set.
std::int64_t exponent(const CyclicDecomposition& ambient, const std::set<Coords>& elements);

}  // namespace edim::abelian::oracle
