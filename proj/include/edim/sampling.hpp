#pragma once

// Random reduced group specs for property checks.

#include <cstdint>
#include <random>

#include "edim/catalog.hpp"

namespace edim::sampling {

/// A random reduced spec whose socle dual at the family prime has at most
/// `max_socle_order` elements and every socle class has a lift with
/// tabulated components. Draws until one qualifies.
catalog::GroupSpec random_reduced_spec(std::mt19937_64& rng, std::int64_t max_socle_order);

}  // namespace edim::sampling
