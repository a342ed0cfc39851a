#pragma once

#include <random>

#include "hopf/chain_complex.hpp"

namespace hopf {

/// Seeded random complex over Z for property suites: a direct sum of
/// elementary pieces (Z, or Z --1--> Z, or Z --2--> Z) in degrees 0..3,
/// conjugated by random unimodular base changes. Every module has rank <= 3
/// and every differential entry lies in [-2, 2].
ChainComplex random_complex(std::mt19937& rng);

}  // namespace hopf
