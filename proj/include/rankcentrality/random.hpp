#pragma once

#include <cstdint>
#include <initializer_list>
#include <random>
#include <string_view>

namespace rankcentrality {

// Every random draw in the library goes through an explicitly passed engine.
using Rng = std::mt19937_64;

// Folds the parts into base with splitmix64 finalization. Used to derive
// independent per-trial streams from one user seed.
std::uint64_t derive_seed(std::uint64_t base,
                          std::initializer_list<std::uint64_t> parts);

// FNV-1a, for mixing string labels into derive_seed.
std::uint64_t label_hash(std::string_view label);

}  // namespace rankcentrality
