#pragma once

#include <cstddef>
#include <cstdint>

#include "distinguo/game.hpp"

namespace distinguo::detail {

/// Minimal renamed word of `colors` over the `order` packed permutations of
/// degree n. `best` receives n entries.
void canonical_word(const std::uint8_t* colors, int n, const std::uint8_t* packed,
                    std::size_t order, std::uint8_t* best);

StateKey canonical_key(const std::uint8_t* colors, int n, const std::uint8_t* packed,
                       std::size_t order, std::uint8_t to_move);

}  // namespace distinguo::detail
