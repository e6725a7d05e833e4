#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

namespace polarfade {

/// Hard bits, one per entry, each 0 or 1.
using BitVector = std::vector<std::uint8_t>;

/// Soft decoder input: a log-likelihood ratio log(P[bit=0]/P[bit=1]) or an
/// explicit erasure. An erased symbol carries the same information as LLR 0.
using SoftSymbol = std::optional<double>;
using SoftVector = std::vector<SoftSymbol>;

inline constexpr SoftSymbol kErased = std::nullopt;

inline bool is_power_of_two(std::size_t x) { return x != 0 && (x & (x - 1)) == 0; }

}  // namespace polarfade
