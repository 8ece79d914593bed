#pragma once

// Distance-row kernels behind the resolving-set and gate predicates.
//
// Every row pointer must be readable for the next multiple of 32 past `n`
// (DistanceMatrix pads its rows that way). Lanes at or beyond `n` never
// appear in any result.

#include <cstddef>
#include <cstdint>
#include <string_view>

namespace mdim::kernels {

struct KernelTable {
  std::string_view name;

  /// Smallest v in [begin, n) with rows[i][v] == keys[i] for every i < count; n if none.
  std::size_t (*first_tied)(const std::uint16_t* const* rows, const std::uint16_t* keys,
                            std::size_t count, std::size_t begin, std::size_t n);

  /// Bit v of out (32 vertices per word) is set iff
  /// rows[i][v] == uint16(via[v] + offsets[i]) for every i < count.
  void (*through_mask)(const std::uint16_t* const* rows, const std::uint16_t* via,
                       const std::uint16_t* offsets, std::size_t count, std::size_t n,
                       std::uint32_t* out);
};

const KernelTable& scalar();

/// nullptr when the AVX2 variant was not compiled in or the CPU lacks AVX2.
const KernelTable* avx2();

/// Table picked at first use: AVX2 when available, unless MDIM_KERNELS=scalar.
const KernelTable& active();

/// Overrides the active table (tests and benchmarks).
void set_active(const KernelTable& table);

}  // namespace mdim::kernels
