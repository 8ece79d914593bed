#include "kernels_impl.hpp"

namespace mdim::kernels {

namespace {

std::size_t first_tied_scalar(const std::uint16_t* const* rows, const std::uint16_t* keys,
                              std::size_t count, std::size_t begin, std::size_t n) {
  for (std::size_t v = begin; v < n; ++v) {
    std::size_t i = 0;
    while (i < count && rows[i][v] == keys[i]) ++i;
    if (i == count) return v;
  }
  return n;
}

void through_mask_scalar(const std::uint16_t* const* rows, const std::uint16_t* via,
                         const std::uint16_t* offsets, std::size_t count, std::size_t n,
                         std::uint32_t* out) {
  const std::size_t words = (n + 31) / 32;
  for (std::size_t w = 0; w < words; ++w) out[w] = 0;
  for (std::size_t v = 0; v < n; ++v) {
    std::size_t i = 0;
    while (i < count && rows[i][v] == static_cast<std::uint16_t>(via[v] + offsets[i])) ++i;
    if (i == count) out[v / 32] |= std::uint32_t{1} << (v % 32);
  }
}

}  // namespace

const KernelTable& scalar() {
  static const KernelTable table{"scalar", &first_tied_scalar, &through_mask_scalar};
  return table;
}

}  // namespace mdim::kernels
