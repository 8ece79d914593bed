// Compiled with -mavx2; only reached after a runtime CPU check.
#include "kernels_impl.hpp"

#include <immintrin.h>

namespace mdim::kernels {

namespace {

// Packs two 16-lane all-ones/all-zeros masks into one bit per lane, lane order preserved.
inline std::uint32_t movemask_epi16x2(__m256i lo, __m256i hi) {
  __m256i packed = _mm256_packs_epi16(lo, hi);
  packed = _mm256_permute4x64_epi64(packed, 0xD8);
  return static_cast<std::uint32_t>(_mm256_movemask_epi8(packed));
}

inline std::uint32_t lane_window(std::size_t base, std::size_t begin, std::size_t n) {
  std::uint32_t mask = ~std::uint32_t{0};
  if (begin > base) mask &= ~std::uint32_t{0} << (begin - base);
  if (n < base + 32) mask &= (std::uint32_t{1} << (n - base)) - 1;
  return mask;
}

std::size_t first_tied_avx2(const std::uint16_t* const* rows, const std::uint16_t* keys,
                            std::size_t count, std::size_t begin, std::size_t n) {
  const __m256i ones = _mm256_set1_epi16(-1);
  for (std::size_t base = begin / 32 * 32; base < n; base += 32) {
    __m256i acc_lo = ones;
    __m256i acc_hi = ones;
    for (std::size_t i = 0; i < count; ++i) {
      const __m256i key = _mm256_set1_epi16(static_cast<short>(keys[i]));
      const auto* p = reinterpret_cast<const __m256i*>(rows[i] + base);
      acc_lo = _mm256_and_si256(acc_lo, _mm256_cmpeq_epi16(_mm256_loadu_si256(p), key));
      acc_hi = _mm256_and_si256(acc_hi, _mm256_cmpeq_epi16(_mm256_loadu_si256(p + 1), key));
      if (_mm256_testz_si256(_mm256_or_si256(acc_lo, acc_hi), ones)) break;
    }
    const std::uint32_t bits = movemask_epi16x2(acc_lo, acc_hi) & lane_window(base, begin, n);
    if (bits != 0) return base + static_cast<std::size_t>(__builtin_ctz(bits));
  }
  return n;
}

void through_mask_avx2(const std::uint16_t* const* rows, const std::uint16_t* via,
                       const std::uint16_t* offsets, std::size_t count, std::size_t n,
                       std::uint32_t* out) {
  const __m256i ones = _mm256_set1_epi16(-1);
  for (std::size_t base = 0; base < n; base += 32) {
    const auto* vp = reinterpret_cast<const __m256i*>(via + base);
    const __m256i via_lo = _mm256_loadu_si256(vp);
    const __m256i via_hi = _mm256_loadu_si256(vp + 1);
    __m256i acc_lo = ones;
    __m256i acc_hi = ones;
    for (std::size_t i = 0; i < count; ++i) {
      const __m256i off = _mm256_set1_epi16(static_cast<short>(offsets[i]));
      const auto* p = reinterpret_cast<const __m256i*>(rows[i] + base);
      acc_lo = _mm256_and_si256(
          acc_lo, _mm256_cmpeq_epi16(_mm256_loadu_si256(p), _mm256_add_epi16(via_lo, off)));
      acc_hi = _mm256_and_si256(
          acc_hi, _mm256_cmpeq_epi16(_mm256_loadu_si256(p + 1), _mm256_add_epi16(via_hi, off)));
    }
    out[base / 32] = movemask_epi16x2(acc_lo, acc_hi) & lane_window(base, 0, n);
  }
}

}  // namespace

const KernelTable& avx2_table() {
  static const KernelTable table{"avx2", &first_tied_avx2, &through_mask_avx2};
  return table;
}

}  // namespace mdim::kernels
