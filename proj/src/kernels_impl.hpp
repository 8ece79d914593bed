#pragma once

#include "mdim/kernels.hpp"

namespace mdim::kernels {

#if defined(MDIM_HAVE_AVX2)
const KernelTable& avx2_table();
#endif

}  // namespace mdim::kernels
