#pragma once

#include "radialens/kernels.hpp"

// Internal registry of kernel backends. Not part of the public surface.

namespace radialens::kernels {

namespace scalar {
extern const Backend backend;
}

#if defined(__x86_64__) || defined(_M_X64)
#define RADIALENS_HAVE_AVX2_BUILD 1
namespace avx2 {
extern const Backend backend;
bool supported();  // CPUID check
}
#else
#define RADIALENS_HAVE_AVX2_BUILD 0
#endif

}  // namespace radialens::kernels
