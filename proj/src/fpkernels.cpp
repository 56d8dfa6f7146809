#include "kam/fpkernels.hpp"

namespace kam {

void fp_axpy_scalar(uint32_t* dst, const uint32_t* src, uint32_t c, size_t n, uint32_t p) {
    for (size_t i = 0; i < n; ++i) dst[i] = (dst[i] + c * src[i]) % p;
}

void fp_scale_scalar(uint32_t* dst, uint32_t c, size_t n, uint32_t p) {
    for (size_t i = 0; i < n; ++i) dst[i] = (c * dst[i]) % p;
}

namespace {

bool have_avx2() {
#if defined(KAM_BUILD_AVX2) && defined(__x86_64__)
    return __builtin_cpu_supports("avx2");
#else
    return false;
#endif
}

using AxpyFn = void (*)(uint32_t*, const uint32_t*, uint32_t, size_t, uint32_t);
using ScaleFn = void (*)(uint32_t*, uint32_t, size_t, uint32_t);

AxpyFn pick_axpy() {
#ifdef KAM_BUILD_AVX2
    if (have_avx2()) return fp_axpy_avx2;
#endif
    return fp_axpy_scalar;
}

ScaleFn pick_scale() {
#ifdef KAM_BUILD_AVX2
    if (have_avx2()) return fp_scale_avx2;
#endif
    return fp_scale_scalar;
}

}  // namespace

void (*fp_axpy)(uint32_t*, const uint32_t*, uint32_t, size_t, uint32_t) = pick_axpy();
void (*fp_scale)(uint32_t*, uint32_t, size_t, uint32_t) = pick_scale();

const char* fp_kernel_backend() { return have_avx2() ? "avx2" : "scalar"; }

}  // namespace kam
