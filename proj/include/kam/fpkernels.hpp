#pragma once
#include <cstddef>
#include <cstdint>

namespace kam {

// Dense row kernels over F_p.  Rows hold canonical residues < p; p < 2^15 so
// a + c*b never overflows uint32_t.  The dispatched entry points pick an
// AVX2 variant at runtime when the CPU supports it, otherwise the scalar
// reference implementation.  Both variants must agree bit for bit.

// dst[i] = (dst[i] + c * src[i]) mod p
void fp_axpy_scalar(uint32_t* dst, const uint32_t* src, uint32_t c, size_t n, uint32_t p);
// dst[i] = (c * dst[i]) mod p
void fp_scale_scalar(uint32_t* dst, uint32_t c, size_t n, uint32_t p);

#ifdef KAM_BUILD_AVX2
void fp_axpy_avx2(uint32_t* dst, const uint32_t* src, uint32_t c, size_t n, uint32_t p);
void fp_scale_avx2(uint32_t* dst, uint32_t c, size_t n, uint32_t p);
#endif

extern void (*fp_axpy)(uint32_t*, const uint32_t*, uint32_t, size_t, uint32_t);
extern void (*fp_scale)(uint32_t*, uint32_t, size_t, uint32_t);

const char* fp_kernel_backend();  // "avx2" or "scalar"

}  // namespace kam
