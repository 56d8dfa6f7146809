#include "kam/fpkernels.hpp"

#include <immintrin.h>

namespace kam {

namespace {

// Barrett step: r = t - p * mulhi32(t, M) with M = floor(2^32 / p) leaves
// r in [0, 2p) for t < 2^30, so one conditional subtract finishes it.
inline __m256i mulhi_epu32(__m256i a, __m256i b) {
    // Even-lane products end up with their high words in lanes 0,2,4,6 after
    // the shift; odd-lane products already carry theirs in lanes 1,3,5,7.
    __m256i even = _mm256_srli_epi64(_mm256_mul_epu32(a, b), 32);
    __m256i odd = _mm256_mul_epu32(_mm256_srli_epi64(a, 32), _mm256_srli_epi64(b, 32));
    return _mm256_blend_epi32(even, odd, 0xAA);
}

inline __m256i barrett(__m256i t, __m256i vp, __m256i vm) {
    __m256i q = mulhi_epu32(t, vm);
    __m256i r = _mm256_sub_epi32(t, _mm256_mullo_epi32(q, vp));
    __m256i ge = _mm256_cmpgt_epi32(vp, r);  // p > r ? keep : subtract p
    return _mm256_sub_epi32(r, _mm256_andnot_si256(ge, vp));
}

}  // namespace

void fp_axpy_avx2(uint32_t* dst, const uint32_t* src, uint32_t c, size_t n, uint32_t p) {
    const uint32_t M = uint32_t(0x100000000ull / p);
    const __m256i vp = _mm256_set1_epi32(int(p));
    const __m256i vm = _mm256_set1_epi32(int(M));
    const __m256i vc = _mm256_set1_epi32(int(c));
    size_t i = 0;
    for (; i + 8 <= n; i += 8) {
        __m256i d = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(dst + i));
        __m256i s = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(src + i));
        __m256i t = _mm256_add_epi32(d, _mm256_mullo_epi32(vc, s));
        _mm256_storeu_si256(reinterpret_cast<__m256i*>(dst + i), barrett(t, vp, vm));
    }
    for (; i < n; ++i) dst[i] = (dst[i] + c * src[i]) % p;
}

void fp_scale_avx2(uint32_t* dst, uint32_t c, size_t n, uint32_t p) {
    const uint32_t M = uint32_t(0x100000000ull / p);
    const __m256i vp = _mm256_set1_epi32(int(p));
    const __m256i vm = _mm256_set1_epi32(int(M));
    const __m256i vc = _mm256_set1_epi32(int(c));
    size_t i = 0;
    for (; i + 8 <= n; i += 8) {
        __m256i d = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(dst + i));
        __m256i t = _mm256_mullo_epi32(vc, d);
        _mm256_storeu_si256(reinterpret_cast<__m256i*>(dst + i), barrett(t, vp, vm));
    }
    for (; i < n; ++i) dst[i] = (c * dst[i]) % p;
}

}  // namespace kam
