#include "twrep/simd/modp_kernels.hpp"

#if defined(__x86_64__) || defined(_M_X64)
#define TWREP_HAVE_AVX2_PATH 1
#include <immintrin.h>
#else
#define TWREP_HAVE_AVX2_PATH 0
#endif

namespace twrep::simd {

#if TWREP_HAVE_AVX2_PATH
namespace {

// Shoup multiplication: with w' = floor(w * 2^32 / p) and p < 2^31,
// w*s - floor(w'*s / 2^32)*p lies in [0, 2p) for every s < 2^32.
__attribute__((target("avx2"))) inline __m256i mulmod_shoup(__m256i s, __m256i w, __m256i w_shoup,
                                                            __m256i pv) {
    __m256i lo = _mm256_mullo_epi32(s, w);
    __m256i prod_even = _mm256_mul_epu32(s, w_shoup);
    __m256i prod_odd = _mm256_mul_epu32(_mm256_srli_epi64(s, 32), w_shoup);
    __m256i q = _mm256_blend_epi32(_mm256_srli_epi64(prod_even, 32), prod_odd, 0xAA);
    __m256i r = _mm256_sub_epi32(lo, _mm256_mullo_epi32(q, pv));
    return _mm256_min_epu32(r, _mm256_sub_epi32(r, pv));
}

__attribute__((target("avx2"))) void axpy_avx2(std::uint32_t* dst, const std::uint32_t* src,
                                               std::size_t n, std::uint32_t c, std::uint32_t p) {
    const auto c_shoup =
        static_cast<std::uint32_t>((static_cast<std::uint64_t>(c) << 32) / p);
    const __m256i wv = _mm256_set1_epi32(static_cast<int>(c));
    const __m256i wsv = _mm256_set1_epi32(static_cast<int>(c_shoup));
    const __m256i pv = _mm256_set1_epi32(static_cast<int>(p));
    std::size_t i = 0;
    for (; i + 8 <= n; i += 8) {
        __m256i s = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(src + i));
        __m256i d = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(dst + i));
        __m256i t = _mm256_add_epi32(d, mulmod_shoup(s, wv, wsv, pv));
        t = _mm256_min_epu32(t, _mm256_sub_epi32(t, pv));
        _mm256_storeu_si256(reinterpret_cast<__m256i*>(dst + i), t);
    }
    for (; i < n; ++i) {
        std::uint64_t v = static_cast<std::uint64_t>(c) * src[i] + dst[i];
        dst[i] = static_cast<std::uint32_t>(v % p);
    }
}

__attribute__((target("avx2"))) void scale_avx2(std::uint32_t* row, std::size_t n,
                                                std::uint32_t c, std::uint32_t p) {
    const auto c_shoup =
        static_cast<std::uint32_t>((static_cast<std::uint64_t>(c) << 32) / p);
    const __m256i wv = _mm256_set1_epi32(static_cast<int>(c));
    const __m256i wsv = _mm256_set1_epi32(static_cast<int>(c_shoup));
    const __m256i pv = _mm256_set1_epi32(static_cast<int>(p));
    std::size_t i = 0;
    for (; i + 8 <= n; i += 8) {
        __m256i s = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(row + i));
        _mm256_storeu_si256(reinterpret_cast<__m256i*>(row + i), mulmod_shoup(s, wv, wsv, pv));
    }
    for (; i < n; ++i)
        row[i] = static_cast<std::uint32_t>(static_cast<std::uint64_t>(c) * row[i] % p);
}

}  // namespace

const ModpKernels* avx2_kernels() {
    static const ModpKernels k{"avx2", &axpy_avx2, &scale_avx2};
    static const bool supported = __builtin_cpu_supports("avx2");
    return supported ? &k : nullptr;
}

#else

const ModpKernels* avx2_kernels() { return nullptr; }

#endif

}  // namespace twrep::simd
