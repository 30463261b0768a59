// AVX2 variants of the mod-p array kernels. This translation unit is the
// only one compiled with -mavx2; callers reach it through avx2_kernels(),
// which returns nullptr unless the CPU supports AVX2 at runtime.

#include "kakeya/kernels.hpp"

#if defined(__x86_64__)
#include <immintrin.h>
#endif

namespace kakeya {

#if defined(__x86_64__) && defined(__AVX2__)

namespace {

void add_arrays_avx2(std::uint32_t* dst, const std::uint32_t* a, const std::uint32_t* b,
                     std::size_t n, std::uint32_t p) {
    const __m256i vp = _mm256_set1_epi32(static_cast<int>(p));
    std::size_t i = 0;
    for (; i + 8 <= n; i += 8) {
        __m256i va = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(a + i));
        __m256i vb = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(b + i));
        __m256i s = _mm256_add_epi32(va, vb);  // < 2p < 2^17, no overflow
        // s >= p  <=>  min(s, p) == p  (unsigned compare workaround)
        __m256i ge = _mm256_cmpeq_epi32(_mm256_min_epu32(s, vp), vp);
        s = _mm256_sub_epi32(s, _mm256_and_si256(ge, vp));
        _mm256_storeu_si256(reinterpret_cast<__m256i*>(dst + i), s);
    }
    for (; i < n; ++i) {
        std::uint32_t s = a[i] + b[i];
        dst[i] = s >= p ? s - p : s;
    }
}

// Barrett reduction with m = floor(2^32 / p): for x < 2^32,
// q = (x * m) >> 32 satisfies q in {floor(x/p) - 1, floor(x/p)}, so one
// conditional subtract lands x - q*p in [0, p). Requires p < 2^16 so that
// products of residues fit in 32 bits.
void scale_array_avx2(std::uint32_t* dst, const std::uint32_t* src, std::uint32_t s,
                      std::size_t n, std::uint32_t p) {
    const std::uint64_t m = (static_cast<std::uint64_t>(1) << 32) / p;
    const __m256i vs = _mm256_set1_epi64x(static_cast<long long>(s));
    const __m256i vm = _mm256_set1_epi64x(static_cast<long long>(m));
    const __m256i vp64 = _mm256_set1_epi64x(static_cast<long long>(p));
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        __m128i lo = _mm_loadu_si128(reinterpret_cast<const __m128i*>(src + i));
        __m256i x64 = _mm256_cvtepu32_epi64(lo);
        __m256i x = _mm256_mul_epu32(x64, vs);                    // < 2^32
        __m256i q = _mm256_srli_epi64(_mm256_mul_epu32(x, vm), 32);
        __m256i r = _mm256_sub_epi64(x, _mm256_mul_epu32(q, vp64));
        __m256i ge = _mm256_cmpgt_epi64(vp64, r);                 // r < p ?
        r = _mm256_sub_epi64(r, _mm256_andnot_si256(ge, vp64));
        // Lanes hold values < p < 2^16; pack the low dwords back together.
        alignas(32) std::uint64_t tmp[4];
        _mm256_store_si256(reinterpret_cast<__m256i*>(tmp), r);
        dst[i + 0] = static_cast<std::uint32_t>(tmp[0]);
        dst[i + 1] = static_cast<std::uint32_t>(tmp[1]);
        dst[i + 2] = static_cast<std::uint32_t>(tmp[2]);
        dst[i + 3] = static_cast<std::uint32_t>(tmp[3]);
    }
    for (; i < n; ++i)
        dst[i] = static_cast<std::uint32_t>(static_cast<std::uint64_t>(src[i]) * s % p);
}

}  // namespace

const ModKernels* avx2_kernels() {
    if (!__builtin_cpu_supports("avx2")) return nullptr;
    static const ModKernels k{"avx2", add_arrays_avx2, scale_array_avx2};
    return &k;
}

#else

const ModKernels* avx2_kernels() { return nullptr; }

#endif

}  // namespace kakeya
