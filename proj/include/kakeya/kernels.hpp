#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

namespace kakeya {

/// Elementwise mod-p array kernels used by the F_q grid evaluator.
/// Contract: all inputs in [0, p), p an odd prime < 2^16; outputs in [0, p).
/// dst may alias a (in-place update), never b.
struct ModKernels {
    const char* name;
    /// dst[i] = (a[i] + b[i]) mod p
    void (*add_arrays)(std::uint32_t* dst, const std::uint32_t* a, const std::uint32_t* b,
                       std::size_t n, std::uint32_t p);
    /// dst[i] = (src[i] * s) mod p
    void (*scale_array)(std::uint32_t* dst, const std::uint32_t* src, std::uint32_t s,
                        std::size_t n, std::uint32_t p);
};

const ModKernels& scalar_kernels();

/// AVX2 variant; nullptr when the CPU lacks AVX2.
const ModKernels* avx2_kernels();

/// All variants usable on this machine (scalar first). Equivalence tests
/// iterate this list.
std::vector<const ModKernels*> available_kernels();

/// The best available variant, unless overridden by KAKEYATK_KERNEL
/// (values: "scalar", "avx2").
const ModKernels& active_kernels();

}  // namespace kakeya
