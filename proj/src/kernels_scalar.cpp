#include "kakeya/kernels.hpp"

namespace kakeya {

namespace {

void add_arrays_scalar(std::uint32_t* dst, const std::uint32_t* a, const std::uint32_t* b,
                       std::size_t n, std::uint32_t p) {
    for (std::size_t i = 0; i < n; ++i) {
        std::uint32_t s = a[i] + b[i];
        dst[i] = s >= p ? s - p : s;
    }
}

void scale_array_scalar(std::uint32_t* dst, const std::uint32_t* src, std::uint32_t s,
                        std::size_t n, std::uint32_t p) {
    for (std::size_t i = 0; i < n; ++i)
        dst[i] = static_cast<std::uint32_t>(static_cast<std::uint64_t>(src[i]) * s % p);
}

}  // namespace

const ModKernels& scalar_kernels() {
    static const ModKernels k{"scalar", add_arrays_scalar, scale_array_scalar};
    return k;
}

}  // namespace kakeya
