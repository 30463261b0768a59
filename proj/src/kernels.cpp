#include "kakeya/kernels.hpp"

#include <cstdlib>
#include <cstring>

namespace kakeya {

std::vector<const ModKernels*> available_kernels() {
    std::vector<const ModKernels*> v{&scalar_kernels()};
    if (const ModKernels* k = avx2_kernels()) v.push_back(k);
    return v;
}

const ModKernels& active_kernels() {
    static const ModKernels* chosen = [] {
        const char* want = std::getenv("KAKEYATK_KERNEL");
        if (want && std::strcmp(want, "scalar") == 0) return &scalar_kernels();
        if (want && std::strcmp(want, "avx2") == 0 && avx2_kernels()) return avx2_kernels();
        const ModKernels* best = &scalar_kernels();
        if (const ModKernels* k = avx2_kernels()) best = k;
        return best;
    }();
    return *chosen;
}

}  // namespace kakeya
