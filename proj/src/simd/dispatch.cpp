#include <cstdlib>
#include <string_view>

#include "twrep/simd/modp_kernels.hpp"

namespace twrep::simd {

const ModpKernels& active_kernels() {
    static const ModpKernels& chosen = [] () -> const ModpKernels& {
        const char* env = std::getenv("TWREP_SIMD");
        if (env != nullptr && std::string_view(env) == "scalar") return scalar_kernels();
        if (const ModpKernels* k = avx2_kernels()) return *k;
        return scalar_kernels();
    }();
    return chosen;
}

std::vector<const ModpKernels*> available_kernels() {
    std::vector<const ModpKernels*> out{&scalar_kernels()};
    if (const ModpKernels* k = avx2_kernels()) out.push_back(k);
    return out;
}

}  // namespace twrep::simd
