#include "twrep/simd/modp_kernels.hpp"

namespace twrep::simd {
namespace {

void axpy_scalar(std::uint32_t* dst, const std::uint32_t* src, std::size_t n, std::uint32_t c,
                 std::uint32_t p) {
    for (std::size_t i = 0; i < n; ++i) {
        std::uint64_t v = static_cast<std::uint64_t>(c) * src[i] + dst[i];
        dst[i] = static_cast<std::uint32_t>(v % p);
    }
}

void scale_scalar(std::uint32_t* row, std::size_t n, std::uint32_t c, std::uint32_t p) {
    for (std::size_t i = 0; i < n; ++i)
        row[i] = static_cast<std::uint32_t>(static_cast<std::uint64_t>(c) * row[i] % p);
}

}  // namespace

const ModpKernels& scalar_kernels() {
    static const ModpKernels k{"scalar", &axpy_scalar, &scale_scalar};
    return k;
}

}  // namespace twrep::simd
