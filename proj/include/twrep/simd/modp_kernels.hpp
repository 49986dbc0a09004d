#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

// Row kernels for dense elimination over F_p (p < 2^31). Every variant must be
// bit-identical to the scalar reference; tests/test_simd_kernels.cpp enforces it.
namespace twrep::simd {

// dst[i] = (dst[i] + c * src[i]) mod p
using AxpyFn = void (*)(std::uint32_t* dst, const std::uint32_t* src, std::size_t n,
                        std::uint32_t c, std::uint32_t p);
// row[i] = (c * row[i]) mod p
using ScaleFn = void (*)(std::uint32_t* row, std::size_t n, std::uint32_t c, std::uint32_t p);

struct ModpKernels {
    const char* name;
    AxpyFn axpy;
    ScaleFn scale;
};

const ModpKernels& scalar_kernels();

// nullptr when the build has no AVX2 path or the running CPU lacks AVX2.
const ModpKernels* avx2_kernels();

// Chosen once per process: the widest supported variant, unless the
// environment variable TWREP_SIMD=scalar pins the reference kernels.
const ModpKernels& active_kernels();

std::vector<const ModpKernels*> available_kernels();

}  // namespace twrep::simd
