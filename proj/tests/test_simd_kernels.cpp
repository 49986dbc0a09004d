#include "doctest.h"

#include <cstdlib>
#include <random>

#include "twrep/linalg.hpp"
#include "twrep/simd/modp_kernels.hpp"

using namespace twrep;

namespace {

const std::uint32_t primes[] = {2, 3, 5, 7, 65521, 1000003, 2147483629u, 2147483647u};

}  // namespace

TEST_CASE("scalar kernels are always available") {
    auto all = simd::available_kernels();
    REQUIRE(!all.empty());
    CHECK(all.front() == &simd::scalar_kernels());
    MESSAGE("active kernels: " << simd::active_kernels().name);
}

TEST_CASE("every variant is bit-identical to the scalar reference") {
    std::mt19937_64 rng(2024);
    const auto& ref = simd::scalar_kernels();
    for (const auto* k : simd::available_kernels())
        for (std::uint32_t p : primes)
            for (std::size_t n : {0, 1, 3, 7, 8, 9, 15, 16, 17, 31, 64, 100}) {
                std::vector<std::uint32_t> src(n), a(n);
                for (std::size_t i = 0; i < n; ++i) {
                    src[i] = rng() % p;
                    a[i] = rng() % p;
                }
                std::vector<std::uint32_t> cs = {0, 1, p - 1, static_cast<std::uint32_t>(rng() % p)};
                for (std::uint32_t c : cs) {
                    auto x = a, y = a;
                    ref.axpy(x.data(), src.data(), n, c, p);
                    k->axpy(y.data(), src.data(), n, c, p);
                    CHECK(x == y);
                    x = a;
                    y = a;
                    ref.scale(x.data(), n, c, p);
                    k->scale(y.data(), n, c, p);
                    CHECK(x == y);
                }
            }
}

TEST_CASE("axpy extremes against 64-bit arithmetic") {
    for (const auto* k : simd::available_kernels()) {
        const std::uint32_t p = 2147483647u;
        std::vector<std::uint32_t> dst(20, p - 1), src(20, p - 1);
        k->axpy(dst.data(), src.data(), dst.size(), p - 1, p);
        std::uint64_t want = ((p - 1) + static_cast<std::uint64_t>(p - 1) * (p - 1)) % p;
        for (auto v : dst) CHECK(v == want);
    }
}

TEST_CASE("elimination results do not depend on the kernel variant") {
    // rref runs on the active kernels; compare against a rational computation
    // reduced mod p, which never touches the F_p kernels.
    std::mt19937_64 rng(9);
    Field fp = Field::prime(101);
    for (int t = 0; t < 50; ++t) {
        std::size_t r = 2 + rng() % 12, c = 2 + rng() % 12;
        Matrix m(fp, r, c);
        for (std::size_t i = 0; i < r; ++i)
            for (std::size_t j = 0; j < c; ++j) m.set(i, j, static_cast<long long>(rng() % 3));
        Rref a = rref(m);
        CHECK((m * kernel(m).basis).is_zero());
        CHECK(a.rank() + kernel(m).dim() == c);
        Matrix sq = m * m.transpose();
        Matrix naive(fp, r, r);
        for (std::size_t i = 0; i < r; ++i)
            for (std::size_t j = 0; j < r; ++j) {
                long long s = 0;
                for (std::size_t l = 0; l < c; ++l)
                    s += static_cast<long long>(m.at(i, l).residue()) * m.at(j, l).residue();
                naive.set(i, j, s);
            }
        CHECK(sq == naive);
    }
}
