#include "topodraw/kernels.hpp"

#include <atomic>
#include <bit>
#include <cstdlib>
#include <cstring>

#if defined(__x86_64__) || defined(__i386__)
#include <immintrin.h>
#define TOPO_X86 1
#else
#define TOPO_X86 0
#endif

namespace topo::kernels {

namespace scalar {

void xor_into(std::uint64_t* dst, const std::uint64_t* src, std::size_t n) {
    for (std::size_t i = 0; i < n; ++i) dst[i] ^= src[i];
}

std::size_t popcount(const std::uint64_t* src, std::size_t n) {
    std::size_t c = 0;
    for (std::size_t i = 0; i < n; ++i) c += static_cast<std::size_t>(std::popcount(src[i]));
    return c;
}

std::size_t and_popcount(const std::uint64_t* a, const std::uint64_t* b, std::size_t n) {
    std::size_t c = 0;
    for (std::size_t i = 0; i < n; ++i) c += static_cast<std::size_t>(std::popcount(a[i] & b[i]));
    return c;
}

}  // namespace scalar

#if TOPO_X86
namespace avx2 {

namespace {

// nibble lookup popcount (Mula), summed per 64-bit lane with sad_epu8
__attribute__((target("avx2"))) inline __m256i lane_popcount(__m256i v) {
    const __m256i lut = _mm256_setr_epi8(0, 1, 1, 2, 1, 2, 2, 3, 1, 2, 2, 3, 2, 3, 3, 4,
                                         0, 1, 1, 2, 1, 2, 2, 3, 1, 2, 2, 3, 2, 3, 3, 4);
    const __m256i low = _mm256_set1_epi8(0x0f);
    __m256i lo = _mm256_and_si256(v, low);
    __m256i hi = _mm256_and_si256(_mm256_srli_epi16(v, 4), low);
    __m256i cnt = _mm256_add_epi8(_mm256_shuffle_epi8(lut, lo), _mm256_shuffle_epi8(lut, hi));
    return _mm256_sad_epu8(cnt, _mm256_setzero_si256());
}

__attribute__((target("avx2"))) inline std::size_t hsum(__m256i acc) {
    alignas(32) std::uint64_t lanes[4];
    _mm256_store_si256(reinterpret_cast<__m256i*>(lanes), acc);
    return static_cast<std::size_t>(lanes[0] + lanes[1] + lanes[2] + lanes[3]);
}

}  // namespace

__attribute__((target("avx2"))) void xor_into(std::uint64_t* dst, const std::uint64_t* src,
                                              std::size_t n) {
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        __m256i d = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(dst + i));
        __m256i s = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(src + i));
        _mm256_storeu_si256(reinterpret_cast<__m256i*>(dst + i), _mm256_xor_si256(d, s));
    }
    for (; i < n; ++i) dst[i] ^= src[i];
}

__attribute__((target("avx2"))) std::size_t popcount(const std::uint64_t* src, std::size_t n) {
    __m256i acc = _mm256_setzero_si256();
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        __m256i v = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(src + i));
        acc = _mm256_add_epi64(acc, lane_popcount(v));
    }
    std::size_t c = hsum(acc);
    for (; i < n; ++i) c += static_cast<std::size_t>(__builtin_popcountll(src[i]));
    return c;
}

__attribute__((target("avx2"))) std::size_t and_popcount(const std::uint64_t* a,
                                                         const std::uint64_t* b, std::size_t n) {
    __m256i acc = _mm256_setzero_si256();
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        __m256i va = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(a + i));
        __m256i vb = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(b + i));
        acc = _mm256_add_epi64(acc, lane_popcount(_mm256_and_si256(va, vb)));
    }
    std::size_t c = hsum(acc);
    for (; i < n; ++i) c += static_cast<std::size_t>(__builtin_popcountll(a[i] & b[i]));
    return c;
}

}  // namespace avx2

bool avx2_supported() {
    __builtin_cpu_init();
    return __builtin_cpu_supports("avx2");
}
#else
namespace avx2 {
void xor_into(std::uint64_t* dst, const std::uint64_t* src, std::size_t n) {
    scalar::xor_into(dst, src, n);
}
std::size_t popcount(const std::uint64_t* src, std::size_t n) { return scalar::popcount(src, n); }
std::size_t and_popcount(const std::uint64_t* a, const std::uint64_t* b, std::size_t n) {
    return scalar::and_popcount(a, b, n);
}
}  // namespace avx2

bool avx2_supported() { return false; }
#endif

namespace {

Isa detect() {
    if (const char* env = std::getenv("TOPODRAW_ISA"); env && std::strcmp(env, "scalar") == 0)
        return Isa::scalar;
    return avx2_supported() ? Isa::avx2 : Isa::scalar;
}

std::atomic<Isa>& current() {
    static std::atomic<Isa> isa{detect()};
    return isa;
}

}  // namespace

Isa active_isa() { return current().load(std::memory_order_relaxed); }

bool set_isa(Isa isa) {
    if (isa == Isa::avx2 && !avx2_supported()) return false;
    current().store(isa, std::memory_order_relaxed);
    return true;
}

const char* isa_name(Isa isa) { return isa == Isa::avx2 ? "avx2" : "scalar"; }

void xor_into(std::uint64_t* dst, const std::uint64_t* src, std::size_t n) {
    if (active_isa() == Isa::avx2)
        avx2::xor_into(dst, src, n);
    else
        scalar::xor_into(dst, src, n);
}

std::size_t popcount(const std::uint64_t* src, std::size_t n) {
    return active_isa() == Isa::avx2 ? avx2::popcount(src, n) : scalar::popcount(src, n);
}

std::size_t and_popcount(const std::uint64_t* a, const std::uint64_t* b, std::size_t n) {
    return active_isa() == Isa::avx2 ? avx2::and_popcount(a, b, n) : scalar::and_popcount(a, b, n);
}

}  // namespace topo::kernels
