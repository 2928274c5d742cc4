#pragma once
// Word-level bitset kernels. A scalar reference and an AVX2 variant; the
// active one is picked once from cpuid and can be overridden for testing.

#include <cstddef>
#include <cstdint>

namespace topo::kernels {

enum class Isa { scalar, avx2 };

void xor_into(std::uint64_t* dst, const std::uint64_t* src, std::size_t n);
std::size_t popcount(const std::uint64_t* src, std::size_t n);
// |a & b|
std::size_t and_popcount(const std::uint64_t* a, const std::uint64_t* b, std::size_t n);

namespace scalar {
void xor_into(std::uint64_t* dst, const std::uint64_t* src, std::size_t n);
std::size_t popcount(const std::uint64_t* src, std::size_t n);
std::size_t and_popcount(const std::uint64_t* a, const std::uint64_t* b, std::size_t n);
}  // namespace scalar

namespace avx2 {
void xor_into(std::uint64_t* dst, const std::uint64_t* src, std::size_t n);
std::size_t popcount(const std::uint64_t* src, std::size_t n);
std::size_t and_popcount(const std::uint64_t* a, const std::uint64_t* b, std::size_t n);
}  // namespace avx2

bool avx2_supported();
Isa active_isa();
// Returns false (and changes nothing) when the requested ISA is unavailable.
bool set_isa(Isa isa);
const char* isa_name(Isa isa);

}  // namespace topo::kernels
