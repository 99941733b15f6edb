#pragma once

#include <cstdint>
#include <span>
#include <string_view>

// Prime-field row kernels used by Gaussian elimination over 𝔽p.
//
// Residues are uint32 in [0, p). The vectorised variants require
// p < kMaxSimdModulus so that dst + c * src stays below 2^31 and a
// fixed-shift Barrett reduction is exact after one correction.
namespace hopfgal::kernels {

inline constexpr std::uint32_t kMaxSimdModulus = 1u << 15;

enum class Isa { Scalar, Avx2 };

// dst[i] = (dst[i] + c * src[i]) mod p
using AxpyModFn = void (*)(std::span<std::uint32_t> dst, std::span<const std::uint32_t> src,
                           std::uint32_t c, std::uint32_t p);
// v[i] = (v[i] * c) mod p
using ScaleModFn = void (*)(std::span<std::uint32_t> v, std::uint32_t c, std::uint32_t p);

namespace scalar {
void axpy_mod(std::span<std::uint32_t> dst, std::span<const std::uint32_t> src, std::uint32_t c,
              std::uint32_t p);
void scale_mod(std::span<std::uint32_t> v, std::uint32_t c, std::uint32_t p);
}  // namespace scalar

#if defined(__x86_64__) || defined(__i386__)
namespace avx2 {
void axpy_mod(std::span<std::uint32_t> dst, std::span<const std::uint32_t> src, std::uint32_t c,
              std::uint32_t p);
void scale_mod(std::span<std::uint32_t> v, std::uint32_t c, std::uint32_t p);
}  // namespace avx2
#endif

bool cpu_has(Isa isa);
// Best ISA supported by the running CPU, unless HOPFGAL_FORCE_SCALAR is set.
Isa active_isa();
std::string_view isa_name(Isa isa);

AxpyModFn axpy_mod_for(Isa isa);
ScaleModFn scale_mod_for(Isa isa);

// Dispatch on active_isa(); falls back to scalar for p >= kMaxSimdModulus.
void axpy_mod(std::span<std::uint32_t> dst, std::span<const std::uint32_t> src, std::uint32_t c,
              std::uint32_t p);
void scale_mod(std::span<std::uint32_t> v, std::uint32_t c, std::uint32_t p);

}  // namespace hopfgal::kernels
