#include <cstdlib>

#include "hopfgal/kernels.hpp"

namespace hopfgal::kernels {

bool cpu_has(Isa isa) {
  switch (isa) {
    case Isa::Scalar: return true;
    case Isa::Avx2:
#if defined(__x86_64__) || defined(__i386__)
      return __builtin_cpu_supports("avx2");
#else
      return false;
#endif
  }
  return false;
}

Isa active_isa() {
  static const Isa isa = [] {
    if (std::getenv("HOPFGAL_FORCE_SCALAR") != nullptr) return Isa::Scalar;
    return cpu_has(Isa::Avx2) ? Isa::Avx2 : Isa::Scalar;
  }();
  return isa;
}

std::string_view isa_name(Isa isa) {
  return isa == Isa::Avx2 ? "avx2" : "scalar";
}

AxpyModFn axpy_mod_for(Isa isa) {
#if defined(__x86_64__) || defined(__i386__)
  if (isa == Isa::Avx2) return &avx2::axpy_mod;
#endif
  (void)isa;
  return &scalar::axpy_mod;
}

ScaleModFn scale_mod_for(Isa isa) {
#if defined(__x86_64__) || defined(__i386__)
  if (isa == Isa::Avx2) return &avx2::scale_mod;
#endif
  (void)isa;
  return &scalar::scale_mod;
}

void axpy_mod(std::span<std::uint32_t> dst, std::span<const std::uint32_t> src, std::uint32_t c,
              std::uint32_t p) {
  if (p >= kMaxSimdModulus) return scalar::axpy_mod(dst, src, c, p);
  static const AxpyModFn fn = axpy_mod_for(active_isa());
  fn(dst, src, c, p);
}

void scale_mod(std::span<std::uint32_t> v, std::uint32_t c, std::uint32_t p) {
  if (p >= kMaxSimdModulus) return scalar::scale_mod(v, c, p);
  static const ScaleModFn fn = scale_mod_for(active_isa());
  fn(v, c, p);
}

}  // namespace hopfgal::kernels
