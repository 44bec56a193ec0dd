#include "ramfac/kernels.hpp"

namespace ramfac::kernels {

bool avx2_available() noexcept {
#if defined(RAMFAC_HAVE_AVX2_TU) && (defined(__GNUC__) || defined(__clang__))
  static const bool ok = __builtin_cpu_supports("avx2");
  return ok;
#else
  return false;
#endif
}

Isa resolve(Isa isa) noexcept {
  if (isa == Isa::Scalar) return Isa::Scalar;
  return avx2_available() ? Isa::Avx2 : Isa::Scalar;
}

std::string_view isa_name(Isa isa) noexcept {
  switch (isa) {
    case Isa::Auto: return "auto";
    case Isa::Scalar: return "scalar";
    case Isa::Avx2: return "avx2";
  }
  return "?";
}

unsigned holds_mask4(std::uint64_t c0, const TwoColorLayout& layout, Isa isa) {
#if defined(RAMFAC_HAVE_AVX2_TU)
  if (resolve(isa) == Isa::Avx2) return detail::holds_mask4_avx2(c0, layout);
#endif
  (void)isa;
  return detail::holds_mask4_scalar(c0, layout);
}

std::uint64_t scan(std::uint64_t begin, std::uint64_t end, const TwoColorLayout& layout, Isa isa) {
  if (begin >= end) return end;
#if defined(RAMFAC_HAVE_AVX2_TU)
  if (resolve(isa) == Isa::Avx2) return detail::scan_avx2(begin, end, layout);
#endif
  (void)isa;
  return detail::scan_scalar(begin, end, layout);
}

}  // namespace ramfac::kernels
