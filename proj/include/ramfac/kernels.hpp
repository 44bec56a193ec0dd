#pragma once

// Hot loop of the naive two-color oracle: given a coloring of at most 64
// elements as a bitmask, decide whether some copy has every fiber
// monochromatic. Scalar reference plus an AVX2 variant chosen at runtime.

#include <cstdint>
#include <string_view>
#include <vector>

namespace ramfac::kernels {

enum class Isa { Auto, Scalar, Avx2 };

struct TwoColorLayout {
  // Fiber masks of size >= 2, grouped by copy; copy c owns
  // masks[copy_begin[c] .. copy_begin[c+1]).
  std::vector<std::uint64_t> masks;
  std::vector<std::uint32_t> copy_begin{0};

  std::size_t copies() const noexcept { return copy_begin.size() - 1; }
  void add_copy(const std::vector<std::uint64_t>& fibers);
};

bool avx2_available() noexcept;
/// Auto becomes the best supported variant; Avx2 on a machine without it
/// falls back to Scalar.
Isa resolve(Isa isa) noexcept;
std::string_view isa_name(Isa isa) noexcept;

/// True iff some copy has all fibers monochromatic under coloring c.
bool any_copy_holds(std::uint64_t c, const TwoColorLayout& layout);

/// Bit l set iff any_copy_holds(c0 + l) for l < 4.
unsigned holds_mask4(std::uint64_t c0, const TwoColorLayout& layout, Isa isa);

/// First c in [begin, end) for which no copy holds, or end.
std::uint64_t scan(std::uint64_t begin, std::uint64_t end, const TwoColorLayout& layout, Isa isa);

namespace detail {
unsigned holds_mask4_scalar(std::uint64_t c0, const TwoColorLayout& layout);
std::uint64_t scan_scalar(std::uint64_t begin, std::uint64_t end, const TwoColorLayout& layout);
#if defined(RAMFAC_HAVE_AVX2_TU)
unsigned holds_mask4_avx2(std::uint64_t c0, const TwoColorLayout& layout);
std::uint64_t scan_avx2(std::uint64_t begin, std::uint64_t end, const TwoColorLayout& layout);
#endif
}  // namespace detail

}  // namespace ramfac::kernels
