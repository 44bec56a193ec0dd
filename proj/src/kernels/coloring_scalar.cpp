#include "ramfac/kernels.hpp"

namespace ramfac::kernels {

void TwoColorLayout::add_copy(const std::vector<std::uint64_t>& fibers) {
  for (auto m : fibers)
    if (m & (m - 1)) masks.push_back(m);
  copy_begin.push_back(static_cast<std::uint32_t>(masks.size()));
}

bool any_copy_holds(std::uint64_t c, const TwoColorLayout& layout) {
  const std::size_t nc = layout.copies();
  const std::uint64_t* m = layout.masks.data();
  for (std::size_t i = 0; i < nc; ++i) {
    bool mono = true;
    for (std::uint32_t f = layout.copy_begin[i]; f < layout.copy_begin[i + 1]; ++f) {
      const std::uint64_t x = c & m[f];
      if (x != 0 && x != m[f]) {
        mono = false;
        break;
      }
    }
    if (mono) return true;
  }
  return false;
}

namespace detail {

unsigned holds_mask4_scalar(std::uint64_t c0, const TwoColorLayout& layout) {
  unsigned out = 0;
  for (unsigned l = 0; l < 4; ++l)
    if (any_copy_holds(c0 + l, layout)) out |= 1u << l;
  return out;
}

std::uint64_t scan_scalar(std::uint64_t begin, std::uint64_t end, const TwoColorLayout& layout) {
  for (std::uint64_t c = begin; c < end; ++c)
    if (!any_copy_holds(c, layout)) return c;
  return end;
}

}  // namespace detail
}  // namespace ramfac::kernels
