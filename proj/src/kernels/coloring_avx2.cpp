// Built with -mavx2; only reached through the runtime dispatcher.
#include <immintrin.h>

#include "ramfac/kernels.hpp"

namespace ramfac::kernels::detail {

namespace {

// Lanes hold colorings c0..c0+3. A lane ends up all-ones iff some copy is
// monochromatic on every fiber for that coloring.
inline __m256i holds4(__m256i c, const TwoColorLayout& layout) {
  const __m256i zero = _mm256_setzero_si256();
  const __m256i ones = _mm256_set1_epi64x(-1);
  __m256i holds = zero;
  const std::size_t nc = layout.copies();
  const std::uint64_t* m = layout.masks.data();
  for (std::size_t i = 0; i < nc; ++i) {
    __m256i mono = ones;
    for (std::uint32_t f = layout.copy_begin[i]; f < layout.copy_begin[i + 1]; ++f) {
      const __m256i mf = _mm256_set1_epi64x(static_cast<long long>(m[f]));
      const __m256i x = _mm256_and_si256(c, mf);
      const __m256i ok = _mm256_or_si256(_mm256_cmpeq_epi64(x, zero), _mm256_cmpeq_epi64(x, mf));
      mono = _mm256_and_si256(mono, ok);
      if (_mm256_testz_si256(mono, mono)) break;
    }
    holds = _mm256_or_si256(holds, mono);
    if (_mm256_testc_si256(holds, ones)) break;
  }
  return holds;
}

}  // namespace

unsigned holds_mask4_avx2(std::uint64_t c0, const TwoColorLayout& layout) {
  const __m256i c = _mm256_add_epi64(_mm256_set1_epi64x(static_cast<long long>(c0)),
                                     _mm256_setr_epi64x(0, 1, 2, 3));
  const __m256i h = holds4(c, layout);
  return static_cast<unsigned>(_mm256_movemask_pd(_mm256_castsi256_pd(h)));
}

std::uint64_t scan_avx2(std::uint64_t begin, std::uint64_t end, const TwoColorLayout& layout) {
  const __m256i step = _mm256_set1_epi64x(4);
  __m256i c = _mm256_add_epi64(_mm256_set1_epi64x(static_cast<long long>(begin)),
                               _mm256_setr_epi64x(0, 1, 2, 3));
  std::uint64_t base = begin;
  for (; end - base >= 4; base += 4) {
    const __m256i h = holds4(c, layout);
    const unsigned mask = static_cast<unsigned>(_mm256_movemask_pd(_mm256_castsi256_pd(h)));
    if (mask != 0xF) return base + static_cast<unsigned>(__builtin_ctz(~mask & 0xF));
    c = _mm256_add_epi64(c, step);
  }
  return scan_scalar(base, end, layout);
}

}  // namespace ramfac::kernels::detail
