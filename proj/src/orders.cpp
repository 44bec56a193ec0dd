#include "ramfac/orders.hpp"

#include <algorithm>
#include <string>

namespace ramfac {

std::strong_ordering compare_antilex(std::span<const std::uint32_t> x,
                                     std::span<const std::uint32_t> y) {
  if (x.size() != y.size())
    throw DimensionError("compare_antilex: vectors of length " + std::to_string(x.size()) +
                         " and " + std::to_string(y.size()));
  for (std::size_t i = x.size(); i-- > 0;) {
    if (x[i] != y[i]) return x[i] <=> y[i];
  }
  return std::strong_ordering::equal;
}

std::uint64_t antilex_rank(std::span<const std::uint32_t> x, std::uint32_t p) {
  std::uint64_t r = 0;
  for (std::size_t i = x.size(); i-- > 0;) r = r * p + x[i];
  return r;
}

FieldVector antilex_unrank(std::uint64_t rank, std::uint32_t p, std::size_t len) {
  FieldVector v(len);
  for (std::size_t i = 0; i < len; ++i) {
    v[i] = static_cast<std::uint32_t>(rank % p);
    rank /= p;
  }
  return v;
}

LinearOrder::LinearOrder(std::size_t size) : size_(size) {
  if (size == 0) throw DomainError("LinearOrder: size must be positive");
}

LinearOrder LinearOrder::field_vectors(std::uint32_t p, std::size_t k) {
  if (p < 2) throw DomainError("LinearOrder::field_vectors: p must be >= 2");
  std::uint64_t count = 1;
  for (std::size_t i = 0; i < k; ++i) count *= p;
  LinearOrder order(count);
  order.p_ = p;
  order.k_ = k;
  order.labels_.reserve(count);
  for (std::uint64_t r = 0; r < count; ++r) order.labels_.push_back(antilex_unrank(r, p, k));
  return order;
}

bool is_rigid_surjection(std::span<const std::uint32_t> map, std::size_t k) {
  // Rigid onto k means the first occurrences read 0, 1, 2, ... in order.
  std::size_t next = 0;
  for (auto v : map) {
    if (v >= k) return false;
    if (v == next) {
      ++next;
    } else if (v > next) {
      return false;
    }
  }
  return next == k;
}

RigidSurjection::RigidSurjection(std::vector<std::uint32_t> map, std::size_t k)
    : map_(std::move(map)), k_(k) {
  if (!is_rigid_surjection(map_, k_))
    throw DomainError("not a rigid surjection onto " + std::to_string(k_));
}

RigidSurjection RigidSurjection::identity(std::size_t n) {
  std::vector<std::uint32_t> m(n);
  for (std::size_t i = 0; i < n; ++i) m[i] = static_cast<std::uint32_t>(i);
  return RigidSurjection(std::move(m), n);
}

namespace {

// Restricted-growth strings with maximum exactly k-1, generated in lex order.
void epi_rec(std::size_t n, std::size_t k, std::vector<std::uint32_t>& cur, std::size_t used,
             std::vector<RigidSurjection>& out) {
  const std::size_t pos = cur.size();
  if (pos == n) {
    if (used == k) out.emplace_back(cur, k);
    return;
  }
  // Not enough room left to reach k values.
  if (k - used > n - pos) return;
  const std::size_t hi = std::min(used, k - 1);
  for (std::size_t v = 0; v <= hi; ++v) {
    cur.push_back(static_cast<std::uint32_t>(v));
    epi_rec(n, k, cur, v == used ? used + 1 : used, out);
    cur.pop_back();
  }
}

}  // namespace

std::vector<RigidSurjection> enumerate_epi(std::size_t n, std::size_t k) {
  std::vector<RigidSurjection> out;
  if (k == 0 || n < k) return out;
  std::vector<std::uint32_t> cur;
  cur.reserve(n);
  epi_rec(n, k, cur, 0, out);
  return out;
}

std::vector<RigidSurjection> enumerate_epi(std::size_t n, const LinearOrder& codomain) {
  return enumerate_epi(n, codomain.size());
}

RigidSurjection compose_epi(const RigidSurjection& g, const RigidSurjection& f) {
  if (g.codomain_size() != f.domain_size())
    throw DimensionError("compose_epi: codomain " + std::to_string(g.codomain_size()) +
                         " does not match domain " + std::to_string(f.domain_size()));
  std::vector<std::uint32_t> m(g.domain_size());
  for (std::size_t i = 0; i < m.size(); ++i) m[i] = f(g(i));
  return RigidSurjection(std::move(m), f.codomain_size());
}

FinMap::FinMap(std::size_t k, std::vector<std::uint32_t> values)
    : k_(k), values_(std::move(values)) {
  std::uint32_t mx = 0;
  for (auto v : values_) {
    if (v > k_) throw DomainError("FinMap: value exceeds height " + std::to_string(k_));
    mx = std::max(mx, v);
  }
  if (mx != k_) throw DomainError("FinMap: height " + std::to_string(k_) + " is not attained");
}

std::vector<std::size_t> FinMap::support() const {
  std::vector<std::size_t> s;
  for (std::size_t i = 0; i < values_.size(); ++i)
    if (values_[i] != 0) s.push_back(i);
  return s;
}

FinMap tetris(const FinMap& f) {
  if (f.height() == 0) throw InvalidHeightError("tetris: height 0 has no image");
  std::vector<std::uint32_t> v(f.values());
  for (auto& x : v) x = x > 0 ? x - 1 : 0;
  return FinMap(f.height() - 1, std::move(v));
}

std::vector<FinMap> enumerate_fin(std::size_t k, std::size_t n) {
  std::vector<FinMap> out;
  if (n == 0) return out;
  std::vector<std::uint32_t> cur(n, 0);
  // Odometer with coordinate 0 most significant gives lexicographic order.
  while (true) {
    if (std::find(cur.begin(), cur.end(), static_cast<std::uint32_t>(k)) != cur.end())
      out.emplace_back(k, cur);
    std::size_t i = n;
    while (i > 0) {
      --i;
      if (cur[i] < k) {
        ++cur[i];
        break;
      }
      cur[i] = 0;
      if (i == 0) return out;
    }
  }
}

std::vector<FinMap> combinatorial_space(std::span<const FinMap> blocks, std::size_t k) {
  if (blocks.empty()) return {};
  const std::size_t n = blocks.front().size();
  std::vector<char> used(n, 0);
  for (const auto& b : blocks) {
    if (b.size() != n) throw DimensionError("combinatorial_space: blocks of different length");
    if (b.height() != k)
      throw DomainError("combinatorial_space: block of height " + std::to_string(b.height()) +
                        ", expected " + std::to_string(k));
    for (auto i : b.support()) {
      if (used[i]) throw DomainError("combinatorial_space: overlapping supports");
      used[i] = 1;
    }
  }
  std::vector<FinMap> out;
  for (const auto& j : enumerate_fin(k, blocks.size())) {
    std::vector<std::uint32_t> sum(n, 0);
    for (std::size_t i = 0; i < blocks.size(); ++i) {
      // T^{k-j} lowers every value by k-j, floored at zero.
      const std::uint32_t drop = static_cast<std::uint32_t>(k - j[i]);
      for (std::size_t x = 0; x < n; ++x) {
        const std::uint32_t v = blocks[i][x];
        sum[x] += v > drop ? v - drop : 0;
      }
    }
    out.emplace_back(k, std::move(sum));
  }
  return out;
}

}  // namespace ramfac
