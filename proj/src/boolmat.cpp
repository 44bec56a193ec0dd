#include "ramfac/boolmat.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <string>

namespace ramfac {

Permutation::Permutation(std::vector<std::uint32_t> perm) : p_(std::move(perm)) {
  std::vector<char> hit(p_.size(), 0);
  for (auto v : p_) {
    if (v >= p_.size() || hit[v]) throw DomainError("not a permutation");
    hit[v] = 1;
  }
}

Permutation Permutation::identity(std::size_t k) {
  std::vector<std::uint32_t> v(k);
  std::iota(v.begin(), v.end(), 0u);
  return Permutation(std::move(v));
}

Permutation Permutation::inverse() const {
  std::vector<std::uint32_t> v(p_.size());
  for (std::size_t j = 0; j < p_.size(); ++j) v[p_[j]] = static_cast<std::uint32_t>(j);
  return Permutation(std::move(v));
}

Permutation Permutation::compose(const Permutation& other) const {
  if (other.size() != size()) throw DimensionError("compose: permutation sizes differ");
  std::vector<std::uint32_t> v(size());
  for (std::size_t j = 0; j < size(); ++j) v[j] = p_[other(j)];
  return Permutation(std::move(v));
}

std::vector<Permutation> enumerate_permutations(std::size_t k) {
  std::vector<std::uint32_t> v(k);
  std::iota(v.begin(), v.end(), 0u);
  std::vector<Permutation> out;
  do out.emplace_back(v);
  while (std::next_permutation(v.begin(), v.end()));
  return out;
}

BooleanMatrix::BooleanMatrix(std::size_t n, std::vector<std::uint64_t> columns)
    : n_(n), cols_(std::move(columns)) {
  if (n > 64) throw DomainError("BooleanMatrix: at most 64 rows");
  const std::uint64_t full = n == 64 ? ~0ull : ((1ull << n) - 1);
  std::uint64_t seen = 0;
  for (auto c : cols_) {
    if (c == 0) throw DomainError("BooleanMatrix: empty column");
    if (c & ~full) throw DomainError("BooleanMatrix: column member out of range");
    if (c & seen) throw DomainError("BooleanMatrix: columns overlap");
    seen |= c;
  }
  if (seen != full) throw DomainError("BooleanMatrix: columns do not cover all rows");
}

BooleanMatrix BooleanMatrix::from_columns(std::size_t n,
                                          const std::vector<std::vector<std::size_t>>& cols) {
  std::vector<std::uint64_t> bits;
  for (const auto& c : cols) {
    std::uint64_t m = 0;
    for (auto i : c) {
      if (i >= n || i >= 64) throw DomainError("BooleanMatrix: member " + std::to_string(i) + " out of range");
      m |= 1ull << i;
    }
    bits.push_back(m);
  }
  return BooleanMatrix(n, std::move(bits));
}

BooleanMatrix BooleanMatrix::identity(std::size_t k) {
  std::vector<std::uint64_t> bits(k);
  for (std::size_t j = 0; j < k; ++j) bits[j] = 1ull << j;
  return BooleanMatrix(k, std::move(bits));
}

std::vector<std::size_t> BooleanMatrix::column_members(std::size_t j) const {
  std::vector<std::size_t> out;
  for (std::uint64_t c = cols_[j]; c; c &= c - 1) out.push_back(std::countr_zero(c));
  return out;
}

BooleanMatrix operator*(const BooleanMatrix& r, const BooleanMatrix& b) {
  if (r.cols() != b.rows()) throw DimensionError("boolean product: inner sizes differ");
  std::vector<std::uint64_t> out(b.cols(), 0);
  for (std::size_t j = 0; j < b.cols(); ++j)
    for (std::uint64_t c = b.column(j); c; c &= c - 1) out[j] |= r.column(std::countr_zero(c));
  return BooleanMatrix(r.rows(), std::move(out));
}

BooleanMatrix operator*(const BooleanMatrix& b, const Permutation& s) {
  if (s.size() != b.cols()) throw DimensionError("permutation size differs from column count");
  std::vector<std::uint64_t> out(b.cols());
  for (std::size_t j = 0; j < b.cols(); ++j) out[j] = b.column(s(j));
  return BooleanMatrix(b.rows(), std::move(out));
}

bool is_oba(const BooleanMatrix& b) {
  for (std::size_t j = 1; j < b.cols(); ++j)
    if (std::countr_zero(b.column(j - 1)) >= std::countr_zero(b.column(j))) return false;
  return true;
}

Permutation pi(const BooleanMatrix& b) {
  std::vector<std::uint32_t> v(b.cols());
  std::iota(v.begin(), v.end(), 0u);
  std::sort(v.begin(), v.end(), [&](std::uint32_t x, std::uint32_t y) {
    return std::countr_zero(b.column(x)) < std::countr_zero(b.column(y));
  });
  return Permutation(std::move(v));
}

BooleanMatrix epi_to_boolean(const RigidSurjection& f) {
  std::vector<std::uint64_t> cols(f.codomain_size(), 0);
  for (std::size_t i = 0; i < f.domain_size(); ++i) cols[f(i)] |= 1ull << i;
  return BooleanMatrix(f.domain_size(), std::move(cols));
}

RigidSurjection boolean_to_epi(const BooleanMatrix& b) {
  if (!is_oba(b)) throw DomainError("boolean_to_epi: column minima are not increasing");
  std::vector<std::uint32_t> m(b.rows());
  for (std::size_t j = 0; j < b.cols(); ++j)
    for (auto i : b.column_members(j)) m[i] = static_cast<std::uint32_t>(j);
  return RigidSurjection(std::move(m), b.cols());
}

std::vector<BooleanMatrix> enumerate_ba(std::size_t n, std::size_t k) {
  std::vector<BooleanMatrix> out;
  if (k == 0 || n < k) return out;
  std::vector<std::uint32_t> m(n, 0);
  while (true) {
    std::vector<std::uint64_t> cols(k, 0);
    for (std::size_t i = 0; i < n; ++i) cols[m[i]] |= 1ull << i;
    if (std::find(cols.begin(), cols.end(), 0ull) == cols.end())
      out.emplace_back(n, std::move(cols));
    std::size_t i = n;
    while (i > 0 && m[i - 1] == k - 1) m[--i] = 0;
    if (i == 0) break;
    ++m[i - 1];
  }
  return out;
}

std::vector<BooleanMatrix> enumerate_oba(std::size_t n, std::size_t k) {
  std::vector<BooleanMatrix> out;
  for (const auto& f : enumerate_epi(n, k)) out.push_back(epi_to_boolean(f));
  return out;
}

}  // namespace ramfac
