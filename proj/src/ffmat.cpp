#include "ramfac/ffmat.hpp"

#include <algorithm>
#include <string>

namespace ramfac {

bool is_prime(std::uint32_t p) {
  if (p < 2) return false;
  for (std::uint32_t d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

std::uint32_t inv_mod(std::uint32_t a, std::uint32_t p) {
  a %= p;
  if (a == 0) throw DomainError("inv_mod: zero has no inverse");
  // Fermat: a^(p-2).
  std::uint64_t result = 1, base = a;
  for (std::uint32_t e = p - 2; e > 0; e >>= 1) {
    if (e & 1) result = result * base % p;
    base = base * base % p;
  }
  return static_cast<std::uint32_t>(result);
}

PrimeFieldMatrix::PrimeFieldMatrix(std::uint32_t p, std::size_t rows, std::size_t cols)
    : p_(p), rows_(rows), cols_(cols), e_(rows * cols, 0) {
  if (!is_prime(p)) throw DomainError("modulus " + std::to_string(p) + " is not prime");
}

PrimeFieldMatrix PrimeFieldMatrix::from_rows(std::uint32_t p,
                                             const std::vector<std::vector<long>>& rows) {
  const std::size_t r = rows.size();
  const std::size_t c = r ? rows[0].size() : 0;
  PrimeFieldMatrix m(p, r, c);
  for (std::size_t i = 0; i < r; ++i) {
    if (rows[i].size() != c) throw DimensionError("ragged matrix rows");
    for (std::size_t j = 0; j < c; ++j) m.set(i, j, rows[i][j]);
  }
  return m;
}

PrimeFieldMatrix PrimeFieldMatrix::identity(std::uint32_t p, std::size_t n) {
  PrimeFieldMatrix m(p, n, n);
  for (std::size_t i = 0; i < n; ++i) m.e_[i * n + i] = 1;
  return m;
}

void PrimeFieldMatrix::set(std::size_t i, std::size_t j, long v) {
  long r = v % static_cast<long>(p_);
  if (r < 0) r += p_;
  e_.at(i * cols_ + j) = static_cast<std::uint32_t>(r);
  rank_.reset();
}

std::vector<std::uint32_t> PrimeFieldMatrix::row(std::size_t i) const {
  return {e_.begin() + i * cols_, e_.begin() + (i + 1) * cols_};
}

std::vector<std::uint32_t> PrimeFieldMatrix::col(std::size_t j) const {
  std::vector<std::uint32_t> c(rows_);
  for (std::size_t i = 0; i < rows_; ++i) c[i] = at(i, j);
  return c;
}

PrimeFieldMatrix PrimeFieldMatrix::transpose() const {
  PrimeFieldMatrix t(p_, cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t.e_[j * rows_ + i] = at(i, j);
  t.rank_ = rank_;
  return t;
}

std::size_t PrimeFieldMatrix::rank() const {
  if (!rank_) rank_ = rref_with_pivots(*this).pivots.size();
  return *rank_;
}

PrimeFieldMatrix operator*(const PrimeFieldMatrix& a, const PrimeFieldMatrix& b) {
  if (a.p_ != b.p_) throw DomainError("matrix product over different fields");
  if (a.cols_ != b.rows_)
    throw DimensionError("matrix product " + std::to_string(a.rows_) + "x" +
                         std::to_string(a.cols_) + " by " + std::to_string(b.rows_) + "x" +
                         std::to_string(b.cols_));
  PrimeFieldMatrix c(a.p_, a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t j = 0; j < b.cols_; ++j) {
      std::uint64_t s = 0;
      for (std::size_t l = 0; l < a.cols_; ++l) s += std::uint64_t(a.at(i, l)) * b.at(l, j);
      c.e_[i * b.cols_ + j] = static_cast<std::uint32_t>(s % a.p_);
    }
  return c;
}

bool PrimeFieldMatrix::operator<(const PrimeFieldMatrix& o) const {
  if (p_ != o.p_) return p_ < o.p_;
  if (rows_ != o.rows_) return rows_ < o.rows_;
  if (cols_ != o.cols_) return cols_ < o.cols_;
  return e_ < o.e_;
}

std::vector<std::uint32_t> mat_vec(const PrimeFieldMatrix& a, const std::vector<std::uint32_t>& v) {
  if (v.size() != a.cols()) throw DimensionError("mat_vec: vector length mismatch");
  std::vector<std::uint32_t> out(a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    std::uint64_t s = 0;
    for (std::size_t j = 0; j < a.cols(); ++j) s += std::uint64_t(a.at(i, j)) * v[j];
    out[i] = static_cast<std::uint32_t>(s % a.p());
  }
  return out;
}

namespace {

// Gauss-Jordan on the first `pivot_cols` columns of m, carrying the rest.
std::vector<std::size_t> reduce_in_place(std::vector<std::uint32_t>& m, std::size_t rows,
                                         std::size_t cols, std::size_t pivot_cols,
                                         std::uint32_t p) {
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < pivot_cols && r < rows; ++c) {
    std::size_t sel = rows;
    for (std::size_t i = r; i < rows; ++i)
      if (m[i * cols + c] != 0) {
        sel = i;
        break;
      }
    if (sel == rows) continue;
    if (sel != r)
      for (std::size_t j = 0; j < cols; ++j) std::swap(m[sel * cols + j], m[r * cols + j]);
    const std::uint64_t inv = inv_mod(m[r * cols + c], p);
    for (std::size_t j = 0; j < cols; ++j) m[r * cols + j] = m[r * cols + j] * inv % p;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || m[i * cols + c] == 0) continue;
      const std::uint64_t f = p - m[i * cols + c];
      for (std::size_t j = 0; j < cols; ++j)
        m[i * cols + j] = static_cast<std::uint32_t>((m[i * cols + j] + f * m[r * cols + j]) % p);
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

}  // namespace

RrefResult rref_with_pivots(const PrimeFieldMatrix& a) {
  PrimeFieldMatrix f = a;
  std::vector<std::uint32_t> m = a.entries();
  auto piv = reduce_in_place(m, a.rows(), a.cols(), a.cols(), a.p());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) f.set(i, j, m[i * a.cols() + j]);
  return {std::move(f), std::move(piv)};
}

PrimeFieldMatrix rref(const PrimeFieldMatrix& a) { return rref_with_pivots(a).form; }

bool is_rref(const PrimeFieldMatrix& a) { return rref(a) == a; }

bool is_rcef(const PrimeFieldMatrix& a) { return is_rref(a.transpose()); }

GLElement::GLElement(PrimeFieldMatrix m) : m_(std::move(m)) {
  const std::size_t n = m_.rows();
  if (m_.cols() != n) throw RankError("GL element must be square");
  // Reduce [M | I] to [I | M^-1].
  const std::size_t w = 2 * n;
  std::vector<std::uint32_t> aug(n * w, 0);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug[i * w + j] = m_.at(i, j);
    aug[i * w + n + i] = 1;
  }
  auto piv = reduce_in_place(aug, n, w, n, m_.p());
  if (piv.size() != n) throw RankError("matrix is not invertible");
  inv_ = PrimeFieldMatrix(m_.p(), n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) inv_.set(i, j, aug[i * w + n + j]);
}

RcefDecomposition rcef_decompose(const PrimeFieldMatrix& a) {
  const std::size_t n = a.rows(), k = a.cols();
  // Row-reduce [A^t | I_k] to [R | E]; then E·A^t = R, so A·E^t = R^t.
  const std::size_t w = n + k;
  std::vector<std::uint32_t> aug(k * w, 0);
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug[i * w + j] = a.at(j, i);
    aug[i * w + n + i] = 1;
  }
  auto piv = reduce_in_place(aug, k, w, n, a.p());
  if (piv.size() != k)
    throw RankError("rcef_decompose: rank " + std::to_string(piv.size()) + " < " +
                    std::to_string(k) + " columns");
  PrimeFieldMatrix red(a.p(), n, k), tau(a.p(), k, k);
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = 0; j < n; ++j) red.set(j, i, aug[i * w + j]);
    for (std::size_t j = 0; j < k; ++j) tau.set(j, i, aug[i * w + n + j]);
  }
  return {std::move(red), GLElement(std::move(tau))};
}

namespace {

// RCEF n×k whose columns span the row space of m (first `rank` rows of rref(m), transposed).
PrimeFieldMatrix rcef_basis_of_rows(const PrimeFieldMatrix& m, std::size_t& rank,
                                    std::vector<std::size_t>& pivots) {
  auto rr = rref_with_pivots(m);
  rank = rr.pivots.size();
  pivots = rr.pivots;
  PrimeFieldMatrix out(m.p(), m.cols(), rank);
  for (std::size_t i = 0; i < rank; ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) out.set(j, i, rr.form.at(i, j));
  return out;
}

}  // namespace

Tau2Decomposition tau2(const PrimeFieldMatrix& a) {
  if (a.rows() != a.cols()) throw DimensionError("tau2: matrix must be square");
  std::size_t k0 = 0, k1 = 0;
  std::vector<std::size_t> piv0, piv1;
  PrimeFieldMatrix a0 = rcef_basis_of_rows(a.transpose(), k0, piv0);
  PrimeFieldMatrix a1 = rcef_basis_of_rows(a, k1, piv1);
  if (k0 == 0) throw RankError("tau2: rank 0 matrix has no factorization");
  // Row piv0[i] of a0 is e_i and row piv1[j] of a1 is e_j, so Gamma_ij = A[piv0[i], piv1[j]].
  PrimeFieldMatrix g(a.p(), k0, k0);
  for (std::size_t i = 0; i < k0; ++i)
    for (std::size_t j = 0; j < k0; ++j) g.set(i, j, a.at(piv0[i], piv1[j]));
  if (a0 * g * a1.transpose() != a) throw Error("tau2: internal factorization check failed");
  return {GLElement(std::move(g)), std::move(a0), std::move(a1)};
}

PrimeFieldMatrix phi(const RigidSurjection& f, const LinearOrder& codomain) {
  if (!codomain.has_labels() || codomain.field() == 0)
    throw DomainError("phi: codomain must be the labelled order F_p^k");
  const std::uint32_t p = codomain.field();
  const std::size_t k = codomain.label_length();
  if (f.codomain_size() != codomain.size())
    throw DomainError("phi: map codomain size " + std::to_string(f.codomain_size()) +
                      " is not |F_p^k| = " + std::to_string(codomain.size()));
  PrimeFieldMatrix m(p, f.domain_size(), k);
  for (std::size_t j = 0; j < f.domain_size(); ++j) {
    const auto& lab = codomain.label(f(j));
    for (std::size_t i = 0; i < k; ++i) m.set(j, i, lab[i]);
  }
  return m;
}

Characterization rref_characterization(const PrimeFieldMatrix& a, std::uint64_t max_domain) {
  const std::size_t k = a.rows(), n = a.cols();
  const std::uint32_t p = a.p();
  if (a.rank() != k) throw RankError("rref_characterization: matrix is not of full row rank");
  std::uint64_t domain = 1;
  for (std::size_t i = 0; i < n; ++i) {
    domain *= p;
    if (domain > max_domain)
      throw BudgetError("rref_characterization: p^n exceeds " + std::to_string(max_domain));
  }
  Characterization out;
  out.is_rref = is_rref(a);

  // First occurrences of A·v, v in antilex order, must come in increasing antilex rank.
  std::uint64_t codomain = 1;
  for (std::size_t i = 0; i < k; ++i) codomain *= p;
  std::vector<char> seen(codomain, 0);
  std::uint64_t next = 0;
  bool rigid = true;
  for (std::uint64_t r = 0; r < domain && rigid; ++r) {
    const auto img = mat_vec(a, antilex_unrank(r, p, n));
    const auto ir = antilex_rank(img, p);
    if (seen[ir]) continue;
    seen[ir] = 1;
    if (ir != next) rigid = false;
    ++next;
  }
  rigid = rigid && next == codomain;

  bool units = true;
  for (std::size_t i = 0; i < k && units; ++i) {
    bool found = false;
    for (std::size_t j = 0; j < n && !found; ++j) {
      bool is_unit = true;
      for (std::size_t l = 0; l < k; ++l)
        if (a.at(l, j) != (l == i ? 1u : 0u)) is_unit = false;
      found = is_unit;
    }
    units = found;
  }
  out.rigid_with_units = rigid && units;
  return out;
}

BigInt gl_order(std::uint32_t p, std::size_t k) {
  BigInt pk = 1;
  for (std::size_t i = 0; i < k; ++i) pk *= p;
  BigInt out = 1, pi = 1;
  for (std::size_t i = 0; i < k; ++i) {
    out *= pk - pi;
    pi *= p;
  }
  return out;
}

BigInt gaussian_binomial(std::uint32_t p, std::size_t n, std::size_t k) {
  if (k > n) return 0;
  BigInt num = 1, den = 1, pn = 1, pk = 1;
  for (std::size_t i = 0; i < n; ++i) pn *= p;
  for (std::size_t i = 0; i < k; ++i) pk *= p;
  BigInt a = pn, b = pk;
  for (std::size_t i = 0; i < k; ++i) {
    num *= a - 1;
    den *= b - 1;
    a /= p;
    b /= p;
  }
  return num / den;
}

std::vector<PrimeFieldMatrix> enumerate_grassmannian(std::uint32_t p, std::size_t k, std::size_t n,
                                                     std::uint64_t max_count) {
  if (!is_prime(p)) throw DomainError("enumerate_grassmannian: p is not prime");
  if (k < 1 || k > n) throw DomainError("enumerate_grassmannian: need 1 <= k <= n");
  if (gaussian_binomial(p, n, k) > max_count)
    throw BudgetError("enumerate_grassmannian: more than " + std::to_string(max_count) +
                      " subspaces");
  std::vector<PrimeFieldMatrix> out;
  std::vector<std::size_t> piv(k);
  for (std::size_t i = 0; i < k; ++i) piv[i] = i;
  while (true) {
    // Free positions of the k×n RREF with these pivots.
    std::vector<std::pair<std::size_t, std::size_t>> free;
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t c = piv[i] + 1; c < n; ++c)
        if (std::find(piv.begin(), piv.end(), c) == piv.end()) free.emplace_back(i, c);
    std::vector<std::uint32_t> val(free.size(), 0);
    while (true) {
      PrimeFieldMatrix m(p, n, k);
      for (std::size_t i = 0; i < k; ++i) m.set(piv[i], i, 1);
      for (std::size_t f = 0; f < free.size(); ++f) m.set(free[f].second, free[f].first, val[f]);
      out.push_back(std::move(m));
      std::size_t f = 0;
      while (f < val.size() && ++val[f] == p) val[f++] = 0;
      if (f == val.size()) break;
    }
    // Next k-subset of {0..n-1}.
    std::size_t i = k;
    while (i > 0 && piv[i - 1] == n - k + (i - 1)) --i;
    if (i == 0) break;
    ++piv[i - 1];
    for (std::size_t j = i; j < k; ++j) piv[j] = piv[j - 1] + 1;
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<PrimeFieldMatrix> enumerate_full_rank(std::uint32_t p, std::size_t n, std::size_t k,
                                                  std::uint64_t max_count) {
  if (!is_prime(p)) throw DomainError("enumerate_full_rank: p is not prime");
  if (k > n) return {};
  const std::size_t cells = n * k;
  std::uint64_t total = 1;
  for (std::size_t i = 0; i < cells; ++i) {
    total *= p;
    if (total > max_count * 4)
      throw BudgetError("enumerate_full_rank: search space too large");
  }
  std::vector<PrimeFieldMatrix> out;
  std::vector<std::uint32_t> e(cells, 0);
  for (std::uint64_t t = 0; t < total; ++t) {
    // Last entry varies fastest so output is lexicographic on entries.
    std::uint64_t x = t;
    for (std::size_t i = cells; i-- > 0;) {
      e[i] = static_cast<std::uint32_t>(x % p);
      x /= p;
    }
    PrimeFieldMatrix m(p, n, k);
    for (std::size_t i = 0; i < cells; ++i) m.set(i / k, i % k, e[i]);
    if (m.rank() == k) out.push_back(std::move(m));
  }
  if (out.size() > max_count) throw BudgetError("enumerate_full_rank: too many matrices");
  return out;
}

}  // namespace ramfac
