#pragma once

// Closed-form Ramsey-number bounds. Graham-Rothschild numbers are never
// evaluated; they stay as symbolic calls with exact arguments.

#include <optional>
#include <string>

#include "ramfac/core.hpp"

namespace ramfac {

struct GRBound {
  BigInt d, m, r;
  std::string context;
  std::string to_string() const;  // "GR(d,m,r)"
};

/// n_∞(d, m, r, ε) ≤ GR(⌊(1+4/ε)^d⌋, ⌊(1+4/ε)^d⌋·2^d·m!/(m−d)!, r). The same
/// bound holds for n_pol. Throws DomainError if m < d, d < 1 or ε <= 0.
GRBound bound_n_infty(unsigned long d, unsigned long m, unsigned long r, const Rational& eps);

struct DimHBound {
  Rational base;                 // 1 + 8(5+ε)/ε
  BigInt exp_f, exp_g;           // n·dim F, n·dim G
  std::optional<BigInt> value;   // exact when it fits under the cap
  std::string expression;        // always present
  std::optional<double> log2_value;  // approximate size, absent when not representable as a double
  // n must itself satisfy n >= n_pol(npol_d, npol_m, r, ε/4).
  BigInt npol_d, npol_m;
  Rational npol_eps;
};

/// dim H ≤ (dim F)^{b^{n·dim F}} · (dim G)^{b^{n·dim G}} · n with b = 1 + 8(5+ε)/ε.
/// The value is computed exactly when the exponents are integers and the
/// result has at most cap_bits bits; otherwise only the expression is kept.
DimHBound bound_dim_h(unsigned long dim_f, unsigned long dim_g, const Rational& eps, const BigInt& n,
                      unsigned long cap_bits = 1UL << 22);

}  // namespace ramfac
