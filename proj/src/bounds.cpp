#include "ramfac/bounds.hpp"

#include <cmath>
#include <limits>

namespace ramfac {

namespace {

Rational qpow(const Rational& q, unsigned long k) {
  Rational p = 1;
  for (unsigned long i = 0; i < k; ++i) p *= q;
  return p;
}

BigInt qfloor(const Rational& q) {
  BigInt f = numerator(q) / denominator(q);
  if (q < 0 && f * denominator(q) != numerator(q)) f -= 1;
  return f;
}

}  // namespace

std::string GRBound::to_string() const {
  return "GR(" + d.str() + "," + m.str() + "," + r.str() + ")";
}

GRBound bound_n_infty(unsigned long d, unsigned long m, unsigned long r, const Rational& eps) {
  if (d < 1) throw DomainError("bound_n_infty: d must be positive");
  if (m < d) throw DomainError("bound_n_infty: m < d");
  if (eps <= 0) throw DomainError("bound_n_infty: eps must be positive");
  GRBound b;
  b.d = qfloor(qpow(1 + 4 / eps, d));
  BigInt falling = 1;
  for (unsigned long i = 0; i < d; ++i) falling *= BigInt(m - i);
  b.m = b.d * boost::multiprecision::pow(BigInt(2), static_cast<unsigned>(d)) * falling;
  b.r = r;
  b.context = "n_inf(" + std::to_string(d) + "," + std::to_string(m) + "," + std::to_string(r) + "," +
              ramfac::to_string(eps) + ") = n_pol(same)";
  return b;
}

DimHBound bound_dim_h(unsigned long dim_f, unsigned long dim_g, const Rational& eps, const BigInt& n,
                      unsigned long cap_bits) {
  if (dim_f < 1 || dim_g < 1) throw DomainError("bound_dim_h: dimensions must be positive");
  if (eps <= 0) throw DomainError("bound_dim_h: eps must be positive");
  if (n < 1) throw DomainError("bound_dim_h: n must be positive");
  DimHBound out;
  out.base = 1 + 8 * (5 + eps) / eps;
  out.exp_f = n * dim_f;
  out.exp_g = n * dim_g;
  const Rational a = (10 + 3 * eps) / eps;
  out.npol_d = qfloor(qpow(a, dim_f));
  out.npol_m = qfloor(qpow(a, dim_g) + qpow(a, dim_f) * qpow(out.base, dim_f * dim_g));
  out.npol_eps = eps / 4;

  std::string b = ramfac::to_string(out.base);
  if (denominator(out.base) != 1) b = "(" + b + ")";
  out.expression = std::to_string(dim_f) + "^(" + b + "^" + out.exp_f.str() + ") * " + std::to_string(dim_g) + "^(" +
                   b + "^" + out.exp_g.str() + ") * " + n.str();

  // log2 of d^(base^e), as a double; +inf when out of range.
  const double lb = std::log2(out.base.convert_to<double>());
  auto log2_factor = [&](unsigned long d, const BigInt& e) {
    if (d == 1) return 0.0;
    const double l = e.convert_to<double>() * lb;
    if (l > 1000) return std::numeric_limits<double>::infinity();
    return std::exp2(l) * std::log2(static_cast<double>(d));
  };
  const double total = log2_factor(dim_f, out.exp_f) + log2_factor(dim_g, out.exp_g) + std::log2(n.convert_to<double>());
  if (std::isfinite(total)) out.log2_value = total;

  // A factor d^(base^e) is an integer iff d = 1 or base^e is an integer.
  const bool integral = (dim_f == 1 && dim_g == 1) || denominator(out.base) == 1;
  if (integral && std::isfinite(total) && total <= static_cast<double>(cap_bits)) {
    auto factor = [&](unsigned long d, const BigInt& e) -> BigInt {
      if (d == 1) return 1;
      const BigInt ex = boost::multiprecision::pow(numerator(out.base), e.convert_to<unsigned>());
      return boost::multiprecision::pow(BigInt(d), ex.convert_to<unsigned>());
    };
    out.value = factor(dim_f, out.exp_f) * factor(dim_g, out.exp_g) * n;
  }
  return out;
}

}  // namespace ramfac
