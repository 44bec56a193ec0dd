#include "ramfac/core.hpp"

#include <cctype>

namespace ramfac {

Rational parse_rational(const std::string& text) {
  std::string s;
  for (char ch : text)
    if (!std::isspace(static_cast<unsigned char>(ch))) s += ch;
  if (s.empty()) throw ParseError("empty rational");
  auto digits = [&](const std::string& t, bool allow_sign) {
    std::size_t i = 0;
    if (allow_sign && i < t.size() && (t[i] == '-' || t[i] == '+')) ++i;
    if (i == t.size()) return false;
    for (; i < t.size(); ++i)
      if (!std::isdigit(static_cast<unsigned char>(t[i]))) return false;
    return true;
  };
  try {
    if (auto slash = s.find('/'); slash != std::string::npos) {
      const std::string num = s.substr(0, slash), den = s.substr(slash + 1);
      if (!digits(num, true) || !digits(den, false)) throw ParseError("malformed rational '" + text + "'");
      BigInt d(den);
      if (d == 0) throw ParseError("zero denominator in '" + text + "'");
      return Rational(BigInt(num[0] == '+' ? num.substr(1) : num), d);
    }
    if (auto dot = s.find('.'); dot != std::string::npos) {
      std::string ip = s.substr(0, dot), fp = s.substr(dot + 1);
      bool neg = !ip.empty() && ip[0] == '-';
      if (!ip.empty() && (ip[0] == '-' || ip[0] == '+')) ip = ip.substr(1);
      if (ip.empty()) ip = "0";
      if (!digits(ip, false) || (!fp.empty() && !digits(fp, false)))
        throw ParseError("malformed decimal '" + text + "'");
      BigInt den = 1;
      for (std::size_t i = 0; i < fp.size(); ++i) den *= 10;
      Rational q(BigInt(ip + fp), den);
      return neg ? Rational(-q) : q;
    }
    if (!digits(s, true)) throw ParseError("malformed rational '" + text + "'");
    return Rational(BigInt(s[0] == '+' ? s.substr(1) : s));
  } catch (const ParseError&) {
    throw;
  } catch (const std::exception&) {
    throw ParseError("malformed rational '" + text + "'");
  }
}

std::string to_string(const Rational& q) {
  const BigInt num = boost::multiprecision::numerator(q);
  const BigInt den = boost::multiprecision::denominator(q);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

}  // namespace ramfac
