#include "hjkit/rational.hpp"

#include <stdexcept>

namespace hjkit {

Rat parse_rational(const std::string& text) {
  if (text.empty()) throw std::invalid_argument("empty rational literal");
  const auto slash = text.find('/');
  try {
    if (slash == std::string::npos) return Rat(BigInt(text));
    BigInt num(text.substr(0, slash));
    BigInt den(text.substr(slash + 1));
    if (den == 0) throw std::invalid_argument("zero denominator");
    return Rat(num, den);
  } catch (const std::runtime_error& e) {
    throw std::invalid_argument("bad rational literal '" + text + "': " + e.what());
  }
}

std::string format_rational(const Rat& r) {
  const BigInt num = boost::multiprecision::numerator(r);
  const BigInt den = boost::multiprecision::denominator(r);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

std::string format_bigint(const BigInt& z) { return z.str(); }

BigInt parse_bigint(const std::string& text) {
  const size_t digits_from = text.size() > 0 && (text[0] == '-' || text[0] == '+') ? 1 : 0;
  if (text.size() == digits_from) {
    throw std::invalid_argument("bad integer literal '" + text + "'");
  }
  for (size_t i = digits_from; i < text.size(); ++i) {
    if (text[i] < '0' || text[i] > '9') {
      throw std::invalid_argument("bad integer literal '" + text + "'");
    }
  }
  return BigInt(text);
}

BigInt rat_ceil(const Rat& r) {
  const BigInt num = boost::multiprecision::numerator(r);
  const BigInt den = boost::multiprecision::denominator(r);  // always > 0
  BigInt q = num / den;                                      // truncates toward zero
  if (q * den < num) ++q;                                    // num not an exact multiple, r > q
  return q;
}

}  // namespace hjkit
