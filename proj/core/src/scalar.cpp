#include "hhops/scalar.hpp"

#include <cctype>

#include "hhops/errors.hpp"

namespace hhops {

std::string to_string(const Rational& q) { return q.get_str(); }

std::string to_string(const Integer& z) { return z.get_str(); }

Rational parse_rational(const std::string& text) {
  std::size_t i = 0;
  bool negative = false;
  if (i < text.size() && (text[i] == '-' || text[i] == '+')) {
    negative = text[i] == '-';
    ++i;
  }
  auto digits = [&](std::size_t from) {
    std::size_t j = from;
    while (j < text.size() && std::isdigit(static_cast<unsigned char>(text[j]))) ++j;
    return j;
  };
  std::size_t end = digits(i);
  if (end == i) throw ParseError("expected digits in rational '" + text + "'", i);
  Integer num(text.substr(i, end - i));
  Integer den = 1;
  if (end < text.size()) {
    if (text[end] != '/') throw ParseError("unexpected character in rational '" + text + "'", end);
    std::size_t dend = digits(end + 1);
    if (dend == end + 1 || dend != text.size())
      throw ParseError("bad denominator in rational '" + text + "'", end + 1);
    den = Integer(text.substr(end + 1));
    if (den == 0) throw ParseError("zero denominator in rational '" + text + "'", end + 1);
  }
  Rational q(num, den);
  q.canonicalize();
  return negative ? Rational(-q) : q;
}

}  // namespace hhops
