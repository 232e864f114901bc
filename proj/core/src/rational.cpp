#include "strongdom/rational.hpp"

#include <cstdlib>

namespace strongdom {

Rational Rational::parse(const std::string& text) {
  std::size_t slash = text.find('/');
  if (slash == std::string::npos || slash == 0 || slash + 1 == text.size())
    throw ParseError("expected rational of the form p/q: '" + text + "'");
  std::size_t used = 0;
  long long num = 0, den = 0;
  try {
    num = std::stoll(text.substr(0, slash), &used);
    if (used != slash) throw std::invalid_argument("junk");
    std::string den_part = text.substr(slash + 1);
    den = std::stoll(den_part, &used);
    if (used != den_part.size()) throw std::invalid_argument("junk");
  } catch (const std::exception&) {
    throw ParseError("expected rational of the form p/q: '" + text + "'");
  }
  if (den == 0) throw ParseError("rational with zero denominator: '" + text + "'");
  return Rational(num, den);
}

}  // namespace strongdom
