#include "colorlie/rational.hpp"

#include <cctype>

#include "colorlie/error.hpp"

namespace colorlie {

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s)
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  return true;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  std::string_view body = text;
  bool negative = false;
  if (!body.empty() && (body.front() == '-' || body.front() == '+')) {
    negative = body.front() == '-';
    body.remove_prefix(1);
  }
  const auto slash = body.find('/');
  const std::string_view num = body.substr(0, slash);
  const std::string_view den = slash == std::string_view::npos ? "1" : body.substr(slash + 1);
  if (!all_digits(num) || !all_digits(den))
    throw Error(Errc::ParseError, "malformed rational '" + std::string(text) + "'");
  Integer p{std::string(num)};
  Integer q{std::string(den)};
  if (q == 0) throw Error(Errc::ParseError, "zero denominator in '" + std::string(text) + "'");
  if (negative) p = -p;
  return Rational(p, q);
}

std::string to_string(const Rational& q) { return q.str(); }

}  // namespace colorlie
