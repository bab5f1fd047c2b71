#include "looplab/rational.hpp"

#include <cctype>
#include <charconv>
#include <limits>

#include "looplab/errors.hpp"

namespace looplab {

namespace {

long long parse_integer(std::string_view s, std::string_view whole) {
  long long v = 0;
  const auto* end = s.data() + s.size();
  const auto res = std::from_chars(s.data(), end, v);
  if (s.empty() || res.ec != std::errc() || res.ptr != end)
    throw InvalidInput("not a rational number: '" + std::string(whole) + "'");
  return v;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  std::string_view s = text;
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  if (const auto slash = s.find('/'); slash != std::string_view::npos) {
    const long long den = parse_integer(s.substr(slash + 1), text);
    if (den == 0) throw InvalidInput("zero denominator in '" + std::string(text) + "'");
    return Rational(parse_integer(s.substr(0, slash), text), den);
  }
  const auto dot = s.find('.');
  if (dot == std::string_view::npos) return Rational(parse_integer(s, text));

  bool negative = !s.empty() && s.front() == '-';
  std::string_view int_part = s.substr(negative ? 1 : 0, dot - (negative ? 1 : 0));
  std::string_view frac = s.substr(dot + 1);
  if (frac.size() > 15 || (int_part.empty() && frac.empty()))
    throw InvalidInput("not a rational number: '" + std::string(text) + "'");
  long long scale = 1;
  for (std::size_t i = 0; i < frac.size(); ++i) scale *= 10;
  const long long ip = int_part.empty() ? 0 : parse_integer(int_part, text);
  const long long fp = frac.empty() ? 0 : parse_integer(frac, text);
  if (fp < 0 || ip < 0 || ip > std::numeric_limits<long long>::max() / scale - 1)
    throw InvalidInput("not a rational number: '" + std::string(text) + "'");
  Rational out(ip * scale + fp, scale);
  return negative ? -out : out;
}

std::string to_string(const Rational& r) {
  if (r.denominator() == 1) return std::to_string(r.numerator());
  return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

}  // namespace looplab
