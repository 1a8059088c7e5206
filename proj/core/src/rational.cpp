#include "happy/rational.hpp"

#include <cctype>
#include <charconv>
#include <stdexcept>

namespace happy {
namespace {

std::int64_t parse_digits(std::string_view digits, std::string_view whole) {
  if (digits.empty()) throw std::invalid_argument("malformed number '" + std::string(whole) + "'");
  std::int64_t value = 0;
  auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), value);
  if (ec != std::errc{} || ptr != digits.data() + digits.size()) {
    throw std::invalid_argument("malformed number '" + std::string(whole) + "'");
  }
  return value;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  if (text.empty()) throw std::invalid_argument("empty number");
  for (char c : text) {
    if (!std::isdigit(static_cast<unsigned char>(c)) && c != '/' && c != '.') {
      throw std::invalid_argument("malformed number '" + std::string(text) + "'");
    }
  }
  if (auto slash = text.find('/'); slash != std::string_view::npos) {
    std::int64_t num = parse_digits(text.substr(0, slash), text);
    std::int64_t den = parse_digits(text.substr(slash + 1), text);
    if (den == 0) throw std::invalid_argument("zero denominator in '" + std::string(text) + "'");
    return Rational(num, den);
  }
  if (auto dot = text.find('.'); dot != std::string_view::npos) {
    std::string_view int_part = text.substr(0, dot);
    std::string_view frac_part = text.substr(dot + 1);
    if (frac_part.size() > 15) {
      throw std::invalid_argument("too many decimals in '" + std::string(text) + "'");
    }
    std::int64_t whole = int_part.empty() ? 0 : parse_digits(int_part, text);
    std::int64_t frac = parse_digits(frac_part, text);
    std::int64_t scale = 1;
    for (std::size_t i = 0; i < frac_part.size(); ++i) scale *= 10;
    return Rational(whole) + Rational(frac, scale);
  }
  return Rational(parse_digits(text, text));
}

std::string format_rational(const Rational& r) {
  if (r.denominator() == 1) return std::to_string(r.numerator());
  return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

double to_double(const Rational& r) {
  return static_cast<double>(r.numerator()) / static_cast<double>(r.denominator());
}

std::int64_t ceil(const Rational& r) {
  std::int64_t q = r.numerator() / r.denominator();
  if (r.numerator() % r.denominator() != 0 && r.numerator() > 0) ++q;
  return q;
}

}  // namespace happy
