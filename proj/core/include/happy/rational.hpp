#pragma once

#include <cstdint>
#include <string>
#include <string_view>

#include <boost/rational.hpp>

namespace happy {

// Exact arithmetic for edge weights, the soft threshold and ratio checks.
using Rational = boost::rational<std::int64_t>;

// Accepts "3", "2.5" and "5/2". Throws std::invalid_argument on anything else,
// including negative values.
Rational parse_rational(std::string_view text);

// Canonical text: "3" for integers, "5/2" otherwise.
std::string format_rational(const Rational& r);

double to_double(const Rational& r);

// Smallest integer >= r.
std::int64_t ceil(const Rational& r);

}  // namespace happy
