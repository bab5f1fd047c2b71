#pragma once

#include <string>
#include <string_view>

#include <boost/rational.hpp>

namespace looplab {

using Rational = boost::rational<long long>;

/// Parses "7", "-3/2" or a finite decimal such as "3.5". Throws InvalidInput.
Rational parse_rational(std::string_view text);

std::string to_string(const Rational& r);

inline double to_double(const Rational& r) { return boost::rational_cast<double>(r); }

}  // namespace looplab
