#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <stdexcept>
#include <string>

namespace rat {

using Rational = boost::multiprecision::cpp_rational;

/// Parses "7", "-3/4" or a finite decimal like "0.25" into an exact rational.
Rational parse_rational(const std::string& text);

std::string to_string(const Rational& r);

double to_double(const Rational& r);

}  // namespace rat
