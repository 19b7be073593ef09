#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

namespace boxkit {

// All measure and domination computations are exact; floating point appears
// only at the tail-bound boundary.
using Rat = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;

// Parses "p/q", "p", "-p/q" or a decimal string like "0.7" (exactly, as
// 7/10). Throws std::invalid_argument on malformed input or q == 0.
Rat parse_rational(const std::string& text);

// "p/q", or just "p" when the denominator is 1.
std::string to_string(const Rat& value);

double to_double(const Rat& value);

Rat rational_pow(const Rat& base, unsigned exponent);

// Product (x)(x-1)...(x-r+1) in exact arithmetic; 1 for r = 0.
Rat falling_factorial(const Rat& x, unsigned r);

}  // namespace boxkit
