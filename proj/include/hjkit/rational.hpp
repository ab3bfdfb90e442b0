#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

namespace hjkit {

// All weights, densities and thresholds are exact rationals; nothing in the
// library rounds through floating point.
using BigInt = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

// Accepts "p", "-p", "p/q" with q > 0 after sign normalization.
Rat parse_rational(const std::string& text);

// Canonical form: lowest terms, "p" when the denominator is 1, else "p/q".
std::string format_rational(const Rat& r);

std::string format_bigint(const BigInt& z);
BigInt parse_bigint(const std::string& text);

// Smallest integer >= r.
BigInt rat_ceil(const Rat& r);

}  // namespace hjkit
