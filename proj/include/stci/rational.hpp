#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <string>

namespace stci {

// Exact arithmetic everywhere. Coefficients of the power identity f1^c and of
// subduction representatives outgrow int64 quickly, so all polynomial and
// series coefficients are arbitrary-precision rationals.
using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

// Canonical text form: lowest terms, "-3", "3", "3/2". Parsing accepts the
// same forms (optional leading minus, optional "/denominator").
std::string rat_to_string(const Rat& r);
Rat rat_from_string(const std::string& s);

Int int_gcd(Int a, Int b);

} // namespace stci
