#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>
#include <string_view>

#include "tropnet/error.hpp"

namespace tropnet {

// Exact rational arithmetic everywhere: the identities this library checks
// (weight preservation, round trips, cone membership) are exact linear
// statements, never tolerance-based.
using Rat = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;

// "p" for integers, "p/q" otherwise.
std::string rat_str(const Rat& r);

// Accepts "p", "p/q", leading '-'. Throws ParseError.
Rat rat_parse(std::string_view s);

// Exact binary expansion of the double (doubles are dyadic rationals).
Rat rat_from_double(double x);

double rat_to_double(const Rat& r);

Rat rat_abs(const Rat& r);

}  // namespace tropnet
