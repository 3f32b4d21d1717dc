#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

#include "florist/error.hpp"

namespace florist {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

// Renders p/q in lowest terms; integers come out without the "/1".
std::string rat_to_string(const Rat& r);

// Accepts "p/q" or a plain integer, with optional sign on the numerator.
Rat rat_from_string(const std::string& s);

std::string int_to_string(const Int& n);
Int int_from_string(const std::string& s);

// count >= 2^(num/den) over the rationals, decided exactly (den > 0, count >= 0).
bool reaches_power_of_two(const Int& count, const Int& num, const Int& den);

}  // namespace florist
