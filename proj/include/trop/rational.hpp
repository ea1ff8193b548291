#pragma once

#include <boost/multiprecision/gmp.hpp>
#include <stdexcept>
#include <string>
#include <string_view>

namespace trop {

// Exact rational scalar. All geometric predicates in this library are
// equality-sensitive (coaxiality, incidence), so floating point is never
// used; GMP keeps values canonical (gcd 1, positive denominator).
// Expression templates are off so arithmetic yields plain values.
using Rat = boost::multiprecision::number<boost::multiprecision::gmp_rational,
                                          boost::multiprecision::et_off>;
using Int = boost::multiprecision::number<boost::multiprecision::gmp_int,
                                          boost::multiprecision::et_off>;

class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

class ParseError : public Error {
public:
    explicit ParseError(const std::string& what) : Error(what) {}
};

// Serialized as "p" when the denominator is 1, otherwise "p/q".
std::string rat_to_string(const Rat& r);

// Accepts "p" and "p/q" with an optional leading minus sign.
Rat rat_from_string(std::string_view s);

}  // namespace trop
