#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <boost/multiprecision/rational_adaptor.hpp>

#include <stdexcept>
#include <string>

namespace brt {

using BigInt = boost::multiprecision::number<boost::multiprecision::cpp_int_backend<>,
                                             boost::multiprecision::et_off>;
using Rational = boost::multiprecision::number<boost::multiprecision::rational_adaptor<
                                                   boost::multiprecision::cpp_int_backend<>>,
                                               boost::multiprecision::et_off>;

// Bad arguments: sizes that do not match, malformed strings, values out of domain.
class InvalidInput : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// A size guard tripped (state space or enumeration too large).
class ResourceLimit : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

double to_double(const BigInt& x);
double to_double(const Rational& x);

// Natural log of a positive integer, safe beyond double range.
double log_big(const BigInt& x);

BigInt factorial(unsigned n);
BigInt binomial(unsigned n, unsigned k);

// Parses "p/q", an integer, or a finite decimal literal exactly.
Rational parse_rational(const std::string& text);
std::string to_string(const Rational& x);

}  // namespace brt
