#pragma once

#include <cstdint>

#include <boost/multiprecision/cpp_int.hpp>

namespace char2lift {

// Exact integer / rational scalars used everywhere a value can outgrow a
// machine word (orders, repeat counts, characteristic coefficients, ...).
using BigInt = boost::multiprecision::cpp_int;
using BigRat = boost::multiprecision::cpp_rational;

BigInt factorial(std::int64_t n);

// binomial(n, k) for n >= 0; zero when k < 0 or k > n.
BigInt binomial(std::int64_t n, std::int64_t k);

}  // namespace char2lift
