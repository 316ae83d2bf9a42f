#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <boost/rational.hpp>
#include <numeric>
#include <string>

namespace flip {

// Arbitrary-precision integers everywhere a product of fiber multiplicities
// can show up; machine integers only for indices, element ids and input data.
using Integer = boost::multiprecision::cpp_int;
using Rational = boost::rational<Integer>;

inline Integer iabs(const Integer& a) { return a < 0 ? Integer(-a) : a; }

inline long long gcd_ll(long long a, long long b) {
  return std::gcd(a, b);  // std::gcd works on absolute values
}

inline std::string rational_str(const Rational& r) {
  return r.numerator().str() + "/" + r.denominator().str();
}

}  // namespace flip
