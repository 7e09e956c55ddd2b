#pragma once

#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace xmnlab {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// Always "p/q", integers included ("4/1").
inline std::string fraction_string(const Rational& r) {
  return boost::multiprecision::numerator(r).str() + "/" +
         boost::multiprecision::denominator(r).str();
}

inline double to_double(const Rational& r) { return r.convert_to<double>(); }

// Exact r^k for k >= 0.
inline Rational pow(const Rational& r, unsigned k) {
  BigInt num = boost::multiprecision::pow(boost::multiprecision::numerator(r), k);
  BigInt den = boost::multiprecision::pow(boost::multiprecision::denominator(r), k);
  return Rational(num, den);
}

}  // namespace xmnlab
