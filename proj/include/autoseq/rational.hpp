#pragma once

#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace autoseq {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline double to_double(const Rational& q) { return q.convert_to<double>(); }
inline std::string to_string(const Rational& q) { return q.str(); }

}  // namespace autoseq
