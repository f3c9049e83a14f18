#pragma once

#include <stdexcept>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace syt {

/// Arbitrary-precision integer used for every count in the library.
using BigCount = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Raised when an exact computation produces a non-integral value.
/// Always indicates a bug or a formula applied outside its domain.
class IntegralityError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// Binomial coefficient with C(a, b) = 0 whenever b < 0, a < 0 or b > a.
BigCount binomial(long a, long b);

BigCount factorial(long n);

/// n-th Catalan number, C(2n, n) / (n + 1).
BigCount catalan(long n);

/// Returns the numerator of an integral rational; throws IntegralityError
/// naming `what` if the denominator is not 1.
BigCount certify_integer(const Rational& value, const std::string& what);

inline std::string to_decimal(const BigCount& value) { return value.str(); }

/// Parses a decimal string (optional leading '-'); throws std::invalid_argument.
BigCount parse_decimal(const std::string& text);

}  // namespace syt
