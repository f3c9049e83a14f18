#include "syt/big_count.hpp"

#include <algorithm>
#include <cctype>

namespace syt {

BigCount binomial(long a, long b) {
  if (a < 0 || b < 0 || b > a) return 0;
  b = std::min(b, a - b);
  BigCount result = 1;
  for (long i = 1; i <= b; ++i) {
    result *= a - b + i;
    result /= i;  // exact: result is C(a - b + i, i) here
  }
  return result;
}

BigCount factorial(long n) {
  if (n < 0) throw std::domain_error("factorial of a negative number");
  BigCount result = 1;
  for (long i = 2; i <= n; ++i) result *= i;
  return result;
}

BigCount catalan(long n) {
  if (n < 0) return 0;
  return binomial(2 * n, n) / (n + 1);
}

BigCount certify_integer(const Rational& value, const std::string& what) {
  if (boost::multiprecision::denominator(value) != 1) {
    throw IntegralityError(what + " evaluated to the non-integer " + value.str());
  }
  return boost::multiprecision::numerator(value);
}

BigCount parse_decimal(const std::string& text) {
  std::size_t start = (!text.empty() && text[0] == '-') ? 1 : 0;
  if (text.size() == start ||
      !std::all_of(text.begin() + static_cast<long>(start), text.end(),
                   [](unsigned char ch) { return std::isdigit(ch) != 0; })) {
    throw std::invalid_argument("not a decimal integer: '" + text + "'");
  }
  return BigCount(text);
}

}  // namespace syt
