#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "syt/big_count.hpp"
#include "syt/core.hpp"

namespace syt {

/// Raised by exact_divide when the quotient is not an integer polynomial.
class InexactDivision : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Polynomial in q with arbitrary-precision integer coefficients.
/// Trailing zeros are always stripped, so equal polynomials have equal
/// coefficient vectors and the zero polynomial has none.
class QPolynomial {
 public:
  /// Degree reported for the zero polynomial.
  static constexpr long kZeroDegree = -1;

  QPolynomial() = default;
  explicit QPolynomial(std::vector<BigCount> coefficients);
  /// Constant polynomial.
  QPolynomial(long constant);  // NOLINT(google-explicit-constructor)

  /// c * q^exponent.
  static QPolynomial monomial(long exponent, BigCount c = 1);

  const std::vector<BigCount>& coefficients() const { return coefficients_; }
  bool is_zero() const { return coefficients_.empty(); }
  long degree() const { return static_cast<long>(coefficients_.size()) - 1; }
  /// Smallest exponent with a nonzero coefficient; kZeroDegree for zero.
  long lowest_degree() const;
  /// Coefficient of q^exponent (0 beyond the degree).
  BigCount coefficient(long exponent) const;

  BigCount evaluate(const BigCount& q) const;

  QPolynomial& operator+=(const QPolynomial& other);
  QPolynomial& operator-=(const QPolynomial& other);
  QPolynomial& operator*=(const QPolynomial& other);

  friend QPolynomial operator+(QPolynomial a, const QPolynomial& b) { return a += b; }
  friend QPolynomial operator-(QPolynomial a, const QPolynomial& b) { return a -= b; }
  friend QPolynomial operator*(QPolynomial a, const QPolynomial& b) { return a *= b; }

  bool operator==(const QPolynomial&) const = default;

  /// "1 + q^2 + 3q^4": ascending exponents, unit coefficients elided,
  /// "0" for the zero polynomial.
  std::string to_string() const;

 private:
  void normalize();

  std::vector<BigCount> coefficients_;
};

QPolynomial add(const QPolynomial& a, const QPolynomial& b);
QPolynomial multiply(const QPolynomial& a, const QPolynomial& b);

/// Quotient q with a == b * q. Throws InexactDivision when the remainder is
/// nonzero or a coefficient of the quotient would not be an integer, and
/// std::domain_error when b is zero.
QPolynomial exact_divide(const QPolynomial& a, const QPolynomial& b);

/// q-integer [m]_q = 1 + q + ... + q^(m-1). Throws DomainError for m < 1.
QPolynomial q_int(long m);

/// Major-index generating function via the Stanley hook formula:
/// q^(sum (i-1) lambda_i) * prod_{k<=n} [k]_q / prod_{cells} [h]_q.
QPolynomial stanley_maj_gf(const Shape& shape);

}  // namespace syt
