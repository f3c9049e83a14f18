#include "syt/qseries.hpp"

#include <algorithm>

namespace syt {

QPolynomial::QPolynomial(std::vector<BigCount> coefficients)
    : coefficients_(std::move(coefficients)) {
  normalize();
}

QPolynomial::QPolynomial(long constant) {
  if (constant != 0) coefficients_.emplace_back(constant);
}

QPolynomial QPolynomial::monomial(long exponent, BigCount c) {
  if (exponent < 0) throw std::domain_error("negative exponent in QPolynomial");
  std::vector<BigCount> coefficients(static_cast<std::size_t>(exponent) + 1);
  coefficients.back() = std::move(c);
  return QPolynomial(std::move(coefficients));
}

void QPolynomial::normalize() {
  while (!coefficients_.empty() && coefficients_.back() == 0) coefficients_.pop_back();
}

long QPolynomial::lowest_degree() const {
  for (std::size_t i = 0; i < coefficients_.size(); ++i) {
    if (coefficients_[i] != 0) return static_cast<long>(i);
  }
  return kZeroDegree;
}

BigCount QPolynomial::coefficient(long exponent) const {
  if (exponent < 0 || exponent > degree()) return 0;
  return coefficients_[static_cast<std::size_t>(exponent)];
}

BigCount QPolynomial::evaluate(const BigCount& q) const {
  BigCount value = 0;
  for (auto it = coefficients_.rbegin(); it != coefficients_.rend(); ++it) {
    value = value * q + *it;
  }
  return value;
}

QPolynomial& QPolynomial::operator+=(const QPolynomial& other) {
  if (coefficients_.size() < other.coefficients_.size()) {
    coefficients_.resize(other.coefficients_.size());
  }
  for (std::size_t i = 0; i < other.coefficients_.size(); ++i) {
    coefficients_[i] += other.coefficients_[i];
  }
  normalize();
  return *this;
}

QPolynomial& QPolynomial::operator-=(const QPolynomial& other) {
  if (coefficients_.size() < other.coefficients_.size()) {
    coefficients_.resize(other.coefficients_.size());
  }
  for (std::size_t i = 0; i < other.coefficients_.size(); ++i) {
    coefficients_[i] -= other.coefficients_[i];
  }
  normalize();
  return *this;
}

QPolynomial& QPolynomial::operator*=(const QPolynomial& other) {
  if (is_zero() || other.is_zero()) {
    coefficients_.clear();
    return *this;
  }
  std::vector<BigCount> product(coefficients_.size() + other.coefficients_.size() - 1);
  for (std::size_t i = 0; i < coefficients_.size(); ++i) {
    if (coefficients_[i] == 0) continue;
    for (std::size_t j = 0; j < other.coefficients_.size(); ++j) {
      product[i + j] += coefficients_[i] * other.coefficients_[j];
    }
  }
  coefficients_ = std::move(product);
  normalize();
  return *this;
}

std::string QPolynomial::to_string() const {
  if (is_zero()) return "0";
  std::string out;
  for (std::size_t e = 0; e < coefficients_.size(); ++e) {
    const BigCount& c = coefficients_[e];
    if (c == 0) continue;
    const bool negative = c < 0;
    const BigCount magnitude = negative ? BigCount(-c) : c;
    if (out.empty()) {
      if (negative) out += '-';
    } else {
      out += negative ? " - " : " + ";
    }
    if (e == 0) {
      out += magnitude.str();
      continue;
    }
    if (magnitude != 1) out += magnitude.str();
    out += 'q';
    if (e > 1) out += '^' + std::to_string(e);
  }
  return out;
}

QPolynomial add(const QPolynomial& a, const QPolynomial& b) { return a + b; }

QPolynomial multiply(const QPolynomial& a, const QPolynomial& b) { return a * b; }

QPolynomial exact_divide(const QPolynomial& a, const QPolynomial& b) {
  if (b.is_zero()) throw std::domain_error("division by the zero polynomial");
  if (a.is_zero()) return {};
  if (a.degree() < b.degree()) {
    throw InexactDivision("dividend " + a.to_string() + " has lower degree than divisor " +
                          b.to_string());
  }
  std::vector<BigCount> remainder = a.coefficients();
  const auto& divisor = b.coefficients();
  const std::size_t shift_max = remainder.size() - divisor.size();
  std::vector<BigCount> quotient(shift_max + 1);
  const BigCount& lead = divisor.back();
  for (std::size_t step = shift_max + 1; step-- > 0;) {
    const BigCount& top = remainder[step + divisor.size() - 1];
    if (top == 0) continue;
    BigCount factor;
    BigCount rest;
    boost::multiprecision::divide_qr(top, lead, factor, rest);
    if (rest != 0) {
      throw InexactDivision("quotient of " + a.to_string() + " by " + b.to_string() +
                            " has a non-integer coefficient");
    }
    for (std::size_t j = 0; j < divisor.size(); ++j) remainder[step + j] -= factor * divisor[j];
    quotient[step] = std::move(factor);
  }
  if (std::any_of(remainder.begin(), remainder.end(), [](const BigCount& c) { return c != 0; })) {
    throw InexactDivision(b.to_string() + " does not divide " + a.to_string());
  }
  return QPolynomial(std::move(quotient));
}

QPolynomial q_int(long m) {
  if (m < 1) throw DomainError("q-integer [m]_q needs m >= 1, got " + std::to_string(m));
  return QPolynomial(std::vector<BigCount>(static_cast<std::size_t>(m), 1));
}

QPolynomial stanley_maj_gf(const Shape& shape) {
  long offset = 0;
  for (int i = 1; i <= shape.rows(); ++i) offset += static_cast<long>(i - 1) * shape.row_length(i);

  QPolynomial numerator = 1;
  for (long k = 1; k <= shape.size(); ++k) numerator *= q_int(k);

  std::vector<int> hooks;
  for (int i = 1; i <= shape.rows(); ++i) {
    for (int j = 1; j <= shape.row_length(i); ++j) hooks.push_back(hook_length(shape, {i, j}));
  }

  QPolynomial quotient;
  try {
    quotient = numerator;
    for (int h : hooks) quotient = exact_divide(quotient, q_int(h));
  } catch (const InexactDivision&) {
    // Fall back to a single division by the whole hook product.
    QPolynomial denominator = 1;
    for (int h : hooks) denominator *= q_int(h);
    try {
      quotient = exact_divide(numerator, denominator);
    } catch (const InexactDivision& e) {
      throw IntegralityError("hook formula for (" + shape.to_string() +
                             ") is not a polynomial: " + e.what());
    }
  }
  return quotient * QPolynomial::monomial(offset);
}

}  // namespace syt
