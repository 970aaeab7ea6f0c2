#pragma once

#include <string>
#include <vector>

#include "pretzel/intmat.hpp"

namespace pretzel {

/// Univariate polynomial with exact integer coefficients, lowest degree first.
class IntPolynomial {
 public:
  IntPolynomial() = default;
  explicit IntPolynomial(std::vector<Integer> coefficients);
  IntPolynomial(std::initializer_list<long> coefficients);

  static IntPolynomial monomial(Integer c, std::size_t degree);

  bool is_zero() const { return coeffs_.empty(); }
  /// -1 for the zero polynomial.
  long degree() const { return static_cast<long>(coeffs_.size()) - 1; }
  const std::vector<Integer>& coefficients() const { return coeffs_; }
  Integer coefficient(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : Integer(0); }
  Integer evaluate(const Integer& t) const;

  friend IntPolynomial operator+(const IntPolynomial& a, const IntPolynomial& b);
  friend IntPolynomial operator-(const IntPolynomial& a, const IntPolynomial& b);
  friend IntPolynomial operator*(const IntPolynomial& a, const IntPolynomial& b);
  friend bool operator==(const IntPolynomial& a, const IntPolynomial& b) { return a.coeffs_ == b.coeffs_; }

  /// Exact division; throws DomainError if `divisor` does not divide.
  IntPolynomial exact_divide(const IntPolynomial& divisor) const;

 private:
  void trim();
  std::vector<Integer> coeffs_;
};

std::string to_string(const IntPolynomial& p);

/// True when a = ±t^k * b for some integer k (Laurent units).
bool associated(const IntPolynomial& a, const IntPolynomial& b);

/// det(t*A - B) for square integer matrices of equal size.
IntPolynomial pencil_determinant(const IntMatrix& a, const IntMatrix& b);

}  // namespace pretzel
