#pragma once

#include <cstddef>
#include <initializer_list>
#include <ostream>
#include <vector>

#include "hstarlab/bigint.hpp"

namespace hstarlab {

/// Dense univariate polynomial in t with arbitrary-precision coefficients.
/// Index = exponent. The highest stored coefficient is nonzero; the zero
/// polynomial stores nothing.
class IntPoly {
 public:
  IntPoly() = default;
  explicit IntPoly(std::vector<BigInt> coeffs);
  IntPoly(std::initializer_list<long> coeffs);

  static IntPoly constant(BigInt value);
  static IntPoly monomial(BigInt coefficient, std::size_t degree);
  /// (t + shift)^exponent, expanded exactly.
  static IntPoly linear_power(long shift, std::size_t exponent);

  const std::vector<BigInt>& coeffs() const { return coeffs_; }
  bool is_zero() const { return coeffs_.empty(); }
  /// -1 for the zero polynomial.
  long degree() const { return static_cast<long>(coeffs_.size()) - 1; }
  /// Zero beyond the stored degree.
  BigInt coeff(std::size_t degree) const;

  IntPoly truncated(std::size_t max_degree) const;

  IntPoly& operator+=(const IntPoly& other);
  IntPoly& operator-=(const IntPoly& other);
  IntPoly& operator*=(const BigInt& scalar);

  friend IntPoly operator+(IntPoly lhs, const IntPoly& rhs) { return lhs += rhs; }
  friend IntPoly operator-(IntPoly lhs, const IntPoly& rhs) { return lhs -= rhs; }
  friend IntPoly operator*(IntPoly lhs, const BigInt& scalar) { return lhs *= scalar; }
  friend IntPoly operator*(const IntPoly& lhs, const IntPoly& rhs);

  friend bool operator==(const IntPoly& lhs, const IntPoly& rhs) = default;

 private:
  void trim();

  std::vector<BigInt> coeffs_;
};

std::ostream& operator<<(std::ostream& os, const IntPoly& p);

}  // namespace hstarlab
