#include "hstarlab/int_poly.hpp"

#include <algorithm>

#include "hstarlab/coeffcore.hpp"

namespace hstarlab {

IntPoly::IntPoly(std::vector<BigInt> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

IntPoly::IntPoly(std::initializer_list<long> coeffs) {
  coeffs_.reserve(coeffs.size());
  for (long c : coeffs) coeffs_.emplace_back(c);
  trim();
}

IntPoly IntPoly::constant(BigInt value) { return IntPoly(std::vector<BigInt>{std::move(value)}); }

IntPoly IntPoly::monomial(BigInt coefficient, std::size_t degree) {
  std::vector<BigInt> c(degree + 1);
  c[degree] = std::move(coefficient);
  return IntPoly(std::move(c));
}

IntPoly IntPoly::linear_power(long shift, std::size_t exponent) {
  std::vector<BigInt> c(exponent + 1);
  BigInt shift_power = 1;
  // Coefficient of t^{e-i} is C(e, i) shift^i.
  for (std::size_t i = 0; i <= exponent; ++i) {
    c[exponent - i] = binomial(static_cast<long>(exponent), static_cast<long>(i)) * shift_power;
    shift_power *= shift;
  }
  return IntPoly(std::move(c));
}

BigInt IntPoly::coeff(std::size_t degree) const {
  return degree < coeffs_.size() ? coeffs_[degree] : BigInt(0);
}

IntPoly IntPoly::truncated(std::size_t max_degree) const {
  if (coeffs_.size() <= max_degree + 1) return *this;
  return IntPoly(std::vector<BigInt>(coeffs_.begin(), coeffs_.begin() + static_cast<long>(max_degree) + 1));
}

IntPoly& IntPoly::operator+=(const IntPoly& other) {
  if (coeffs_.size() < other.coeffs_.size()) coeffs_.resize(other.coeffs_.size());
  for (std::size_t i = 0; i < other.coeffs_.size(); ++i) coeffs_[i] += other.coeffs_[i];
  trim();
  return *this;
}

IntPoly& IntPoly::operator-=(const IntPoly& other) {
  if (coeffs_.size() < other.coeffs_.size()) coeffs_.resize(other.coeffs_.size());
  for (std::size_t i = 0; i < other.coeffs_.size(); ++i) coeffs_[i] -= other.coeffs_[i];
  trim();
  return *this;
}

IntPoly& IntPoly::operator*=(const BigInt& scalar) {
  for (auto& c : coeffs_) c *= scalar;
  trim();
  return *this;
}

IntPoly operator*(const IntPoly& lhs, const IntPoly& rhs) {
  if (lhs.is_zero() || rhs.is_zero()) return {};
  std::vector<BigInt> out(lhs.coeffs_.size() + rhs.coeffs_.size() - 1);
  for (std::size_t i = 0; i < lhs.coeffs_.size(); ++i) {
    if (lhs.coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < rhs.coeffs_.size(); ++j) out[i + j] += lhs.coeffs_[i] * rhs.coeffs_[j];
  }
  return IntPoly(std::move(out));
}

void IntPoly::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

std::ostream& operator<<(std::ostream& os, const IntPoly& p) {
  if (p.is_zero()) return os << "0";
  bool first = true;
  for (std::size_t i = 0; i < p.coeffs().size(); ++i) {
    const BigInt& c = p.coeffs()[i];
    if (c == 0) continue;
    if (!first) os << (c < 0 ? " - " : " + ");
    else if (c < 0) os << "-";
    first = false;
    const BigInt magnitude = abs(c);
    if (i == 0 || magnitude != 1) os << magnitude;
    if (i >= 1) os << "t";
    if (i >= 2) os << "^" << i;
  }
  return os;
}

}  // namespace hstarlab
