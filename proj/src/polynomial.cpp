#include "nis/polynomial.hpp"

#include <algorithm>

namespace nis {

CountPolynomial::CountPolynomial(std::vector<BigInt> coeffs) : coeffs_(std::move(coeffs)) {
  trim();
}

CountPolynomial CountPolynomial::one() { return CountPolynomial({BigInt(1)}); }

CountPolynomial CountPolynomial::monomial(std::size_t power, BigInt coefficient) {
  std::vector<BigInt> c(power + 1);
  c[power] = std::move(coefficient);
  return CountPolynomial(std::move(c));
}

BigInt CountPolynomial::coefficient(std::size_t k) const {
  return k < coeffs_.size() ? coeffs_[k] : BigInt(0);
}

BigInt CountPolynomial::at_one() const {
  BigInt sum = 0;
  for (const auto& c : coeffs_) sum += c;
  return sum;
}

BigInt CountPolynomial::derivative_at_one() const {
  BigInt sum = 0;
  for (std::size_t k = 1; k < coeffs_.size(); ++k) sum += coeffs_[k] * k;
  return sum;
}

CountPolynomial CountPolynomial::shifted(std::size_t k) const {
  if (is_zero()) return {};
  std::vector<BigInt> c(k, BigInt(0));
  c.insert(c.end(), coeffs_.begin(), coeffs_.end());
  CountPolynomial out;
  out.coeffs_ = std::move(c);
  return out;
}

CountPolynomial& CountPolynomial::operator+=(const CountPolynomial& other) {
  if (other.coeffs_.size() > coeffs_.size()) coeffs_.resize(other.coeffs_.size());
  for (std::size_t k = 0; k < other.coeffs_.size(); ++k) coeffs_[k] += other.coeffs_[k];
  trim();
  return *this;
}

CountPolynomial operator*(const CountPolynomial& a, const CountPolynomial& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<BigInt> c(a.coeffs_.size() + b.coeffs_.size() - 1);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) c[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  return CountPolynomial(std::move(c));
}

void CountPolynomial::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

NisSummary NisSummary::from_counts(BigInt sigma, BigInt total) {
  NisSummary s;
  s.average = sigma == 0 ? Rational(0) : Rational(total, sigma);
  s.sigma = std::move(sigma);
  s.total = std::move(total);
  return s;
}

NisSummary summarize(const CountPolynomial& p) {
  return NisSummary::from_counts(p.at_one(), p.derivative_at_one());
}

PolynomialPair union_combine(const PolynomialPair& a, const PolynomialPair& b) {
  return {a.i0 * b.i0, a.i1 * b.i0 + b.i1 * a.i0};
}

ScalarCounts union_combine(const ScalarCounts& a, const ScalarCounts& b) {
  ScalarCounts out;
  out.sigma0 = a.sigma0 * b.sigma0;
  out.total0 = a.total0 * b.sigma0 + a.sigma0 * b.total0;
  out.sigma1 = a.sigma1 * b.sigma0 + b.sigma1 * a.sigma0;
  out.total1 = a.total1 * b.sigma0 + a.sigma1 * b.total0 + b.total1 * a.sigma0 + b.sigma1 * a.total0;
  return out;
}

}  // namespace nis
