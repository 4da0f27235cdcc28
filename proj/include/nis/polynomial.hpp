#pragma once

#include <span>
#include <vector>

#include "nis/numeric.hpp"

namespace nis {

/// Generating polynomial Σ σₗ(G,k)·xᵏ with exact coefficients.
/// Trailing zeros are trimmed; the zero polynomial has no coefficients.
class CountPolynomial {
 public:
  CountPolynomial() = default;
  explicit CountPolynomial(std::vector<BigInt> coeffs);

  static CountPolynomial one();
  static CountPolynomial monomial(std::size_t power, BigInt coefficient = 1);

  std::span<const BigInt> coefficients() const { return coeffs_; }
  BigInt coefficient(std::size_t k) const;
  bool is_zero() const { return coeffs_.empty(); }
  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }

  /// p(1)
  BigInt at_one() const;
  /// p'(1)
  BigInt derivative_at_one() const;

  /// Multiplication by x^k.
  CountPolynomial shifted(std::size_t k) const;

  CountPolynomial& operator+=(const CountPolynomial& other);
  friend CountPolynomial operator+(CountPolynomial a, const CountPolynomial& b) { return a += b; }
  friend CountPolynomial operator*(const CountPolynomial& a, const CountPolynomial& b);
  bool operator==(const CountPolynomial&) const = default;

 private:
  void trim();
  std::vector<BigInt> coeffs_;
};

/// (σ, S, av) for one value of l. average is 0 when sigma is 0.
struct NisSummary {
  BigInt sigma;
  BigInt total;
  Rational average;

  static NisSummary from_counts(BigInt sigma, BigInt total);
  /// True when there are no sets at all, as opposed to average 0.
  bool has_no_sets() const { return sigma == 0; }
  bool operator==(const NisSummary&) const = default;
};

NisSummary summarize(const CountPolynomial& p);

/// I₀ and I₁ of one graph.
struct PolynomialPair {
  CountPolynomial i0;
  CountPolynomial i1;
  bool operator==(const PolynomialPair&) const = default;
};

/// Pair of a vertex-disjoint union: I₀ multiplies, I₁ cross-sums.
PolynomialPair union_combine(const PolynomialPair& a, const PolynomialPair& b);

/// Scalar counterpart: σ₀, S₀, σ₁, S₁ of one graph.
struct ScalarCounts {
  BigInt sigma0 = 1;
  BigInt total0 = 0;
  BigInt sigma1 = 0;
  BigInt total1 = 0;

  NisSummary summary0() const { return NisSummary::from_counts(sigma0, total0); }
  NisSummary summary1() const { return NisSummary::from_counts(sigma1, total1); }
  bool operator==(const ScalarCounts&) const = default;
};

ScalarCounts union_combine(const ScalarCounts& a, const ScalarCounts& b);

}  // namespace nis
