#pragma once

#include <cstdint>
#include <vector>

#include "partitions/bigcount.hpp"

namespace partitions {

// Formal power series over exact integers, truncated at a fixed degree N.
// Arithmetic never reads or writes coefficients beyond degree N; values are
// immutable after construction.
class TruncatedSeries {
 public:
  // Zero series of the given truncation degree.
  explicit TruncatedSeries(std::uint64_t truncation_degree);

  // Takes ownership of a coefficient vector c[0..N]; must be non-empty.
  explicit TruncatedSeries(std::vector<BigCount> coeffs);

  static TruncatedSeries zero(std::uint64_t degree);
  static TruncatedSeries one(std::uint64_t degree);
  // c * x^d truncated at `degree`; a d > degree monomial is the zero series.
  static TruncatedSeries monomial(const BigCount& c, std::uint64_t d,
                                  std::uint64_t degree);

  std::uint64_t truncation_degree() const { return coeffs_.size() - 1; }
  const BigCount& coeff(std::uint64_t i) const { return coeffs_[i]; }
  const std::vector<BigCount>& coeffs() const { return coeffs_; }

  bool operator==(const TruncatedSeries&) const = default;

 private:
  std::vector<BigCount> coeffs_;
};

// Coefficient-wise sum/difference. Throws std::invalid_argument on
// truncation-degree mismatch.
TruncatedSeries series_add(const TruncatedSeries& a, const TruncatedSeries& b);
TruncatedSeries series_sub(const TruncatedSeries& a, const TruncatedSeries& b);

// Cauchy product truncated at N. Throws on degree mismatch.
TruncatedSeries series_mul(const TruncatedSeries& a, const TruncatedSeries& b);

inline TruncatedSeries operator+(const TruncatedSeries& a,
                                 const TruncatedSeries& b) {
  return series_add(a, b);
}
inline TruncatedSeries operator-(const TruncatedSeries& a,
                                 const TruncatedSeries& b) {
  return series_sub(a, b);
}
inline TruncatedSeries operator*(const TruncatedSeries& a,
                                 const TruncatedSeries& b) {
  return series_mul(a, b);
}

// x^k + x^{2k} + x^{3k} + ... = x^k/(1-x^k): coefficient 1 at every positive
// multiple of k up to N. Requires k >= 1.
TruncatedSeries geometric_factor(std::uint64_t k, std::uint64_t N);

// 1/(1-x^k) = 1 + x^k + x^{2k} + ...
TruncatedSeries inverse_one_minus_power(std::uint64_t k, std::uint64_t N);

// prod_{n=1}^{N} 1/(1-x^n); coefficient of x^m is P(m) for all m <= N.
// Factors with n > N only contribute above degree N, so the finite product
// is exact.
TruncatedSeries euler_product(std::uint64_t N);

// G_k(x) = x^k/(1-x^k) * prod 1/(1-x^n); coefficient of x^m is Q_k(m).
TruncatedSeries q_generating_series(std::uint64_t k, std::uint64_t N);

}  // namespace partitions
