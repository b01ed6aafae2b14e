#include "partitions/series.hpp"

#include <stdexcept>

namespace partitions {

namespace {

void require_same_degree(const TruncatedSeries& a, const TruncatedSeries& b) {
  if (a.truncation_degree() != b.truncation_degree()) {
    throw std::invalid_argument(
        "truncation degree mismatch: " +
        std::to_string(a.truncation_degree()) + " vs " +
        std::to_string(b.truncation_degree()));
  }
}

}  // namespace

TruncatedSeries::TruncatedSeries(std::uint64_t truncation_degree)
    : coeffs_(truncation_degree + 1) {}

TruncatedSeries::TruncatedSeries(std::vector<BigCount> coeffs)
    : coeffs_(std::move(coeffs)) {
  if (coeffs_.empty()) {
    throw std::invalid_argument("TruncatedSeries needs at least c[0]");
  }
}

TruncatedSeries TruncatedSeries::zero(std::uint64_t degree) {
  return TruncatedSeries(degree);
}

TruncatedSeries TruncatedSeries::one(std::uint64_t degree) {
  TruncatedSeries s(degree);
  s.coeffs_[0] = 1;
  return s;
}

TruncatedSeries TruncatedSeries::monomial(const BigCount& c, std::uint64_t d,
                                          std::uint64_t degree) {
  TruncatedSeries s(degree);
  if (d <= degree) s.coeffs_[d] = c;
  return s;
}

TruncatedSeries series_add(const TruncatedSeries& a,
                           const TruncatedSeries& b) {
  require_same_degree(a, b);
  std::vector<BigCount> out = a.coeffs();
  for (std::size_t i = 0; i < out.size(); ++i) out[i] += b.coeff(i);
  return TruncatedSeries(std::move(out));
}

TruncatedSeries series_sub(const TruncatedSeries& a,
                           const TruncatedSeries& b) {
  require_same_degree(a, b);
  std::vector<BigCount> out = a.coeffs();
  for (std::size_t i = 0; i < out.size(); ++i) out[i] -= b.coeff(i);
  return TruncatedSeries(std::move(out));
}

TruncatedSeries series_mul(const TruncatedSeries& a,
                           const TruncatedSeries& b) {
  require_same_degree(a, b);
  const std::size_t size = a.coeffs().size();
  std::vector<BigCount> out(size);
  for (std::size_t i = 0; i < size; ++i) {
    if (a.coeff(i) == 0) continue;
    for (std::size_t j = 0; i + j < size; ++j) {
      if (b.coeff(j) == 0) continue;
      out[i + j] += a.coeff(i) * b.coeff(j);
    }
  }
  return TruncatedSeries(std::move(out));
}

TruncatedSeries geometric_factor(std::uint64_t k, std::uint64_t N) {
  if (k < 1) throw std::invalid_argument("geometric_factor: k must be >= 1");
  std::vector<BigCount> coeffs(N + 1);
  for (std::uint64_t d = k; d <= N; d += k) coeffs[d] = 1;
  return TruncatedSeries(std::move(coeffs));
}

TruncatedSeries inverse_one_minus_power(std::uint64_t k, std::uint64_t N) {
  if (k < 1) {
    throw std::invalid_argument("inverse_one_minus_power: k must be >= 1");
  }
  std::vector<BigCount> coeffs(N + 1);
  for (std::uint64_t d = 0; d <= N; d += k) coeffs[d] = 1;
  return TruncatedSeries(std::move(coeffs));
}

TruncatedSeries euler_product(std::uint64_t N) {
  TruncatedSeries product = TruncatedSeries::one(N);
  for (std::uint64_t n = 1; n <= N; ++n) {
    product = series_mul(product, inverse_one_minus_power(n, N));
  }
  return product;
}

TruncatedSeries q_generating_series(std::uint64_t k, std::uint64_t N) {
  return series_mul(geometric_factor(k, N), euler_product(N));
}

}  // namespace partitions
