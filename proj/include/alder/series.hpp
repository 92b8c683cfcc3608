#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "alder/count.hpp"
#include "alder/part_set.hpp"

namespace alder
{

/// Formal power series c_0 + c_1 q + ... + c_N q^N, exact modulo q^(N+1).
///
/// Binary operations on series of different orders truncate to the smaller
/// order. Values are immutable once built; every operation returns a new series.
class TruncatedSeries
{
  public:
    /// Largest truncation order accepted by the constructors.
    static constexpr std::size_t max_order = 100000;

    /// The zero series of order N.
    explicit TruncatedSeries(std::size_t order);

    /// Coefficients c_0..c_N; the order is coefficients.size() - 1.
    explicit TruncatedSeries(std::vector<Count> coefficients);

    static TruncatedSeries one(std::size_t order);
    /// q^k truncated to order N (zero when k > N).
    static TruncatedSeries monomial(std::size_t k, std::size_t order);

    std::size_t order() const { return coefficients_.size() - 1; }
    const Count &operator[](std::size_t i) const { return coefficients_[i]; }
    std::span<const Count> coefficients() const { return coefficients_; }

    TruncatedSeries truncated(std::size_t order) const;

    /// Multiply by q^k.
    TruncatedSeries shifted(std::size_t k) const;

    friend TruncatedSeries operator+(const TruncatedSeries &lhs, const TruncatedSeries &rhs);
    friend TruncatedSeries operator-(const TruncatedSeries &lhs, const TruncatedSeries &rhs);
    friend TruncatedSeries operator*(const TruncatedSeries &lhs, const TruncatedSeries &rhs);
    friend bool operator==(const TruncatedSeries &, const TruncatedSeries &) = default;

  private:
    std::vector<Count> coefficients_;
};

/// Exact convolution modulo q^(N+1).
TruncatedSeries series_mul(const TruncatedSeries &lhs, const TruncatedSeries &rhs);

/// s / (1 - q^e), as a running prefix sum with stride e. Requires e >= 1.
TruncatedSeries series_inverse_factor(const TruncatedSeries &s, Part e);

/// s * (1 + q^e) for sign = +1, s * (1 - q^e) for sign = -1.
TruncatedSeries series_binomial_factor(const TruncatedSeries &s, Part e, int sign);

/// prod over allowed parts e <= N of 1/(1-q^e), or (1+q^e) for parts in a distinct class.
TruncatedSeries product_series(const PartSetSpec &spec, std::size_t order);

/// sum_k q^(d*C(k,2) + k*a) / (q;q)_k, stopping once the exponent exceeds N.
TruncatedSeries gap_sum_series(Part d, Part a, std::size_t order);

} // namespace alder
