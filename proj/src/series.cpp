#include "alder/series.hpp"

#include <algorithm>
#include <string>

namespace alder
{

namespace
{

void check_order(std::size_t order)
{
    if (order > TruncatedSeries::max_order)
        throw DomainError("truncation order " + std::to_string(order) + " exceeds the cap " +
                          std::to_string(TruncatedSeries::max_order));
}

} // namespace

TruncatedSeries::TruncatedSeries(std::size_t order) : coefficients_((check_order(order), order + 1), 0) {}

TruncatedSeries::TruncatedSeries(std::vector<Count> coefficients) : coefficients_(std::move(coefficients))
{
    if (coefficients_.empty())
        throw DomainError("a truncated series needs at least the constant coefficient");
    check_order(order());
}

TruncatedSeries TruncatedSeries::one(std::size_t order)
{
    TruncatedSeries s(order);
    s.coefficients_[0] = 1;
    return s;
}

TruncatedSeries TruncatedSeries::monomial(std::size_t k, std::size_t order)
{
    TruncatedSeries s(order);
    if (k <= order)
        s.coefficients_[k] = 1;
    return s;
}

TruncatedSeries TruncatedSeries::truncated(std::size_t order) const
{
    if (order >= this->order())
        return *this;
    return TruncatedSeries(std::vector<Count>(coefficients_.begin(), coefficients_.begin() + order + 1));
}

TruncatedSeries TruncatedSeries::shifted(std::size_t k) const
{
    TruncatedSeries s(order());
    for (std::size_t i = k; i <= order(); ++i)
        s.coefficients_[i] = coefficients_[i - k];
    return s;
}

TruncatedSeries operator+(const TruncatedSeries &lhs, const TruncatedSeries &rhs)
{
    const std::size_t n = std::min(lhs.order(), rhs.order());
    TruncatedSeries out(n);
    for (std::size_t i = 0; i <= n; ++i)
        out.coefficients_[i] = lhs[i] + rhs[i];
    return out;
}

TruncatedSeries operator-(const TruncatedSeries &lhs, const TruncatedSeries &rhs)
{
    const std::size_t n = std::min(lhs.order(), rhs.order());
    TruncatedSeries out(n);
    for (std::size_t i = 0; i <= n; ++i)
        out.coefficients_[i] = lhs[i] - rhs[i];
    return out;
}

TruncatedSeries operator*(const TruncatedSeries &lhs, const TruncatedSeries &rhs)
{
    const std::size_t n = std::min(lhs.order(), rhs.order());
    TruncatedSeries out(n);
    for (std::size_t i = 0; i <= n; ++i) {
        if (lhs[i] == 0)
            continue;
        for (std::size_t j = 0; i + j <= n; ++j)
            if (rhs[j] != 0)
                out.coefficients_[i + j] += lhs[i] * rhs[j];
    }
    return out;
}

TruncatedSeries series_mul(const TruncatedSeries &lhs, const TruncatedSeries &rhs) { return lhs * rhs; }

TruncatedSeries series_inverse_factor(const TruncatedSeries &s, Part e)
{
    if (e < 1)
        throw DomainError("1/(1-q^e) needs e >= 1, got e=" + std::to_string(e));
    std::vector<Count> c(s.coefficients().begin(), s.coefficients().end());
    const auto step = static_cast<std::size_t>(e);
    for (std::size_t i = step; i < c.size(); ++i)
        c[i] += c[i - step];
    return TruncatedSeries(std::move(c));
}

TruncatedSeries series_binomial_factor(const TruncatedSeries &s, Part e, int sign)
{
    if (e < 1)
        throw DomainError("(1 +- q^e) needs e >= 1, got e=" + std::to_string(e));
    if (sign != 1 && sign != -1)
        throw DomainError("binomial factor sign must be +1 or -1");
    std::vector<Count> c(s.coefficients().begin(), s.coefficients().end());
    const auto step = static_cast<std::size_t>(e);
    for (std::size_t i = c.size(); i-- > step;) {
        if (sign > 0)
            c[i] += c[i - step];
        else
            c[i] -= c[i - step];
    }
    return TruncatedSeries(std::move(c));
}

TruncatedSeries product_series(const PartSetSpec &spec, std::size_t order)
{
    spec.validate();
    TruncatedSeries s = TruncatedSeries::one(order);
    for (Part e : spec.parts_up_to(static_cast<Part>(order)))
        s = spec.is_distinct(e) ? series_binomial_factor(s, e, +1) : series_inverse_factor(s, e);
    return s;
}

TruncatedSeries gap_sum_series(Part d, Part a, std::size_t order)
{
    if (d < 0 || a < 1)
        throw DomainError("gap series needs d >= 0 and a >= 1");
    const auto n = static_cast<Part>(order);
    TruncatedSeries sum = TruncatedSeries::one(order);
    // pochhammer_inv = 1/(q;q)_k, built one factor at a time.
    TruncatedSeries pochhammer_inv = TruncatedSeries::one(order);
    for (Part k = 1;; ++k) {
        const Part exponent = d * (k * (k - 1) / 2) + k * a;
        if (exponent > n)
            break;
        pochhammer_inv = series_inverse_factor(pochhammer_inv, k);
        sum = sum + pochhammer_inv.shifted(static_cast<std::size_t>(exponent));
    }
    return sum;
}

} // namespace alder
