#include "loopkit/series.hpp"

#include <string>

#include "loopkit/errors.hpp"

namespace loopkit {

Series::Series(std::size_t order) : coeffs_(order + 1) {}

Series::Series(std::vector<Rational> coefficients) : coeffs_(std::move(coefficients))
{
    if (coeffs_.empty())
        throw UsageError("a series needs at least a constant term");
}

Series Series::one(std::size_t order)
{
    Series s(order);
    s.coeffs_[0] = 1;
    return s;
}

Series Series::from_terms(std::size_t order,
                          std::initializer_list<std::pair<std::size_t, Rational>> terms)
{
    Series s(order);
    for (const auto &[k, c] : terms)
        if (k <= order)
            s.coeffs_[k] += c;
    return s;
}

Series Series::truncated(std::size_t order) const
{
    Series s(order);
    for (std::size_t k = 0; k <= order && k < coeffs_.size(); ++k)
        s.coeffs_[k] = coeffs_[k];
    return s;
}

Series &Series::operator+=(const Series &other)
{
    if (other.order() != order())
        throw UsageError("series truncation orders differ");
    for (std::size_t k = 0; k < coeffs_.size(); ++k)
        coeffs_[k] += other.coeffs_[k];
    return *this;
}

Series &Series::operator-=(const Series &other)
{
    if (other.order() != order())
        throw UsageError("series truncation orders differ");
    for (std::size_t k = 0; k < coeffs_.size(); ++k)
        coeffs_[k] -= other.coeffs_[k];
    return *this;
}

Series series_mul(const Series &a, const Series &b)
{
    if (a.order() != b.order())
        throw UsageError("series_mul: truncation orders differ (" + std::to_string(a.order()) +
                         " vs " + std::to_string(b.order()) + ")");
    const std::size_t n = a.order();
    Series c(n);
    for (std::size_t i = 0; i <= n; ++i) {
        if (a[i] == 0)
            continue;
        for (std::size_t j = 0; i + j <= n; ++j)
            c[i + j] += a[i] * b[j];
    }
    return c;
}

Series series_inverse(const Series &a)
{
    if (a[0] != 1)
        throw NonUnitError("series_inverse: constant term is " + to_string(a[0]) + ", not 1");
    const std::size_t n = a.order();
    Series b(n);
    b[0] = 1;
    for (std::size_t m = 1; m <= n; ++m) {
        Rational acc;
        for (std::size_t k = 1; k <= m; ++k)
            acc += a[k] * b[m - k];
        b[m] = -acc;
    }
    return b;
}

Series series_log(const Series &a)
{
    if (a[0] != 1)
        throw NonUnitError("series_log: constant term is " + to_string(a[0]) + ", not 1");
    const std::size_t n = a.order();
    Series b(n);
    for (std::size_t m = 1; m <= n; ++m) {
        Rational acc = Rational(static_cast<unsigned long>(m)) * a[m];
        for (std::size_t k = 1; k < m; ++k)
            acc -= Rational(static_cast<unsigned long>(k)) * b[k] * a[m - k];
        b[m] = acc / Rational(static_cast<unsigned long>(m));
    }
    return b;
}

Series one_minus_monomial_power(std::size_t m, const Integer &e, std::size_t order)
{
    if (m == 0)
        throw DomainError("one_minus_monomial_power: monomial degree must be positive");
    Series s(order);
    Integer binom = 1;
    for (std::size_t k = 0; k * m <= order; ++k) {
        if (k > 0) {
            // C(e, k) = C(e, k-1) * (e - k + 1) / k
            binom *= e - static_cast<unsigned long>(k - 1);
            binom /= static_cast<unsigned long>(k);
        }
        if (binom == 0)
            break;
        s[k * m] = (k % 2 == 0) ? Rational(binom) : Rational(-binom);
    }
    return s;
}

int moebius(std::uint64_t m)
{
    if (m == 0)
        throw DomainError("moebius: argument must be positive");
    int sign = 1;
    for (std::uint64_t p = 2; p * p <= m; ++p) {
        if (m % p != 0)
            continue;
        m /= p;
        if (m % p == 0)
            return 0;
        sign = -sign;
    }
    if (m > 1)
        sign = -sign;
    return sign;
}

Series loop_denominator(std::span<const int> loop_degrees, int relation_degree,
                        std::size_t order)
{
    Series q = Series::one(order);
    for (int deg : loop_degrees) {
        if (deg < 1)
            throw DomainError("loop_denominator: loop degrees must be positive");
        if (static_cast<std::size_t>(deg) <= order)
            q[static_cast<std::size_t>(deg)] -= 1;
    }
    if (relation_degree >= 1 && static_cast<std::size_t>(relation_degree) <= order)
        q[static_cast<std::size_t>(relation_degree)] += 1;
    return q;
}

std::vector<Integer> lie_dims_from_denominator(const Series &q, std::size_t N)
{
    if (q.order() < N)
        throw UsageError("lie_dims_from_denominator: series truncated below the requested bound");
    const Series eta = series_log(q.truncated(N));
    std::vector<Integer> dims;
    dims.reserve(N);
    for (std::size_t m = 1; m <= N; ++m) {
        Rational acc;
        for (std::size_t e = 1; e <= m; ++e) {
            if (m % e != 0)
                continue;
            const int mu = moebius(e);
            if (mu != 0)
                acc += Rational(mu) * eta[m / e] / Rational(static_cast<unsigned long>(e));
        }
        acc = -acc;
        if (!is_integer(acc) || acc < 0)
            throw InconsistencyError("Moebius inversion gave L_" + std::to_string(m) + " = " +
                                         to_string(acc) +
                                         ", not a non-negative integer; check the grading of the "
                                         "denominator",
                                     static_cast<int>(m));
        dims.push_back(acc.get_num());
    }
    return dims;
}

Series witt_product(std::span<const Integer> dims, std::size_t order)
{
    Series acc = Series::one(order);
    for (std::size_t i = 0; i < dims.size() && i + 1 <= order; ++i) {
        if (dims[i] == 0)
            continue;
        acc = series_mul(acc, series_inverse(one_minus_monomial_power(i + 1, dims[i], order)));
    }
    return acc;
}

} // namespace loopkit
