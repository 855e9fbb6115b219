#pragma once

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <utility>
#include <vector>

#include "loopkit/rational.hpp"

namespace loopkit {

// Univariate power series with exact rational coefficients, truncated after
// t^order. The coefficient list always has order() + 1 entries.
class Series {
public:
    explicit Series(std::size_t order);
    explicit Series(std::vector<Rational> coefficients);

    static Series one(std::size_t order);
    // Sum of coef * t^exponent; exponents above `order` are dropped.
    static Series from_terms(std::size_t order,
                             std::initializer_list<std::pair<std::size_t, Rational>> terms);

    std::size_t order() const noexcept { return coeffs_.size() - 1; }
    const Rational &operator[](std::size_t k) const { return coeffs_.at(k); }
    Rational &operator[](std::size_t k) { return coeffs_.at(k); }
    std::span<const Rational> coefficients() const noexcept { return coeffs_; }

    Series truncated(std::size_t order) const;

    Series &operator+=(const Series &other);
    Series &operator-=(const Series &other);
    friend Series operator+(Series a, const Series &b) { return a += b; }
    friend Series operator-(Series a, const Series &b) { return a -= b; }
    friend bool operator==(const Series &a, const Series &b) { return a.coeffs_ == b.coeffs_; }

private:
    std::vector<Rational> coeffs_;
};

// Cauchy product; both operands must share the truncation order.
Series series_mul(const Series &a, const Series &b);

// Multiplicative inverse of a series with constant term 1.
Series series_inverse(const Series &a);

// log(a) for a series with constant term 1, via n b_n = n a_n - sum k b_k a_{n-k}.
Series series_log(const Series &a);

// (1 - t^m)^e truncated at `order`, expanded with binomial coefficients. Any
// integer e; for e < 0 the binomials are the generalized ones.
Series one_minus_monomial_power(std::size_t m, const Integer &e, std::size_t order);

int moebius(std::uint64_t m);

// 1 - sum_i t^{deg_i} + t^{relation_degree}: the Hilbert denominator of a
// quadratic algebra with one relation, in loop-degree grading.
Series loop_denominator(std::span<const int> loop_degrees, int relation_degree,
                        std::size_t order);

// Lie algebra dimensions L_1..L_N from the enveloping algebra's Hilbert
// denominator q, by Moebius inversion of eta = log q:
//   L_m = - sum_{e | m} mu(e) eta_{m/e} / e.
// Every L_m must come out a non-negative integer, otherwise the input (or its
// grading) is inconsistent and InconsistencyError names the first bad degree.
std::vector<Integer> lie_dims_from_denominator(const Series &q, std::size_t N);

// prod_m (1 - t^m)^{-L_m}, the PBW generating function of a Lie algebra with
// graded dimensions dims[0] = L_1, dims[1] = L_2, ...
Series witt_product(std::span<const Integer> dims, std::size_t order);

} // namespace loopkit
