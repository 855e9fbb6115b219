#pragma once

// Test descriptors: the worked examples plus seeded random valid inputs.

#include <algorithm>
#include <random>
#include <string>
#include <vector>

#include "loopkit/manifold.hpp"

namespace corpus {

using loopkit::ManifoldDescriptor;
using loopkit::Rational;
using loopkit::RationalMatrix;

inline ManifoldDescriptor x3()
{
    return {"X3", 2, 4, {2, 2, 2}, {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}, std::nullopt};
}

inline ManifoldDescriptor y2()
{
    return {"Y2",
            3,
            7,
            {3, 3, 4, 4},
            {{0, 0, 1, 0}, {0, 0, 0, 1}, {1, 0, 0, 0}, {0, 1, 0, 0}},
            std::nullopt};
}

// d = 2n with a hyperbolic (symplectic) middle-dimensional form.
inline ManifoldDescriptor h4()
{
    return {"H4",
            3,
            6,
            {3, 3, 3, 3},
            {{0, 1, 0, 0}, {-1, 0, 0, 0}, {0, 0, 0, 1}, {0, 0, -1, 0}},
            std::nullopt};
}

inline Rational det(RationalMatrix m)
{
    const std::size_t n = m.size();
    Rational d = 1;
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t p = c;
        while (p < n && m[p][c] == 0)
            ++p;
        if (p == n)
            return 0;
        if (p != c) {
            std::swap(m[p], m[c]);
            d = -d;
        }
        d *= m[c][c];
        for (std::size_t r = c + 1; r < n; ++r) {
            const Rational f = m[r][c] / m[c][c];
            for (std::size_t k = c; k < n; ++k)
                m[r][k] -= f * m[c][k];
        }
    }
    return d;
}

inline int small(std::mt19937_64 &rng, int lo, int hi)
{
    return std::uniform_int_distribution<int>(lo, hi)(rng);
}

// Valid descriptor with 2 <= r <= 4 and generator degrees <= 6; never n = 2
// with r = 4.
inline ManifoldDescriptor random_descriptor(std::mt19937_64 &rng, const std::string &name)
{
    for (;;) {
        const int n = small(rng, 2, 4);
        const int d = small(rng, 2 * n, 3 * n - 2);
        const int r = small(rng, 2, n == 2 ? 3 : 4);
        if (d % 2 == 1 && r % 2 == 1)
            continue; // no middle degree to hold the odd generator

        // Degrees come in dual pairs k, d - k; middle degree allowed alone.
        std::vector<int> degrees;
        while (static_cast<int>(degrees.size()) < r) {
            const int k = small(rng, n, d - n);
            if (k > 6 || d - k > 6)
                continue;
            if (2 * k == d) {
                degrees.push_back(k);
            } else if (static_cast<int>(degrees.size()) + 2 <= r) {
                degrees.push_back(k);
                degrees.push_back(d - k);
            }
        }
        std::sort(degrees.begin(), degrees.end());

        RationalMatrix c(r, std::vector<Rational>(r, 0));
        for (int i = 0; i < r; ++i)
            for (int j = i; j < r; ++j) {
                if (degrees[i] + degrees[j] != d)
                    continue;
                const int sign = (degrees[i] * degrees[j]) % 2 == 0 ? 1 : -1;
                if (i == j) {
                    if (sign == 1)
                        c[i][i] = small(rng, -3, 3);
                    continue;
                }
                c[i][j] = small(rng, -3, 3);
                c[j][i] = sign * c[i][j];
            }
        ManifoldDescriptor desc{name, n, d, degrees, c, std::nullopt};
        if (det(c) != 0 && loopkit::validate(desc).ok())
            return desc;
    }
}

inline std::vector<ManifoldDescriptor> random_corpus(std::size_t count, std::uint64_t seed)
{
    std::mt19937_64 rng(seed);
    std::vector<ManifoldDescriptor> out;
    for (std::size_t i = 0; i < count; ++i)
        out.push_back(random_descriptor(rng, "random-" + std::to_string(i)));
    return out;
}

inline std::vector<ManifoldDescriptor> full_corpus()
{
    std::vector<ManifoldDescriptor> out{x3(), y2(), h4()};
    for (auto &d : random_corpus(20, 20260))
        out.push_back(std::move(d));
    return out;
}

// Invertible change of basis that only mixes generators of equal degree.
inline RationalMatrix random_block_congruence(std::mt19937_64 &rng,
                                              const std::vector<int> &degrees)
{
    const std::size_t r = degrees.size();
    for (;;) {
        RationalMatrix a(r, std::vector<Rational>(r, 0));
        for (std::size_t i = 0; i < r; ++i)
            for (std::size_t j = 0; j < r; ++j)
                if (degrees[i] == degrees[j])
                    a[i][j] = small(rng, -2, 2);
        if (det(a) != 0)
            return a;
    }
}

} // namespace corpus
