#pragma once

// Independent reference computations. None of these call into the library
// routines they are used to check.

#include <algorithm>
#include <map>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace oracle {

// Coefficients of 1 / (1 - sum t^{a_i} + t^c) by the plain recurrence
// h_m = sum_i h_{m - a_i} - h_{m - c}.
inline std::vector<mpz_class> hilbert(const std::vector<int> &loop_degrees, int c, int N)
{
    std::vector<mpz_class> h(N + 1, 0);
    h[0] = 1;
    for (int m = 1; m <= N; ++m) {
        for (int a : loop_degrees)
            if (m >= a)
                h[m] += h[m - a];
        if (m >= c)
            h[m] -= h[m - c];
    }
    return h;
}

// Peels Lie dimensions off a PBW series one degree at a time: L_m is what is
// missing at t^m after the factors (1 - t^k)^{-L_k}, k < m, are multiplied in.
inline std::vector<mpz_class> peel_lie_dims(const std::vector<mpz_class> &h)
{
    const int N = static_cast<int>(h.size()) - 1;
    std::vector<mpz_class> prod(N + 1, 0), dims;
    prod[0] = 1;
    for (int m = 1; m <= N; ++m) {
        const mpz_class L = h[m] - prod[m];
        dims.push_back(L);
        // Multiply prod by 1/(1 - t^m)^L, i.e. by (sum_j t^{jm})^L, L times.
        for (mpz_class k = 0; k < L; ++k)
            for (int e = m; e <= N; ++e)
                prod[e] += prod[e - m];
    }
    return dims;
}

inline int mu(int n)
{
    int res = 1;
    for (int p = 2; p * p <= n; ++p) {
        if (n % p)
            continue;
        n /= p;
        if (n % p == 0)
            return 0;
        res = -res;
    }
    return n > 1 ? -res : res;
}

// Aperiodic necklaces of length n over k letters.
inline mpz_class necklace_count(int k, int n)
{
    mpz_class sum = 0;
    for (int e = 1; e <= n; ++e)
        if (n % e == 0) {
            mpz_class pw;
            mpz_ui_pow_ui(pw.get_mpz_t(), static_cast<unsigned long>(k),
                          static_cast<unsigned long>(n / e));
            sum += mu(e) * pw;
        }
    return sum / n;
}

// Brute force over strings: Lyndon iff strictly below every proper rotation.
inline bool lyndon_string(const std::string &s)
{
    for (std::size_t k = 1; k < s.size(); ++k)
        if (s.substr(k) + s.substr(0, k) <= s)
            return false;
    return !s.empty();
}

inline std::size_t brute_lyndon_count(int k, int n)
{
    std::size_t count = 0;
    std::string s(static_cast<std::size_t>(n), 'a');
    for (;;) {
        count += lyndon_string(s);
        int i = n - 1;
        while (i >= 0 && s[i] == 'a' + k - 1)
            s[i--] = 'a';
        if (i < 0)
            break;
        ++s[i];
    }
    return count;
}

// Dense rank over Q by plain Gaussian elimination.
inline std::size_t dense_rank(std::vector<std::vector<mpq_class>> m)
{
    std::size_t rank = 0;
    const std::size_t cols = m.empty() ? 0 : m[0].size();
    for (std::size_t c = 0; c < cols && rank < m.size(); ++c) {
        std::size_t p = rank;
        while (p < m.size() && m[p][c] == 0)
            ++p;
        if (p == m.size())
            continue;
        std::swap(m[p], m[rank]);
        for (std::size_t r = 0; r < m.size(); ++r) {
            if (r == rank || m[r][c] == 0)
                continue;
            const mpq_class f = m[r][c] / m[rank][c];
            for (std::size_t k = c; k < cols; ++k)
                m[r][k] -= f * m[rank][k];
        }
        ++rank;
    }
    return rank;
}

// Words as index vectors; a relation as coefficients on pairs (i, j).
using Pairs = std::map<std::pair<int, int>, mpq_class>;

// Dimension of the degree-m part of T(V)/(rel) over letters of the given
// loop degrees, by dense elimination of all w1 * rel * w2.
inline std::size_t quotient_dim(const std::vector<int> &deg, const Pairs &rel, int m)
{
    std::vector<std::vector<int>> words;
    std::vector<int> cur;
    auto gen = [&](auto &&self, int left) -> void {
        if (left == 0) {
            words.push_back(cur);
            return;
        }
        for (int a = 0; a < static_cast<int>(deg.size()); ++a)
            if (deg[a] <= left) {
                cur.push_back(a);
                self(self, left - deg[a]);
                cur.pop_back();
            }
    };
    gen(gen, m);
    std::map<std::vector<int>, std::size_t> index;
    for (std::size_t i = 0; i < words.size(); ++i)
        index[words[i]] = i;

    std::vector<std::vector<mpq_class>> rows;
    for (const auto &w : words)
        for (std::size_t cut = 0; cut + 2 <= w.size(); ++cut) {
            // One row per (prefix, suffix): take the words that carry the
            // relation's first pair at position cut.
            if (std::make_pair(w[cut], w[cut + 1]) != rel.begin()->first)
                continue;
            std::vector<mpq_class> row(words.size(), 0);
            for (const auto &[pair, coef] : rel) {
                std::vector<int> v(w.begin(), w.begin() + static_cast<long>(cut));
                v.push_back(pair.first);
                v.push_back(pair.second);
                v.insert(v.end(), w.begin() + static_cast<long>(cut) + 2, w.end());
                row[index.at(v)] += coef;
            }
            rows.push_back(std::move(row));
        }
    return words.size() - dense_rank(std::move(rows));
}

} // namespace oracle
