#pragma once

// Brute-force oracles and generators shared by the test binaries. Nothing
// here calls into the code paths it is used to check.

#include <algorithm>
#include <complex>
#include <cstdint>
#include <functional>
#include <random>
#include <vector>

#include "dpart/exact.hpp"
#include "dpart/partition.hpp"

namespace dpart::testing {

inline std::mt19937_64& rng()
{
    static std::mt19937_64 engine(20261016);
    return engine;
}

inline std::uint64_t uniform(std::uint64_t lo, std::uint64_t hi)
{
    return std::uniform_int_distribution<std::uint64_t>(lo, hi)(rng());
}

/// Random partition with at most max_len parts, each in 1..max_part.
inline Partition random_partition(std::size_t max_len, std::uint64_t max_part, std::size_t min_len = 0)
{
    const std::size_t len = uniform(min_len, max_len);
    std::vector<BigInt> parts;
    for (std::size_t i = 0; i < len; ++i)
        parts.emplace_back(static_cast<unsigned long>(uniform(1, max_part)));
    return Partition::from_unsorted(std::move(parts));
}

/// Every subset of {1..9} with 1..max_r elements, as sorted parts lists.
inline std::vector<std::vector<std::uint64_t>> small_parts_lists(std::size_t max_r, std::uint64_t max_part = 9)
{
    std::vector<std::vector<std::uint64_t>> out;
    for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << max_part); ++mask) {
        std::vector<std::uint64_t> parts;
        for (std::uint64_t b = 0; b < max_part; ++b)
            if (mask & (std::uint64_t{1} << b))
                parts.push_back(b + 1);
        if (parts.size() <= max_r)
            out.push_back(parts);
    }
    return out;
}

/// Number of non-negative (x_1..x_r) with sum a_i x_i = n, by nested loops.
inline BigInt brute_denumerant(const std::vector<std::uint64_t>& a, std::uint64_t n)
{
    std::function<BigInt(std::size_t, std::uint64_t)> rec = [&](std::size_t i, std::uint64_t left) -> BigInt {
        if (i == a.size())
            return left == 0 ? 1 : 0;
        BigInt total = 0;
        for (std::uint64_t x = 0; x * a[i] <= left; ++x)
            total += rec(i + 1, left - x * a[i]);
        return total;
    };
    return rec(0, n);
}

/// Number of partitions of 0..n_max into powers of d via
/// b(n) = b(n-1) + [d | n] b(n/d).
inline std::vector<BigInt> dary_recurrence(std::uint64_t d, std::uint64_t n_max)
{
    std::vector<BigInt> b(n_max + 1);
    b[0] = 1;
    for (std::uint64_t n = 1; n <= n_max; ++n)
        b[n] = b[n - 1] + (n % d == 0 ? b[n / d] : BigInt(0));
    return b;
}

/// Coefficient of n^{k-1} in (n+1)...(n+r-1) as e_{r-k}(1, ..., r-1), summing
/// over subsets explicitly.
inline BigInt brute_stirling(unsigned r, unsigned k)
{
    const unsigned m = r - 1;
    const unsigned want = r - k;
    BigInt total = 0;
    for (unsigned mask = 0; mask < (1u << m); ++mask) {
        if (static_cast<unsigned>(__builtin_popcount(mask)) != want)
            continue;
        BigInt prod = 1;
        for (unsigned b = 0; b < m; ++b)
            if (mask & (1u << b))
                prod *= b + 1;
        total += prod;
    }
    return total;
}

/// B_m from the reciprocal of the series (e^t - 1)/t = sum t^k/(k+1)!.
inline std::vector<BigRational> series_bernoulli(unsigned m_max)
{
    std::vector<BigRational> c(m_max + 1);
    BigInt fact = 1;
    for (unsigned k = 0; k <= m_max; ++k) {
        fact *= k + 1;
        c[k] = BigRational(1) / BigRational(fact);
    }
    std::vector<BigRational> inv(m_max + 1);
    inv[0] = 1;
    for (unsigned m = 1; m <= m_max; ++m) {
        BigRational acc = 0;
        for (unsigned k = 1; k <= m; ++k)
            acc += c[k] * inv[m - k];
        inv[m] = -acc;
    }
    std::vector<BigRational> b(m_max + 1);
    BigInt mf = 1;
    for (unsigned m = 0; m <= m_max; ++m) {
        if (m > 0)
            mf *= m;
        b[m] = inv[m] * BigRational(mf);
        b[m].canonicalize();
    }
    return b;
}

/// Numerical value of sum coeffs[l] rho_j^l in the complex plane.
inline std::complex<double> complex_value(const CyclotomicNumber& x)
{
    const double pi = 3.14159265358979323846;
    std::complex<double> acc = 0;
    for (unsigned l = 0; l < x.order(); ++l)
        acc += x.coeffs()[l].get_d() * std::polar(1.0, 2 * pi * l / x.order());
    return acc;
}

/// Histogram of tuple sums by visiting every tuple.
inline std::vector<BigInt> brute_tuple_sums(const std::vector<std::pair<std::uint64_t, std::uint64_t>>& terms)
{
    std::uint64_t max_sum = 0;
    for (auto [w, m] : terms)
        max_sum += w * (m - 1);
    std::vector<BigInt> counts(max_sum + 1);
    std::function<void(std::size_t, std::uint64_t)> rec = [&](std::size_t i, std::uint64_t s) {
        if (i == terms.size()) {
            counts[s] += 1;
            return;
        }
        for (std::uint64_t t = 0; t < terms[i].second; ++t)
            rec(i + 1, s + terms[i].first * t);
    };
    rec(0, 0);
    return counts;
}

} // namespace dpart::testing
