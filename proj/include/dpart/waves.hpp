#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "dpart/exact.hpp"
#include "dpart/partition.hpp"

namespace dpart {

/// Root-of-unity weight attached to the residue class l (mod j) in the wave
/// sum. With T_l the sum over tuples whose weighted sum is congruent to l:
///
///   Literal    rho_j^l                            (no dependence on n)
///   Twisted    rho_j^{-l n}
///   Sylvester  sum_{0 <= v < j, gcd(v, j) = 1} rho_j^{v (l - n)}
///
/// Only Sylvester satisfies sum_j W_j(n) = p_a(n); the other two are kept
/// callable for comparison and fail the decomposition check.
enum class WaveVariant { Literal, Twisted, Sylvester };

inline constexpr WaveVariant kValidatedWaveVariant = WaveVariant::Sylvester;

std::string to_string(WaveVariant v);
/// Accepts "literal", "twisted", "sylvester".
WaveVariant parse_wave_variant(const std::string& name);

/// Weight of residue class l for wave j at n, as a cyclotomic number of order j.
CyclotomicNumber wave_weight(WaveVariant variant, unsigned j, std::uint64_t l, std::uint64_t n);

/// Evaluates
///
///   1/(D (r-1)!) sum_{m=1}^{r} sum_{l=1}^{j} w_l sum_{k=m-1}^{r-1}
///       [r, k+1] (-1)^{k-m+1} C(k, m-1) sum_{S == l (mod j)} D^{-k} S^{k-m+1} n^{m-1}
///
/// where counts[S] is the number of tuples with weighted sum S, and w_l is
/// the variant's weight. The cyclotomic result is reduced to a rational;
/// NotRational escapes if it is not one.
BigRational wave_from_tuple_sums(std::span<const BigInt> counts, std::uint64_t D, unsigned r, unsigned j,
                                 std::uint64_t n, WaveVariant variant);

/// Polynomial part as the average over the full box of tuples:
///   1/(D (r-1)!) sum_{tuples} prod_{l=1}^{r-1} ((n - sum a_i j_i)/D + l).
RationalPolynomial polynomial_part_average(const PartsList& a);

/// Polynomial part from Bernoulli numbers:
///   1/(a_1...a_r) sum_{u=0}^{r-1} (-1)^u/(r-1-u)!
///     sum_{i_1+...+i_r=u} prod_t B_{i_t} a_t^{i_t} / i_t!  n^{r-1-u}.
RationalPolynomial polynomial_part_bernoulli(const PartsList& a);

/// W_j(n, a). Throws NotDivisor if j divides no entry of a.
BigRational wave(unsigned j, const PartsList& a, std::uint64_t n,
                 WaveVariant variant = kValidatedWaveVariant);

struct WaveValue {
    std::uint64_t j;
    std::optional<BigRational> value; // empty when the variant produced an irrational value
};

struct WaveCheckRow {
    std::uint64_t n;
    std::vector<WaveValue> waves;
    std::optional<BigRational> sum;
    BigInt oracle;
    bool pass;
    std::string note;
};

struct WaveCheckReport {
    PartsList parts;
    WaveVariant variant;
    std::vector<std::uint64_t> divisors;
    std::vector<WaveCheckRow> rows;

    bool all_pass() const;
};

/// For 0 <= n <= n_max, compares sum_j W_j(n, a) over all divisors j of the
/// parts with denumerant_dp. Failures are recorded, never thrown.
WaveCheckReport wave_decomposition_check(const PartsList& a, std::uint64_t n_max,
                                         WaveVariant variant = kValidatedWaveVariant);

} // namespace dpart
