#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "dpart/exact.hpp"
#include "dpart/partition.hpp"
#include "dpart/waves.hpp"

namespace dpart {

/// Partition whose parts are d^{c_1} >= ... >= d^{c_l}, stored by exponent.
class DAryPartition {
public:
    /// Throws std::invalid_argument if d < 2 or the exponents increase.
    DAryPartition(std::uint64_t base, std::vector<std::uint64_t> exponents);

    std::uint64_t base() const noexcept { return base_; }
    const std::vector<std::uint64_t>& exponents() const noexcept { return exponents_; }
    std::size_t length() const noexcept { return exponents_.size(); }

    Partition parts() const;
    BigInt size() const;

    friend bool operator==(const DAryPartition&, const DAryPartition&) = default;

private:
    std::uint64_t base_;
    std::vector<std::uint64_t> exponents_;
};

std::ostream& operator<<(std::ostream& os, const DAryPartition& p);

/// Exponent e with d^e == value, by repeated exact division. Throws
/// NotPowerOfD otherwise.
std::uint64_t exact_log(const BigInt& value, std::uint64_t d);

/// Parts d^{lambda_i - 1}.
DAryPartition exp_d(const Partition& lambda, std::uint64_t d);
/// Parts c_i + 1; the inverse of exp_d.
Partition log_d(const DAryPartition& mu);

/// Largest k with d^k <= n, by exact multiplication. Requires n >= 1, d >= 2.
unsigned floor_log(std::uint64_t d, const BigInt& n);

/// (1, d, ..., d^k)
PartsList dary_parts(std::uint64_t d, unsigned k);

/// Number of d-ary partitions of n via the closed sum over
/// 0 <= j_i <= d^{k-i+1} - 1 with j_1 + j_2 d + ... + j_k d^{k-1} == n (mod d^k),
/// using k = floor(log_d n).
BigInt count_dary(std::uint64_t d, std::uint64_t n);
/// Same sum with an explicit window k; requires n < d^{k+1}.
BigInt count_dary(std::uint64_t d, std::uint64_t n, unsigned k);

/// How the last summand of the tuple sum in the d-ary wave formula is read.
/// Corrected uses j_k d^{k-1}; Literal stops at d^{k-2} j_{k-1} and lets j_k
/// only multiply the count.
enum class IndexReading { Corrected, Literal };

std::string to_string(IndexReading r);
IndexReading parse_index_reading(const std::string& name);

/// W_j(d, n) for the window k = floor(log_d n). Throws NotDivisor unless j | d^k.
BigRational wave_d(unsigned j, std::uint64_t d, std::uint64_t n, WaveVariant variant = kValidatedWaveVariant,
                   IndexReading reading = IndexReading::Corrected);

/// Distinct divisors of d^k, ascending.
std::vector<std::uint64_t> dary_wave_indices(std::uint64_t d, unsigned k);

/// P_d(n) for n < d^{k+1}, averaged over the full tuple box.
RationalPolynomial poly_part_d_average(std::uint64_t d, unsigned k);
/// P_d(n) for n < d^{k+1}, from Bernoulli numbers with weights d^{i_2 + 2 i_3 + ... + k i_{k+1}}.
RationalPolynomial poly_part_d_bernoulli(std::uint64_t d, unsigned k);

} // namespace dpart
