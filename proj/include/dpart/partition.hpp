#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "dpart/exact.hpp"

namespace dpart {

/// Non-increasing sequence of positive integers. The empty partition is the
/// unique partition of 0.
class Partition {
public:
    Partition() = default;
    /// Throws std::invalid_argument unless parts are positive and non-increasing.
    explicit Partition(std::vector<BigInt> parts);
    Partition(std::initializer_list<long> parts);

    /// Sorts arbitrary positive values into a partition.
    static Partition from_unsorted(std::vector<BigInt> parts);

    const std::vector<BigInt>& parts() const noexcept { return parts_; }
    std::size_t length() const noexcept { return parts_.size(); }
    BigInt size() const;
    const BigInt& operator[](std::size_t i) const { return parts_[i]; }

    friend bool operator==(const Partition&, const Partition&) = default;
    friend bool operator<(const Partition& a, const Partition& b) { return a.parts_ < b.parts_; }

private:
    std::vector<BigInt> parts_;
};

std::ostream& operator<<(std::ostream& os, const Partition& p);
/// Comma-separated parts; empty string for the empty partition.
std::string to_string(const Partition& p);

/// Allowed part sizes (a_1, ..., a_r), pairwise distinct, with D = lcm.
class PartsList {
public:
    /// Throws std::invalid_argument on an empty list, a non-positive or
    /// repeated entry, or an lcm that overflows 64 bits.
    explicit PartsList(std::vector<std::uint64_t> parts);
    PartsList(std::initializer_list<std::uint64_t> parts);

    const std::vector<std::uint64_t>& parts() const noexcept { return parts_; }
    std::size_t r() const noexcept { return parts_.size(); }
    std::uint64_t lcm() const noexcept { return lcm_; }

    /// Distinct divisors of the entries, ascending.
    std::vector<std::uint64_t> divisors() const;

    friend bool operator==(const PartsList& a, const PartsList& b) { return a.parts_ == b.parts_; }

private:
    std::vector<std::uint64_t> parts_;
    std::uint64_t lcm_ = 1;
};

std::string to_string(const PartsList& a);

/// Every partition of n with parts in a, in lexicographically decreasing order.
std::vector<Partition> enumerate_restricted(std::uint64_t n, const PartsList& a);

/// p_a(n) by the coin-counting recurrence on the product of geometric series.
/// This is the reference against which every closed formula is checked.
BigInt denumerant_dp(const PartsList& a, std::uint64_t n);

/// All of p_a(0), ..., p_a(n_max) in one pass.
std::vector<BigInt> denumerant_table(const PartsList& a, std::uint64_t n_max);

/// e_j(lambda); zero when the partition has fewer than j parts.
BigInt elementary_symmetric_value(const Partition& lambda, std::size_t j);

/// Strictly increasing, 1-based index tuple.
using IndexTuple = std::vector<std::size_t>;

/// All strictly increasing j-subsets of {1..n} in lexicographic order.
std::vector<IndexTuple> index_tuples(std::size_t n, std::size_t j);

/// Position-indexed j-fold product data of a partition of length ell.
struct SubsetProductMap {
    std::size_t length = 0;
    std::size_t order = 0;
    std::map<IndexTuple, BigInt> entries;

    /// Throws std::invalid_argument unless there is exactly one positive
    /// value per strictly increasing j-tuple in [length].
    void validate() const;
    friend bool operator==(const SubsetProductMap&, const SubsetProductMap&) = default;
};

/// The elementary symmetric partition: all j-fold products over strictly
/// increasing index tuples, sorted. Requires 1 <= j <= length.
Partition pre_j(const Partition& lambda, std::size_t j);

/// Requires 1 <= j <= length.
SubsetProductMap positional_products(const Partition& lambda, std::size_t j);

} // namespace dpart
