#pragma once

#include <cstddef>
#include <cstdint>
#include <utility>
#include <vector>

#include "dpart/dary.hpp"
#include "dpart/exact.hpp"
#include "dpart/partition.hpp"

namespace dpart {

/// Dense row-major matrix of exact integers.
class IntMatrix {
public:
    IntMatrix(std::size_t rows, std::size_t cols);
    static IntMatrix identity(std::size_t n);
    /// Throws std::invalid_argument on ragged input.
    static IntMatrix from_rows(const std::vector<std::vector<long>>& rows);

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }
    BigInt& operator()(std::size_t r, std::size_t c) { return entries_[r * cols_ + c]; }
    const BigInt& operator()(std::size_t r, std::size_t c) const { return entries_[r * cols_ + c]; }

    IntMatrix transposed() const;

    friend bool operator==(const IntMatrix&, const IntMatrix&) = default;

private:
    std::size_t rows_;
    std::size_t cols_;
    std::vector<BigInt> entries_;
};

std::ostream& operator<<(std::ostream& os, const IntMatrix& m);

/// The n x n 0/1 matrix with columns
///   c_1 = e_1 + ... + e_j,
///   c_i = e_1 + ... + e_{j+1} - e_{i-1}    for 2 <= i <= j+1,
///   c_i = e_{i-j+1} + ... + e_i            for j+2 <= i <= n.
/// Requires n >= 2 and 1 <= j <= n-1.
IntMatrix build_c_matrix(std::size_t n, std::size_t j);

/// Exact determinant by fraction-free (Bareiss) elimination.
BigInt det_exact(const IntMatrix& m);

struct DetCheckRow {
    std::size_t n;
    std::size_t j;
    BigInt det;
    bool pass;
};

struct DetCheckReport {
    std::vector<DetCheckRow> rows;
    bool all_pass() const;
};

/// det(build_c_matrix(n, j)) == j for every 2 <= n <= n_max, 1 <= j <= n-1.
DetCheckReport circulant_det_check(std::size_t n_max);

/// The ell index j-tuples used to solve for the exponents, in order: the
/// window {1..j}; the j sets {1..j+1} minus {i-1} for i = 2..j+1; then the
/// windows {i-j+1..i} for i = j+2..ell. Row i is the support of column i of
/// build_c_matrix(ell, j).
std::vector<IndexTuple> subsystem_tuples(std::size_t ell, std::size_t j);

/// Coefficient matrix of the square subsystem; equals build_c_matrix(ell, j)^T.
IntMatrix subsystem_matrix(std::size_t ell, std::size_t j);

/// Recovers the d-ary partition whose positional j-fold products are given.
///
/// Takes exact base-d logarithms of the products, solves the square
/// subsystem over the rationals, and accepts the solution only if it is a
/// non-increasing vector of non-negative integers satisfying every one of
/// the C(ell, j) equations. Requires 1 <= j <= ell-1.
///
/// Throws NotPowerOfD for a product that is not a power of d and
/// InconsistentData when no d-ary partition has these products.
DAryPartition reconstruct_exponents(const SubsetProductMap& products, std::uint64_t d);

/// Exponent vectors c_1 >= ... >= c_ell with 0 <= c_i <= max_exp, in
/// lexicographic order.
std::vector<DAryPartition> enumerate_dary_fixed_length(std::uint64_t d, std::size_t ell, std::uint64_t max_exp);

struct UniquenessReport {
    std::uint64_t d;
    std::size_t ell;
    std::uint64_t max_exp;
    std::size_t j;
    std::size_t partitions_checked = 0;
    std::size_t pairs_checked = 0;
    /// Distinct pairs sharing positional product data. Must stay empty.
    std::vector<std::pair<DAryPartition, DAryPartition>> violations;
    /// Distinct pairs with equal pre_j multisets but different positional
    /// data. Informational only.
    std::vector<std::pair<DAryPartition, DAryPartition>> multiset_collisions;

    bool pass() const { return violations.empty(); }
};

/// Exhaustive pair sweep over enumerate_dary_fixed_length(d, ell, max_exp).
UniquenessReport verify_uniqueness(std::uint64_t d, std::size_t ell, std::uint64_t max_exp, std::size_t j);

} // namespace dpart
