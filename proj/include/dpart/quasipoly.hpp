#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "dpart/exact.hpp"
#include "dpart/partition.hpp"

namespace dpart {

/// One coordinate of a bounded tuple: j ranges over 0..range-1 and
/// contributes weight * j to the tuple sum.
struct TupleTerm {
    std::uint64_t weight;
    std::uint64_t range;
};

/// counts[s] = number of tuples (j_1, ..., j_t), 0 <= j_i < range_i, with
/// sum weight_i * j_i = s. Built one coordinate at a time with a sliding
/// window, so the cost is linear in the largest attainable sum per term.
std::vector<BigInt> tuple_sum_counts(std::span<const TupleTerm> terms);

/// The box 0 <= j_i <= D/a_i - 1 weighted by a_i.
std::vector<TupleTerm> denumerant_terms(const PartsList& a);

/// Closed form of p_a(n):
///   1/(r-1)! * sum over tuples with sum a_i j_i == n (mod D) of
///   prod_{l=1}^{r-1} ((n - sum a_i j_i)/D + l).
BigRational denumerant_formula(const PartsList& a, std::uint64_t n);

/// Period-D family of polynomials; the value at n is residue_polys[n mod D](n).
struct QuasiPolynomial {
    std::uint64_t period = 1;
    unsigned degree = 0;
    std::vector<RationalPolynomial> residue_polys;

    BigRational operator()(std::uint64_t n) const;
};

/// Interpolates each residue class c mod D through c, c+D, ..., c+(r-1)D
/// using denumerant_dp values, then checks the fit for every n <= n_max_check.
/// Throws VerificationFailed on the first disagreement.
QuasiPolynomial fit_quasipolynomial(const PartsList& a, std::uint64_t n_max_check);

} // namespace dpart
