#include "dpart/quasipoly.hpp"

#include <algorithm>
#include <stdexcept>

namespace dpart {

std::vector<BigInt> tuple_sum_counts(std::span<const TupleTerm> terms)
{
    std::vector<BigInt> counts{BigInt(1)};
    for (const auto& term : terms) {
        if (term.range == 0)
            throw std::invalid_argument("tuple_sum_counts: empty range");
        const std::uint64_t w = term.weight;
        const std::uint64_t m = term.range;
        if (w == 0) {
            for (auto& c : counts)
                c *= static_cast<unsigned long>(m);
            continue;
        }
        const std::uint64_t span = w * (m - 1);
        std::vector<BigInt> next(counts.size() + span);
        // next[s] = sum_{t=0}^{m-1} counts[s - w t]
        for (std::uint64_t s = 0; s < next.size(); ++s) {
            BigInt v = s < counts.size() ? counts[s] : BigInt(0);
            if (s >= w)
                v += next[s - w];
            if (s >= w * m && s - w * m < counts.size())
                v -= counts[s - w * m];
            next[s] = std::move(v);
        }
        counts = std::move(next);
    }
    return counts;
}

std::vector<TupleTerm> denumerant_terms(const PartsList& a)
{
    std::vector<TupleTerm> terms;
    for (auto part : a.parts())
        terms.push_back({part, a.lcm() / part});
    return terms;
}

BigRational denumerant_formula(const PartsList& a, std::uint64_t n)
{
    const auto r = static_cast<unsigned>(a.r());
    const std::uint64_t D = a.lcm();
    const auto counts = tuple_sum_counts(denumerant_terms(a));

    BigInt total = 0;
    for (std::uint64_t s = n % D; s < counts.size(); s += D) {
        if (counts[s] == 0)
            continue;
        // (n - s)/D is an exact integer on this residue class
        BigInt shift = (BigInt(static_cast<unsigned long>(n)) - BigInt(static_cast<unsigned long>(s))) /
                       BigInt(static_cast<unsigned long>(D));
        BigInt prod = 1;
        for (unsigned l = 1; l < r; ++l)
            prod *= shift + l;
        total += counts[s] * prod;
    }
    return make_rational(total, factorial(r - 1));
}

BigRational QuasiPolynomial::operator()(std::uint64_t n) const
{
    return residue_polys.at(n % period)(BigRational(static_cast<unsigned long>(n)));
}

QuasiPolynomial fit_quasipolynomial(const PartsList& a, std::uint64_t n_max_check)
{
    const std::uint64_t D = a.lcm();
    const auto r = static_cast<unsigned>(a.r());
    const std::uint64_t needed = (D - 1) + (r - 1) * D;
    const auto table = denumerant_table(a, std::max(needed, n_max_check));

    QuasiPolynomial q;
    q.period = D;
    q.degree = r - 1;
    q.residue_polys.reserve(D);
    for (std::uint64_t c = 0; c < D; ++c) {
        std::vector<std::pair<BigRational, BigRational>> points;
        for (unsigned t = 0; t < r; ++t) {
            const std::uint64_t x = c + t * D;
            points.emplace_back(BigRational(static_cast<unsigned long>(x)), BigRational(table[x]));
        }
        q.residue_polys.push_back(interpolate(points));
    }

    for (std::uint64_t n = 0; n <= n_max_check; ++n) {
        const BigRational v = q(n);
        if (v != BigRational(table[n]))
            throw VerificationFailed("quasi-polynomial fit for parts (" + to_string(a) + ") gives " +
                                     to_string(v) + " at n=" + std::to_string(n) + ", oracle says " +
                                     to_string(table[n]));
    }
    return q;
}

} // namespace dpart
