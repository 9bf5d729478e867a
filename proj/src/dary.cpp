#include "dpart/dary.hpp"

#include <limits>
#include <set>
#include <stdexcept>

#include "dpart/quasipoly.hpp"

namespace dpart {

namespace {

void check_base(std::uint64_t d)
{
    if (d < 2)
        throw std::invalid_argument("base d must be at least 2, got " + std::to_string(d));
}

std::uint64_t checked_power(std::uint64_t d, unsigned k)
{
    std::uint64_t p = 1;
    for (unsigned i = 0; i < k; ++i) {
        if (p > std::numeric_limits<std::uint64_t>::max() / d)
            throw std::invalid_argument("d^k overflows 64 bits");
        p *= d;
    }
    return p;
}

// Box of the d-ary sums: j_i in [0, d^{k-i+1}) with weight d^{i-1}, i = 1..k.
std::vector<TupleTerm> dary_terms(std::uint64_t d, unsigned k, IndexReading reading = IndexReading::Corrected)
{
    std::vector<TupleTerm> terms;
    for (unsigned i = 1; i <= k; ++i) {
        std::uint64_t weight = checked_power(d, i - 1);
        if (reading == IndexReading::Literal && i == k)
            weight = 0;
        terms.push_back({weight, checked_power(d, k - i + 1)});
    }
    return terms;
}

} // namespace

// DAryPartition ---------------------------------------------------------------

DAryPartition::DAryPartition(std::uint64_t base, std::vector<std::uint64_t> exponents)
    : base_(base), exponents_(std::move(exponents))
{
    check_base(base_);
    for (std::size_t i = 1; i < exponents_.size(); ++i)
        if (exponents_[i] > exponents_[i - 1])
            throw std::invalid_argument("d-ary exponents must be non-increasing");
}

Partition DAryPartition::parts() const
{
    std::vector<BigInt> parts;
    parts.reserve(exponents_.size());
    for (auto c : exponents_)
        parts.push_back(pow(BigInt(static_cast<unsigned long>(base_)), c));
    return Partition(std::move(parts));
}

BigInt DAryPartition::size() const
{
    return parts().size();
}

std::ostream& operator<<(std::ostream& os, const DAryPartition& p)
{
    return os << p.parts() << "_" << p.base();
}

std::uint64_t exact_log(const BigInt& value, std::uint64_t d)
{
    check_base(d);
    if (value < 1)
        throw NotPowerOfD(to_string(value) + " is not a power of " + std::to_string(d));
    BigInt v = value;
    const BigInt dz = static_cast<unsigned long>(d);
    std::uint64_t e = 0;
    while (v > 1) {
        if (v % dz != 0)
            throw NotPowerOfD(to_string(value) + " is not a power of " + std::to_string(d));
        v /= dz;
        ++e;
    }
    return e;
}

DAryPartition exp_d(const Partition& lambda, std::uint64_t d)
{
    std::vector<std::uint64_t> exps;
    exps.reserve(lambda.length());
    for (const auto& part : lambda.parts()) {
        if (!part.fits_ulong_p())
            throw std::invalid_argument("part too large to use as an exponent");
        exps.push_back(part.get_ui() - 1);
    }
    return DAryPartition(d, std::move(exps));
}

Partition log_d(const DAryPartition& mu)
{
    std::vector<BigInt> parts;
    parts.reserve(mu.length());
    for (auto c : mu.exponents())
        parts.emplace_back(static_cast<unsigned long>(c + 1));
    return Partition(std::move(parts));
}

unsigned floor_log(std::uint64_t d, const BigInt& n)
{
    check_base(d);
    if (n < 1)
        throw std::invalid_argument("floor_log needs n >= 1");
    unsigned k = 0;
    BigInt power = static_cast<unsigned long>(d);
    while (power <= n) {
        power *= static_cast<unsigned long>(d);
        ++k;
    }
    return k;
}

PartsList dary_parts(std::uint64_t d, unsigned k)
{
    check_base(d);
    std::vector<std::uint64_t> parts;
    for (unsigned i = 0; i <= k; ++i)
        parts.push_back(checked_power(d, i));
    return PartsList(std::move(parts));
}

BigInt count_dary(std::uint64_t d, std::uint64_t n)
{
    if (n < 1)
        throw std::invalid_argument("count_dary needs n >= 1");
    return count_dary(d, n, floor_log(d, BigInt(static_cast<unsigned long>(n))));
}

BigInt count_dary(std::uint64_t d, std::uint64_t n, unsigned k)
{
    check_base(d);
    if (BigInt(static_cast<unsigned long>(n)) >= pow(BigInt(static_cast<unsigned long>(d)), k + 1))
        throw std::invalid_argument("count_dary: window too small, need n < d^(k+1)");

    const std::uint64_t D = checked_power(d, k);
    const BigInt Dz = static_cast<unsigned long>(D);
    const auto counts = tuple_sum_counts(dary_terms(d, k));

    BigInt total = 0;
    for (std::uint64_t s = n % D; s < counts.size(); s += D) {
        if (counts[s] == 0)
            continue;
        const BigInt shift = (BigInt(static_cast<unsigned long>(n)) - BigInt(static_cast<unsigned long>(s))) / Dz;
        BigInt prod = 1;
        for (unsigned l = 1; l <= k; ++l)
            prod *= shift + l;
        total += counts[s] * prod;
    }
    const BigInt kf = factorial(k);
    if (total % kf != 0)
        throw VerificationFailed("d-ary count sum is not divisible by k!");
    return total / kf;
}

std::string to_string(IndexReading r)
{
    return r == IndexReading::Corrected ? "corrected" : "literal";
}

IndexReading parse_index_reading(const std::string& name)
{
    if (name == "corrected")
        return IndexReading::Corrected;
    if (name == "literal")
        return IndexReading::Literal;
    throw std::invalid_argument("unknown index reading '" + name + "'");
}

std::vector<std::uint64_t> dary_wave_indices(std::uint64_t d, unsigned k)
{
    const std::uint64_t D = checked_power(d, k);
    std::set<std::uint64_t> divs;
    for (std::uint64_t q = 1; q * q <= D; ++q)
        if (D % q == 0) {
            divs.insert(q);
            divs.insert(D / q);
        }
    return {divs.begin(), divs.end()};
}

BigRational wave_d(unsigned j, std::uint64_t d, std::uint64_t n, WaveVariant variant, IndexReading reading)
{
    if (n < 1)
        throw std::invalid_argument("wave_d needs n >= 1");
    const unsigned k = floor_log(d, BigInt(static_cast<unsigned long>(n)));
    const std::uint64_t D = checked_power(d, k);
    if (j == 0 || D % j != 0)
        throw NotDivisor("j = " + std::to_string(j) + " does not divide " + std::to_string(d) + "^" +
                         std::to_string(k));
    const auto counts = tuple_sum_counts(dary_terms(d, k, reading));
    return wave_from_tuple_sums(counts, D, k + 1, j, n, variant);
}

RationalPolynomial poly_part_d_average(std::uint64_t d, unsigned k)
{
    check_base(d);
    const std::uint64_t D = checked_power(d, k);
    const BigInt Dz = static_cast<unsigned long>(D);
    const auto counts = tuple_sum_counts(dary_terms(d, k));

    RationalPolynomial sum;
    for (std::uint64_t s = 0; s < counts.size(); ++s) {
        if (counts[s] == 0)
            continue;
        RationalPolynomial prod = RationalPolynomial::constant(BigRational(counts[s]));
        const BigRational shift = make_rational(static_cast<unsigned long>(s), Dz);
        for (unsigned l = 1; l <= k; ++l)
            prod = prod * RationalPolynomial::linear(make_rational(1, Dz), BigRational(l) - shift);
        sum += prod;
    }
    return sum * make_rational(1, Dz * factorial(k));
}

RationalPolynomial poly_part_d_bernoulli(std::uint64_t d, unsigned k)
{
    check_base(d);
    const BigInt dz = static_cast<unsigned long>(d);
    std::vector<BigRational> coeffs(k + 1);
    for (unsigned u = 0; u <= k; ++u) {
        BigRational inner = 0;
        for_each_composition(u, k + 1, [&](const std::vector<unsigned>& i) {
            BigRational term = 1;
            unsigned long weight = 0; // i_2 + 2 i_3 + ... + k i_{k+1}
            for (unsigned t = 0; t <= k; ++t) {
                term *= bernoulli(i[t]);
                if (term == 0)
                    return;
                term /= BigRational(factorial(i[t]));
                weight += static_cast<unsigned long>(t) * i[t];
            }
            inner += term * BigRational(pow(dz, weight));
        });
        BigRational c = inner / BigRational(factorial(k - u));
        if (u % 2 == 1)
            c = -c;
        coeffs[k - u] = c;
    }
    const unsigned long triangle = static_cast<unsigned long>(k) * (k + 1) / 2;
    return RationalPolynomial(std::move(coeffs)) * make_rational(1, pow(dz, triangle));
}

} // namespace dpart
