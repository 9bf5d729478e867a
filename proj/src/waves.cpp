#include "dpart/waves.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <stdexcept>

#include "dpart/quasipoly.hpp"

namespace dpart {

std::string to_string(WaveVariant v)
{
    switch (v) {
    case WaveVariant::Literal:
        return "literal";
    case WaveVariant::Twisted:
        return "twisted";
    case WaveVariant::Sylvester:
        return "sylvester";
    }
    return "unknown";
}

WaveVariant parse_wave_variant(const std::string& name)
{
    if (name == "literal")
        return WaveVariant::Literal;
    if (name == "twisted")
        return WaveVariant::Twisted;
    if (name == "sylvester")
        return WaveVariant::Sylvester;
    throw std::invalid_argument("unknown wave variant '" + name + "'");
}

CyclotomicNumber wave_weight(WaveVariant variant, unsigned j, std::uint64_t l, std::uint64_t n)
{
    const long long lr = static_cast<long long>(l % j);
    const long long nr = static_cast<long long>(n % j);
    switch (variant) {
    case WaveVariant::Literal:
        return root_of_unity(j, lr);
    case WaveVariant::Twisted:
        return root_of_unity(j, -lr * nr);
    case WaveVariant::Sylvester: {
        CyclotomicNumber w(j, BigRational(0));
        for (unsigned v = 0; v < j; ++v)
            if (std::gcd(v, j) == 1) // gcd(0, 1) = 1 picks v = 0 when j = 1
                w += root_of_unity(j, static_cast<long long>(v) * (lr - nr));
        return w;
    }
    }
    throw std::logic_error("unhandled wave variant");
}

BigRational wave_from_tuple_sums(std::span<const BigInt> counts, std::uint64_t D, unsigned r, unsigned j,
                                 std::uint64_t n, WaveVariant variant)
{
    if (j == 0)
        throw std::invalid_argument("wave index must be positive");

    // moments[c][p] = sum_{S == c (mod j)} counts[S] * S^p
    std::vector<std::vector<BigInt>> moments(j, std::vector<BigInt>(r));
    for (std::uint64_t s = 0; s < counts.size(); ++s) {
        if (counts[s] == 0)
            continue;
        auto& row = moments[s % j];
        BigInt term = counts[s];
        const BigInt sv = static_cast<unsigned long>(s);
        for (unsigned p = 0; p < r; ++p) {
            row[p] += term;
            term *= sv;
        }
    }

    const BigInt Dz = static_cast<unsigned long>(D);
    const BigRational nq = static_cast<unsigned long>(n);

    CyclotomicNumber total(j, BigRational(0));
    for (unsigned l = 1; l <= j; ++l) {
        const auto& mom = moments[l % j];
        BigRational coeff = 0;
        BigRational n_power = 1; // n^{m-1}
        for (unsigned m = 1; m <= r; ++m) {
            BigRational inner = 0;
            for (unsigned k = m - 1; k <= r - 1; ++k) {
                const unsigned e = k - m + 1;
                BigInt c = stirling_unsigned(r, k + 1) * binomial(k, m - 1) * mom[e];
                if (e % 2 == 1)
                    c = -c;
                inner += make_rational(c, pow(Dz, k));
            }
            coeff += inner * n_power;
            n_power *= nq;
        }
        if (coeff != 0)
            total += wave_weight(variant, j, l, n) * coeff;
    }
    total *= make_rational(1, Dz * factorial(r - 1));
    return to_rational(total);
}

RationalPolynomial polynomial_part_average(const PartsList& a)
{
    const auto r = static_cast<unsigned>(a.r());
    const std::uint64_t D = a.lcm();
    const BigInt Dz = static_cast<unsigned long>(D);
    const auto counts = tuple_sum_counts(denumerant_terms(a));

    RationalPolynomial sum;
    for (std::uint64_t s = 0; s < counts.size(); ++s) {
        if (counts[s] == 0)
            continue;
        // prod_{l=1}^{r-1} (n/D + (l - s/D))
        RationalPolynomial prod = RationalPolynomial::constant(BigRational(counts[s]));
        const BigRational shift = make_rational(static_cast<unsigned long>(s), Dz);
        for (unsigned l = 1; l < r; ++l)
            prod = prod * RationalPolynomial::linear(make_rational(1, Dz), BigRational(l) - shift);
        sum += prod;
    }
    return sum * make_rational(1, Dz * factorial(r - 1));
}

RationalPolynomial polynomial_part_bernoulli(const PartsList& a)
{
    const auto r = static_cast<unsigned>(a.r());
    BigInt product = 1;
    for (auto part : a.parts())
        product *= static_cast<unsigned long>(part);

    std::vector<BigRational> coeffs(r);
    for (unsigned u = 0; u < r; ++u) {
        BigRational inner = 0;
        for_each_composition(u, r, [&](const std::vector<unsigned>& i) {
            BigRational term = 1;
            for (unsigned t = 0; t < r; ++t) {
                term *= bernoulli(i[t]);
                if (term == 0)
                    return;
                term *= make_rational(pow(BigInt(static_cast<unsigned long>(a.parts()[t])), i[t]), factorial(i[t]));
            }
            inner += term;
        });
        BigRational c = inner / BigRational(factorial(r - 1 - u));
        if (u % 2 == 1)
            c = -c;
        coeffs[r - 1 - u] = c / BigRational(product);
    }
    return RationalPolynomial(std::move(coeffs));
}

BigRational wave(unsigned j, const PartsList& a, std::uint64_t n, WaveVariant variant)
{
    if (j == 0 || std::none_of(a.parts().begin(), a.parts().end(), [j](auto part) { return part % j == 0; }))
        throw NotDivisor("j = " + std::to_string(j) + " divides no part of (" + to_string(a) + ")");
    const auto counts = tuple_sum_counts(denumerant_terms(a));
    return wave_from_tuple_sums(counts, a.lcm(), static_cast<unsigned>(a.r()), j, n, variant);
}

bool WaveCheckReport::all_pass() const
{
    return std::all_of(rows.begin(), rows.end(), [](const auto& row) { return row.pass; });
}

WaveCheckReport wave_decomposition_check(const PartsList& a, std::uint64_t n_max, WaveVariant variant)
{
    WaveCheckReport report{a, variant, a.divisors(), {}};
    const auto counts = tuple_sum_counts(denumerant_terms(a));
    const auto oracle = denumerant_table(a, n_max);
    const auto r = static_cast<unsigned>(a.r());

    for (std::uint64_t n = 0; n <= n_max; ++n) {
        WaveCheckRow row{n, {}, BigRational(0), oracle[n], false, {}};
        for (auto j : report.divisors) {
            try {
                auto w = wave_from_tuple_sums(counts, a.lcm(), r, static_cast<unsigned>(j), n, variant);
                if (row.sum)
                    *row.sum += w;
                row.waves.push_back({j, std::move(w)});
            } catch (const NotRational&) {
                row.waves.push_back({j, std::nullopt});
                row.sum.reset();
                if (!row.note.empty())
                    row.note += "; ";
                row.note += "W_" + std::to_string(j) + " not rational";
            }
        }
        row.pass = row.sum && *row.sum == BigRational(row.oracle);
        report.rows.push_back(std::move(row));
    }
    return report;
}

} // namespace dpart
