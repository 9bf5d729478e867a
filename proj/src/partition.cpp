#include "dpart/partition.hpp"

#include <algorithm>
#include <functional>
#include <limits>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>

namespace dpart {

// Partition -------------------------------------------------------------------

Partition::Partition(std::vector<BigInt> parts)
    : parts_(std::move(parts))
{
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (parts_[i] < 1)
            throw std::invalid_argument("partition parts must be positive");
        if (i > 0 && parts_[i] > parts_[i - 1])
            throw std::invalid_argument("partition parts must be non-increasing");
    }
}

Partition::Partition(std::initializer_list<long> parts)
    : Partition(std::vector<BigInt>(parts.begin(), parts.end()))
{
}

Partition Partition::from_unsorted(std::vector<BigInt> parts)
{
    std::sort(parts.begin(), parts.end(), std::greater<>());
    return Partition(std::move(parts));
}

BigInt Partition::size() const
{
    BigInt total = 0;
    for (const auto& p : parts_)
        total += p;
    return total;
}

std::string to_string(const Partition& p)
{
    std::string out;
    for (std::size_t i = 0; i < p.length(); ++i) {
        if (i)
            out += ',';
        out += p[i].get_str();
    }
    return out;
}

std::ostream& operator<<(std::ostream& os, const Partition& p)
{
    return os << '(' << to_string(p) << ')';
}

// PartsList -------------------------------------------------------------------

PartsList::PartsList(std::vector<std::uint64_t> parts)
    : parts_(std::move(parts))
{
    if (parts_.empty())
        throw std::invalid_argument("parts list must be non-empty");
    std::set<std::uint64_t> seen;
    for (auto a : parts_) {
        if (a == 0)
            throw std::invalid_argument("parts must be positive");
        if (!seen.insert(a).second)
            throw std::invalid_argument("parts list has repeated entry " + std::to_string(a));
        const std::uint64_t g = std::gcd(lcm_, a);
        if (lcm_ / g > std::numeric_limits<std::uint64_t>::max() / a)
            throw std::invalid_argument("lcm of parts overflows 64 bits");
        lcm_ = lcm_ / g * a;
    }
}

PartsList::PartsList(std::initializer_list<std::uint64_t> parts)
    : PartsList(std::vector<std::uint64_t>(parts))
{
}

std::vector<std::uint64_t> PartsList::divisors() const
{
    std::set<std::uint64_t> divs;
    for (auto a : parts_)
        for (std::uint64_t d = 1; d * d <= a; ++d)
            if (a % d == 0) {
                divs.insert(d);
                divs.insert(a / d);
            }
    return {divs.begin(), divs.end()};
}

std::string to_string(const PartsList& a)
{
    std::string out;
    for (std::size_t i = 0; i < a.r(); ++i) {
        if (i)
            out += ',';
        out += std::to_string(a.parts()[i]);
    }
    return out;
}

// Enumeration and counting ----------------------------------------------------

namespace {

void enumerate_into(std::uint64_t remaining, std::span<const std::uint64_t> desc_parts,
                    std::vector<BigInt>& current, std::vector<Partition>& out)
{
    if (remaining == 0) {
        out.emplace_back(current);
        return;
    }
    for (std::size_t i = 0; i < desc_parts.size(); ++i) {
        const auto a = desc_parts[i];
        if (a > remaining)
            continue;
        current.emplace_back(static_cast<unsigned long>(a));
        enumerate_into(remaining - a, desc_parts.subspan(i), current, out);
        current.pop_back();
    }
}

} // namespace

std::vector<Partition> enumerate_restricted(std::uint64_t n, const PartsList& a)
{
    std::vector<std::uint64_t> desc = a.parts();
    std::sort(desc.begin(), desc.end(), std::greater<>());
    std::vector<Partition> out;
    std::vector<BigInt> current;
    enumerate_into(n, desc, current, out);
    return out;
}

std::vector<BigInt> denumerant_table(const PartsList& a, std::uint64_t n_max)
{
    std::vector<BigInt> ways(n_max + 1);
    ways[0] = 1;
    for (auto part : a.parts())
        for (std::uint64_t s = part; s <= n_max; ++s)
            ways[s] += ways[s - part];
    return ways;
}

BigInt denumerant_dp(const PartsList& a, std::uint64_t n)
{
    return denumerant_table(a, n)[n];
}

BigInt elementary_symmetric_value(const Partition& lambda, std::size_t j)
{
    if (j == 0)
        throw std::invalid_argument("elementary_symmetric_value: j must be positive");
    if (lambda.length() < j)
        return 0;
    // e[k] after processing a prefix of the parts
    std::vector<BigInt> e(j + 1);
    e[0] = 1;
    for (const auto& x : lambda.parts())
        for (std::size_t k = j; k >= 1; --k)
            e[k] += e[k - 1] * x;
    return e[j];
}

std::vector<IndexTuple> index_tuples(std::size_t n, std::size_t j)
{
    std::vector<IndexTuple> out;
    if (j > n)
        return out;
    IndexTuple t(j);
    std::iota(t.begin(), t.end(), std::size_t{1});
    while (true) {
        out.push_back(t);
        std::size_t i = j;
        while (i > 0 && t[i - 1] == n - j + i)
            --i;
        if (i == 0)
            break;
        ++t[i - 1];
        for (std::size_t k = i; k < j; ++k)
            t[k] = t[k - 1] + 1;
    }
    return out;
}

void SubsetProductMap::validate() const
{
    if (order < 1 || order > length)
        throw std::invalid_argument("product map order must lie in 1..length");
    const auto tuples = index_tuples(length, order);
    if (entries.size() != tuples.size())
        throw std::invalid_argument("product map needs exactly C(" + std::to_string(length) + "," +
                                    std::to_string(order) + ") = " + std::to_string(tuples.size()) +
                                    " entries, got " + std::to_string(entries.size()));
    for (const auto& t : tuples) {
        auto it = entries.find(t);
        if (it == entries.end())
            throw std::invalid_argument("product map is missing an index tuple");
        if (it->second < 1)
            throw std::invalid_argument("product values must be positive");
    }
}

namespace {

void check_order(const Partition& lambda, std::size_t j)
{
    if (j < 1 || j > lambda.length())
        throw std::invalid_argument("j = " + std::to_string(j) + " outside 1.." + std::to_string(lambda.length()));
}

BigInt tuple_product(const Partition& lambda, const IndexTuple& t)
{
    BigInt p = 1;
    for (auto i : t)
        p *= lambda[i - 1];
    return p;
}

} // namespace

Partition pre_j(const Partition& lambda, std::size_t j)
{
    check_order(lambda, j);
    std::vector<BigInt> parts;
    for (const auto& t : index_tuples(lambda.length(), j))
        parts.push_back(tuple_product(lambda, t));
    return Partition::from_unsorted(std::move(parts));
}

SubsetProductMap positional_products(const Partition& lambda, std::size_t j)
{
    check_order(lambda, j);
    SubsetProductMap m{lambda.length(), j, {}};
    for (const auto& t : index_tuples(lambda.length(), j))
        m.entries.emplace(t, tuple_product(lambda, t));
    return m;
}

} // namespace dpart
