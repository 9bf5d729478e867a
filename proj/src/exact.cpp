#include "dpart/exact.hpp"

#include <map>
#include <mutex>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace dpart {

BigRational make_rational(const BigInt& num, const BigInt& den)
{
    if (den == 0)
        throw std::domain_error("rational with zero denominator");
    BigRational q(num, den);
    q.canonicalize();
    return q;
}

BigRational parse_rational(const std::string& text)
{
    BigRational q;
    if (text.empty() || q.set_str(text, 10) != 0)
        throw std::invalid_argument("not a rational number: '" + text + "'");
    if (q.get_den() == 0)
        throw std::invalid_argument("zero denominator: '" + text + "'");
    q.canonicalize();
    return q;
}

std::string to_string(const BigRational& value)
{
    return value.get_str(10);
}

std::string to_string(const BigInt& value)
{
    return value.get_str(10);
}

bool is_integer(const BigRational& value)
{
    return value.get_den() == 1;
}

BigInt factorial(unsigned n)
{
    BigInt f;
    mpz_fac_ui(f.get_mpz_t(), n);
    return f;
}

BigInt binomial(unsigned n, unsigned k)
{
    BigInt b;
    mpz_bin_uiui(b.get_mpz_t(), n, k);
    return b;
}

BigInt pow(const BigInt& base, unsigned long exponent)
{
    BigInt p;
    mpz_pow_ui(p.get_mpz_t(), base.get_mpz_t(), exponent);
    return p;
}

// RationalPolynomial ----------------------------------------------------------

RationalPolynomial::RationalPolynomial(std::vector<BigRational> coeffs)
    : coeffs_(std::move(coeffs))
{
    trim();
}

RationalPolynomial::RationalPolynomial(std::initializer_list<BigRational> coeffs)
    : coeffs_(coeffs)
{
    trim();
}

RationalPolynomial RationalPolynomial::constant(const BigRational& c)
{
    return RationalPolynomial({c});
}

RationalPolynomial RationalPolynomial::linear(const BigRational& slope, const BigRational& intercept)
{
    return RationalPolynomial({intercept, slope});
}

BigRational RationalPolynomial::coeff(std::size_t power) const
{
    return power < coeffs_.size() ? coeffs_[power] : BigRational(0);
}

BigRational RationalPolynomial::leading() const
{
    return coeffs_.empty() ? BigRational(0) : coeffs_.back();
}

BigRational RationalPolynomial::operator()(const BigRational& x) const
{
    BigRational acc = 0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it)
        acc = acc * x + *it;
    return acc;
}

RationalPolynomial& RationalPolynomial::operator+=(const RationalPolynomial& other)
{
    if (other.coeffs_.size() > coeffs_.size())
        coeffs_.resize(other.coeffs_.size());
    for (std::size_t i = 0; i < other.coeffs_.size(); ++i)
        coeffs_[i] += other.coeffs_[i];
    trim();
    return *this;
}

RationalPolynomial& RationalPolynomial::operator-=(const RationalPolynomial& other)
{
    if (other.coeffs_.size() > coeffs_.size())
        coeffs_.resize(other.coeffs_.size());
    for (std::size_t i = 0; i < other.coeffs_.size(); ++i)
        coeffs_[i] -= other.coeffs_[i];
    trim();
    return *this;
}

RationalPolynomial& RationalPolynomial::operator*=(const BigRational& scalar)
{
    for (auto& c : coeffs_)
        c *= scalar;
    trim();
    return *this;
}

RationalPolynomial operator*(const RationalPolynomial& lhs, const RationalPolynomial& rhs)
{
    if (lhs.is_zero() || rhs.is_zero())
        return {};
    std::vector<BigRational> out(lhs.coeffs_.size() + rhs.coeffs_.size() - 1);
    for (std::size_t i = 0; i < lhs.coeffs_.size(); ++i)
        for (std::size_t k = 0; k < rhs.coeffs_.size(); ++k)
            out[i + k] += lhs.coeffs_[i] * rhs.coeffs_[k];
    return RationalPolynomial(std::move(out));
}

void RationalPolynomial::trim()
{
    while (!coeffs_.empty() && coeffs_.back() == 0)
        coeffs_.pop_back();
}

std::ostream& operator<<(std::ostream& os, const RationalPolynomial& p)
{
    os << '[';
    for (std::size_t i = 0; i < p.coeffs().size(); ++i)
        os << (i ? ", " : "") << to_string(p.coeffs()[i]);
    return os << ']';
}

RationalPolynomial interpolate(std::span<const std::pair<BigRational, BigRational>> points)
{
    RationalPolynomial result;
    for (std::size_t i = 0; i < points.size(); ++i) {
        RationalPolynomial basis = RationalPolynomial::constant(1);
        BigRational denom = 1;
        for (std::size_t k = 0; k < points.size(); ++k) {
            if (k == i)
                continue;
            if (points[i].first == points[k].first)
                throw std::invalid_argument("interpolate: repeated abscissa");
            basis = basis * RationalPolynomial::linear(1, -points[k].first);
            denom *= points[i].first - points[k].first;
        }
        result += basis * BigRational(points[i].second / denom);
    }
    return result;
}

// Cyclotomic polynomials ------------------------------------------------------

namespace {

using IntPoly = std::vector<BigInt>;

// Exact division of integer polynomials by a monic divisor.
IntPoly divide_monic(IntPoly num, const IntPoly& den)
{
    const std::size_t dn = den.size() - 1;
    IntPoly quot(num.size() - dn);
    for (std::size_t i = num.size(); i-- > dn;) {
        const BigInt c = num[i];
        quot[i - dn] = c;
        if (c != 0)
            for (std::size_t k = 0; k <= dn; ++k)
                num[i - dn + k] -= c * den[k];
    }
    return quot;
}

std::mutex cyclo_mutex;
std::map<unsigned, IntPoly> cyclo_cache;

const IntPoly& cyclotomic_locked(unsigned j)
{
    if (auto it = cyclo_cache.find(j); it != cyclo_cache.end())
        return it->second;
    // x^j - 1 = prod_{d | j} Phi_d(x)
    IntPoly poly(j + 1);
    poly[0] = -1;
    poly[j] = 1;
    for (unsigned d = 1; d < j; ++d)
        if (j % d == 0)
            poly = divide_monic(std::move(poly), cyclotomic_locked(d));
    return cyclo_cache.emplace(j, std::move(poly)).first->second;
}

// Remainder of coeffs modulo the monic integer polynomial mod, trimmed.
std::vector<BigRational> reduce_mod(std::vector<BigRational> coeffs, const IntPoly& mod)
{
    const std::size_t dm = mod.size() - 1;
    for (std::size_t i = coeffs.size(); i-- > dm;) {
        const BigRational c = coeffs[i];
        if (c == 0)
            continue;
        for (std::size_t k = 0; k <= dm; ++k)
            coeffs[i - dm + k] -= c * mod[k];
    }
    if (coeffs.size() > dm)
        coeffs.resize(dm);
    while (!coeffs.empty() && coeffs.back() == 0)
        coeffs.pop_back();
    return coeffs;
}

} // namespace

const std::vector<BigInt>& cyclotomic_polynomial(unsigned j)
{
    if (j == 0)
        throw std::invalid_argument("cyclotomic_polynomial: order must be positive");
    std::lock_guard lock(cyclo_mutex);
    return cyclotomic_locked(j);
}

unsigned euler_phi(unsigned j)
{
    unsigned result = j;
    for (unsigned p = 2; p * p <= j; ++p) {
        if (j % p == 0) {
            while (j % p == 0)
                j /= p;
            result -= result / p;
        }
    }
    if (j > 1)
        result -= result / j;
    return result;
}

// CyclotomicNumber ------------------------------------------------------------

CyclotomicNumber::CyclotomicNumber()
    : CyclotomicNumber(1, BigRational(0))
{
}

CyclotomicNumber::CyclotomicNumber(unsigned order, const BigRational& r)
    : order_(order), coeffs_(order)
{
    if (order == 0)
        throw std::invalid_argument("CyclotomicNumber: order must be positive");
    coeffs_[0] = r;
}

CyclotomicNumber::CyclotomicNumber(unsigned order, std::vector<BigRational> coeffs)
    : order_(order), coeffs_(std::move(coeffs))
{
    if (order == 0)
        throw std::invalid_argument("CyclotomicNumber: order must be positive");
    if (coeffs_.size() != order)
        throw std::invalid_argument("CyclotomicNumber: coefficient count must equal the order");
}

CyclotomicNumber CyclotomicNumber::lifted(unsigned m) const
{
    if (m == order_)
        return *this;
    if (m == 0 || m % order_ != 0)
        throw std::invalid_argument("CyclotomicNumber::lifted: target order must be a multiple");
    const unsigned step = m / order_;
    std::vector<BigRational> out(m);
    for (unsigned l = 0; l < order_; ++l)
        out[l * step] = coeffs_[l];
    return CyclotomicNumber(m, std::move(out));
}

std::vector<BigRational> CyclotomicNumber::canonical() const
{
    return reduce_mod(coeffs_, cyclotomic_polynomial(order_));
}

bool CyclotomicNumber::is_rational() const
{
    return canonical().size() <= 1;
}

bool CyclotomicNumber::is_zero() const
{
    return canonical().empty();
}

namespace {

unsigned common_order(unsigned a, unsigned b)
{
    return std::lcm(a, b);
}

} // namespace

CyclotomicNumber& CyclotomicNumber::operator+=(const CyclotomicNumber& other)
{
    const unsigned m = common_order(order_, other.order_);
    if (m != order_)
        *this = lifted(m);
    const CyclotomicNumber rhs = other.lifted(m);
    for (unsigned l = 0; l < m; ++l)
        coeffs_[l] += rhs.coeffs_[l];
    return *this;
}

CyclotomicNumber& CyclotomicNumber::operator-=(const CyclotomicNumber& other)
{
    const unsigned m = common_order(order_, other.order_);
    if (m != order_)
        *this = lifted(m);
    const CyclotomicNumber rhs = other.lifted(m);
    for (unsigned l = 0; l < m; ++l)
        coeffs_[l] -= rhs.coeffs_[l];
    return *this;
}

CyclotomicNumber& CyclotomicNumber::operator*=(const CyclotomicNumber& other)
{
    const unsigned m = common_order(order_, other.order_);
    const CyclotomicNumber lhs = lifted(m);
    const CyclotomicNumber rhs = other.lifted(m);
    std::vector<BigRational> out(m);
    for (unsigned a = 0; a < m; ++a) {
        if (lhs.coeffs_[a] == 0)
            continue;
        for (unsigned b = 0; b < m; ++b)
            if (rhs.coeffs_[b] != 0)
                out[(a + b) % m] += lhs.coeffs_[a] * rhs.coeffs_[b];
    }
    order_ = m;
    coeffs_ = std::move(out);
    return *this;
}

CyclotomicNumber& CyclotomicNumber::operator*=(const BigRational& scalar)
{
    for (auto& c : coeffs_)
        c *= scalar;
    return *this;
}

bool operator==(const CyclotomicNumber& a, const CyclotomicNumber& b)
{
    return (a - b).is_zero();
}

CyclotomicNumber CyclotomicNumber::pow(unsigned long e) const
{
    CyclotomicNumber result(order_, BigRational(1));
    CyclotomicNumber base = *this;
    while (e > 0) {
        if (e & 1)
            result *= base;
        e >>= 1;
        if (e)
            base *= base;
    }
    return result;
}

std::ostream& operator<<(std::ostream& os, const CyclotomicNumber& x)
{
    const auto c = x.canonical();
    if (c.empty())
        return os << '0';
    bool first = true;
    for (std::size_t l = 0; l < c.size(); ++l) {
        if (c[l] == 0)
            continue;
        if (!first)
            os << " + ";
        first = false;
        os << '(' << to_string(c[l]) << ')';
        if (l > 0)
            os << "*r" << x.order() << '^' << l;
    }
    return os;
}

CyclotomicNumber root_of_unity(unsigned j, long long e)
{
    if (j == 0)
        throw std::invalid_argument("root_of_unity: order must be positive");
    const long long m = static_cast<long long>(j);
    const auto idx = static_cast<std::size_t>(((e % m) + m) % m);
    std::vector<BigRational> coeffs(j);
    coeffs[idx] = 1;
    return CyclotomicNumber(j, std::move(coeffs));
}

BigRational to_rational(const CyclotomicNumber& x)
{
    const auto c = x.canonical();
    if (c.size() > 1) {
        std::ostringstream msg;
        msg << "cyclotomic value of order " << x.order() << " is not rational: " << x;
        throw NotRational(msg.str());
    }
    return c.empty() ? BigRational(0) : c[0];
}

// Special numbers -------------------------------------------------------------

namespace {

std::mutex bernoulli_mutex;
std::vector<BigRational> bernoulli_cache{BigRational(1)};

std::mutex stirling_mutex;
// stirling_rows[r-1] holds the coefficients of (n+1)...(n+r-1), low power first.
std::vector<std::vector<BigInt>> stirling_rows{{BigInt(1)}};

} // namespace

BigRational bernoulli(unsigned m)
{
    std::lock_guard lock(bernoulli_mutex);
    // sum_{k=0}^{m} C(m+1, k) B_k = 0  for m >= 1
    while (bernoulli_cache.size() <= m) {
        const auto next = static_cast<unsigned>(bernoulli_cache.size());
        BigRational acc = 0;
        for (unsigned k = 0; k < next; ++k)
            acc += BigRational(binomial(next + 1, k)) * bernoulli_cache[k];
        BigRational b = -acc / BigRational(next + 1);
        b.canonicalize();
        bernoulli_cache.push_back(b);
    }
    return bernoulli_cache[m];
}

BigInt stirling_unsigned(unsigned r, unsigned k)
{
    if (r < 1 || k < 1 || k > r)
        throw std::invalid_argument("stirling_unsigned: need 1 <= k <= r, got r=" + std::to_string(r) +
                                    ", k=" + std::to_string(k));
    std::lock_guard lock(stirling_mutex);
    while (stirling_rows.size() < r) {
        // multiply the previous row by (n + m), m = number of rows so far
        const auto& prev = stirling_rows.back();
        const BigInt m = static_cast<unsigned long>(stirling_rows.size());
        std::vector<BigInt> row(prev.size() + 1);
        for (std::size_t i = 0; i < prev.size(); ++i) {
            row[i] += m * prev[i];
            row[i + 1] += prev[i];
        }
        stirling_rows.push_back(std::move(row));
    }
    return stirling_rows[r - 1][k - 1];
}

void for_each_composition(unsigned total, std::size_t parts,
                          const std::function<void(const std::vector<unsigned>&)>& visit)
{
    if (parts == 0)
        return;
    std::vector<unsigned> idx(parts);
    std::function<void(std::size_t, unsigned)> rec = [&](std::size_t pos, unsigned left) {
        if (pos + 1 == parts) {
            idx[pos] = left;
            visit(idx);
            return;
        }
        for (unsigned v = 0; v <= left; ++v) {
            idx[pos] = v;
            rec(pos + 1, left - v);
        }
    };
    rec(0, total);
}

} // namespace dpart
