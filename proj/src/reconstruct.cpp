#include "dpart/reconstruct.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>

namespace dpart {

// IntMatrix -------------------------------------------------------------------

IntMatrix::IntMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), entries_(rows * cols)
{
}

IntMatrix IntMatrix::identity(std::size_t n)
{
    IntMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i)
        m(i, i) = 1;
    return m;
}

IntMatrix IntMatrix::from_rows(const std::vector<std::vector<long>>& rows)
{
    const std::size_t cols = rows.empty() ? 0 : rows.front().size();
    IntMatrix m(rows.size(), cols);
    for (std::size_t r = 0; r < rows.size(); ++r) {
        if (rows[r].size() != cols)
            throw std::invalid_argument("IntMatrix::from_rows: ragged rows");
        for (std::size_t c = 0; c < cols; ++c)
            m(r, c) = rows[r][c];
    }
    return m;
}

IntMatrix IntMatrix::transposed() const
{
    IntMatrix t(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c)
            t(c, r) = (*this)(r, c);
    return t;
}

std::ostream& operator<<(std::ostream& os, const IntMatrix& m)
{
    for (std::size_t r = 0; r < m.rows(); ++r) {
        os << '[';
        for (std::size_t c = 0; c < m.cols(); ++c)
            os << (c ? " " : "") << m(r, c);
        os << "]\n";
    }
    return os;
}

// C matrix and determinant ----------------------------------------------------

IntMatrix build_c_matrix(std::size_t n, std::size_t j)
{
    if (n < 2 || j < 1 || j > n - 1)
        throw std::invalid_argument("build_c_matrix needs n >= 2 and 1 <= j <= n-1, got n=" + std::to_string(n) +
                                    ", j=" + std::to_string(j));
    IntMatrix c(n, n);
    // rows and columns are 0-based here; e_k is row k-1
    for (std::size_t k = 1; k <= j; ++k)
        c(k - 1, 0) = 1;
    for (std::size_t i = 2; i <= j + 1; ++i) {
        for (std::size_t k = 1; k <= j + 1; ++k)
            c(k - 1, i - 1) = 1;
        c(i - 2, i - 1) -= 1;
    }
    for (std::size_t i = j + 2; i <= n; ++i)
        for (std::size_t k = i - j + 1; k <= i; ++k)
            c(k - 1, i - 1) = 1;
    return c;
}

BigInt det_exact(const IntMatrix& m)
{
    if (m.rows() != m.cols())
        throw std::invalid_argument("det_exact needs a square matrix");
    const std::size_t n = m.rows();
    if (n == 0)
        return 1;
    IntMatrix a = m;
    BigInt prev = 1;
    int sign = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (a(k, k) == 0) {
            std::size_t p = k + 1;
            while (p < n && a(p, k) == 0)
                ++p;
            if (p == n)
                return 0;
            for (std::size_t c = 0; c < n; ++c)
                std::swap(a(k, c), a(p, c));
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t c = k + 1; c < n; ++c) {
                BigInt v = a(i, c) * a(k, k) - a(i, k) * a(k, c);
                mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), prev.get_mpz_t());
                a(i, c) = std::move(v);
            }
            a(i, k) = 0;
        }
        prev = a(k, k);
    }
    return sign * a(n - 1, n - 1);
}

bool DetCheckReport::all_pass() const
{
    return std::all_of(rows.begin(), rows.end(), [](const auto& r) { return r.pass; });
}

DetCheckReport circulant_det_check(std::size_t n_max)
{
    if (n_max < 2)
        throw std::invalid_argument("circulant_det_check needs n_max >= 2");
    DetCheckReport report;
    for (std::size_t n = 2; n <= n_max; ++n)
        for (std::size_t j = 1; j < n; ++j) {
            BigInt det = det_exact(build_c_matrix(n, j));
            const bool pass = det == static_cast<unsigned long>(j);
            report.rows.push_back({n, j, std::move(det), pass});
        }
    return report;
}

// Reconstruction --------------------------------------------------------------

std::vector<IndexTuple> subsystem_tuples(std::size_t ell, std::size_t j)
{
    if (ell < 2 || j < 1 || j > ell - 1)
        throw std::invalid_argument("subsystem needs 1 <= j <= ell-1");
    std::vector<IndexTuple> rows;
    IndexTuple first(j);
    std::iota(first.begin(), first.end(), std::size_t{1});
    rows.push_back(first);
    for (std::size_t i = 2; i <= j + 1; ++i) {
        IndexTuple t;
        for (std::size_t k = 1; k <= j + 1; ++k)
            if (k != i - 1)
                t.push_back(k);
        rows.push_back(std::move(t));
    }
    for (std::size_t i = j + 2; i <= ell; ++i) {
        IndexTuple t;
        for (std::size_t k = i - j + 1; k <= i; ++k)
            t.push_back(k);
        rows.push_back(std::move(t));
    }
    return rows;
}

IntMatrix subsystem_matrix(std::size_t ell, std::size_t j)
{
    const auto tuples = subsystem_tuples(ell, j);
    IntMatrix a(ell, ell);
    for (std::size_t r = 0; r < ell; ++r)
        for (auto idx : tuples[r])
            a(r, idx - 1) = 1;
    return a;
}

namespace {

// Solves a x = b over the rationals for a nonsingular square a.
std::vector<BigRational> solve_exact(const IntMatrix& a, std::vector<BigRational> b)
{
    const std::size_t n = a.rows();
    std::vector<std::vector<BigRational>> m(n, std::vector<BigRational>(n));
    for (std::size_t r = 0; r < n; ++r)
        for (std::size_t c = 0; c < n; ++c)
            m[r][c] = a(r, c);

    for (std::size_t k = 0; k < n; ++k) {
        std::size_t p = k;
        while (p < n && m[p][k] == 0)
            ++p;
        if (p == n)
            throw std::logic_error("subsystem matrix is singular");
        std::swap(m[k], m[p]);
        std::swap(b[k], b[p]);
        for (std::size_t i = 0; i < n; ++i) {
            if (i == k || m[i][k] == 0)
                continue;
            const BigRational f = m[i][k] / m[k][k];
            for (std::size_t c = k; c < n; ++c)
                m[i][c] -= f * m[k][c];
            b[i] -= f * b[k];
        }
    }
    std::vector<BigRational> x(n);
    for (std::size_t i = 0; i < n; ++i)
        x[i] = b[i] / m[i][i];
    return x;
}

} // namespace

DAryPartition reconstruct_exponents(const SubsetProductMap& products, std::uint64_t d)
{
    products.validate();
    const std::size_t ell = products.length;
    const std::size_t j = products.order;
    if (j > ell - 1)
        throw std::invalid_argument("reconstruction needs 1 <= j <= ell-1");

    std::map<IndexTuple, std::uint64_t> logs;
    for (const auto& [tuple, value] : products.entries)
        logs.emplace(tuple, exact_log(value, d));

    const auto rows = subsystem_tuples(ell, j);
    std::vector<BigRational> rhs;
    for (const auto& t : rows)
        rhs.emplace_back(static_cast<unsigned long>(logs.at(t)));
    const auto x = solve_exact(subsystem_matrix(ell, j), std::move(rhs));

    std::vector<std::uint64_t> exps;
    for (std::size_t i = 0; i < ell; ++i) {
        if (!is_integer(x[i]) || x[i] < 0)
            throw InconsistentData("solved exponent c_" + std::to_string(i + 1) + " = " + to_string(x[i]) +
                                   " is not a non-negative integer");
        if (i > 0 && x[i] > x[i - 1])
            throw InconsistentData("solved exponents are not non-increasing");
        exps.push_back(x[i].get_num().get_ui());
    }
    for (const auto& [tuple, e] : logs) {
        std::uint64_t sum = 0;
        for (auto i : tuple)
            sum += exps[i - 1];
        if (sum != e)
            throw InconsistentData("solved exponents violate a product equation");
    }
    return DAryPartition(d, std::move(exps));
}

std::vector<DAryPartition> enumerate_dary_fixed_length(std::uint64_t d, std::size_t ell, std::uint64_t max_exp)
{
    std::vector<DAryPartition> out;
    std::vector<std::uint64_t> c(ell);
    // non-increasing sequences, built lexicographically
    auto rec = [&](auto&& self, std::size_t pos, std::uint64_t cap) -> void {
        if (pos == ell) {
            out.emplace_back(d, c);
            return;
        }
        for (std::uint64_t v = 0; v <= cap; ++v) {
            c[pos] = v;
            self(self, pos + 1, v);
        }
    };
    rec(rec, 0, max_exp);
    return out;
}

UniquenessReport verify_uniqueness(std::uint64_t d, std::size_t ell, std::uint64_t max_exp, std::size_t j)
{
    if (ell < 2 || j < 1 || j > ell - 1)
        throw std::invalid_argument("verify_uniqueness needs ell >= 2 and 1 <= j <= ell-1");
    UniquenessReport report;
    report.d = d;
    report.ell = ell;
    report.max_exp = max_exp;
    report.j = j;
    const auto all = enumerate_dary_fixed_length(d, ell, max_exp);
    report.partitions_checked = all.size();

    std::vector<SubsetProductMap> positional;
    std::vector<Partition> multiset;
    for (const auto& mu : all) {
        const Partition parts = mu.parts();
        positional.push_back(positional_products(parts, j));
        multiset.push_back(pre_j(parts, j));
    }

    for (std::size_t a = 0; a < all.size(); ++a)
        for (std::size_t b = a + 1; b < all.size(); ++b) {
            ++report.pairs_checked;
            const bool same_positions = positional[a] == positional[b];
            if (same_positions && !(all[a] == all[b]))
                report.violations.emplace_back(all[a], all[b]);
            else if (!same_positions && multiset[a] == multiset[b])
                report.multiset_collisions.emplace_back(all[a], all[b]);
        }
    return report;
}

} // namespace dpart
