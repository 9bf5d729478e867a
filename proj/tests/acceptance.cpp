// Acceptance suite. One line per criterion; exit status is non-zero when any
// criterion fails. All comparisons are exact, so the only tolerances are the
// wall-clock limits below.

#include <chrono>
#include <cstdio>
#include <functional>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "dpart/cli.hpp"
#include "dpart/dary.hpp"
#include "dpart/exact.hpp"
#include "dpart/partition.hpp"
#include "dpart/quasipoly.hpp"
#include "dpart/reconstruct.hpp"
#include "dpart/waves.hpp"

using namespace dpart;

namespace {

struct Verdict {
    bool pass = true;
    std::string detail;
};

struct Criterion {
    int id;
    std::string name;
    std::optional<double> limit_seconds; // per criterion unless noted in the body
    std::function<Verdict()> check;
};

void fail(Verdict& v, const std::string& why)
{
    if (v.pass)
        v.detail = why;
    v.pass = false;
}

std::vector<std::vector<std::uint64_t>> subsets_of_1_to_9(std::size_t max_r)
{
    std::vector<std::vector<std::uint64_t>> out;
    for (unsigned mask = 1; mask < (1u << 9); ++mask) {
        std::vector<std::uint64_t> parts;
        for (unsigned b = 0; b < 9; ++b)
            if (mask & (1u << b))
                parts.push_back(b + 1);
        if (parts.size() <= max_r)
            out.push_back(parts);
    }
    return out;
}

// Runs the CLI with JSON output and parses the record.
cli::Json cli_json(std::vector<std::string> args)
{
    args.insert(args.begin(), {"--format", "json"});
    std::ostringstream out;
    std::ostringstream err;
    if (cli::run(args, out, err) != cli::kExitOk)
        throw std::runtime_error("cli failed: " + err.str());
    return cli::Json::parse(out.str());
}

double seconds_since(std::chrono::steady_clock::time_point t0)
{
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

Verdict golden_values()
{
    Verdict v;
    constexpr double kEach = 1.0;
    auto timed = [&](const std::string& label, auto&& body) {
        const auto t0 = std::chrono::steady_clock::now();
        const bool ok = body();
        const double s = seconds_since(t0);
        if (!ok)
            fail(v, label + " wrong");
        else if (s >= kEach)
            fail(v, label + " took " + std::to_string(s) + " s");
    };
    timed("dary-count 3 8", [] {
        return count_dary(3, 8) == 3 && cli_json({"dary-count", "--d", "3", "--n", "8"})["result"] == 3;
    });
    timed("dary-count 3 20", [] {
        return count_dary(3, 20) == 12 && cli_json({"dary-count", "--d", "3", "--n", "20"})["result"] == 12;
    });
    timed("poly-part 3 1 at 8", [] {
        const auto rec = cli_json({"poly-part", "--d", "3", "--k", "1", "--at", "8"});
        return poly_part_d_average(3, 1)(BigRational(8)) == make_rational(10, 3) &&
               poly_part_d_bernoulli(3, 1)(BigRational(8)) == make_rational(10, 3) &&
               rec["metadata"]["value_at"] == "10/3";
    });
    if (v.pass)
        v.detail = "3 values, each < 1 s";
    return v;
}

Verdict formula_vs_dp()
{
    Verdict v;
    std::size_t cases = 0;
    for (const auto& parts : subsets_of_1_to_9(3)) {
        const PartsList a(parts);
        const auto table = denumerant_table(a, 100);
        for (std::uint64_t n = 0; n <= 100; ++n, ++cases)
            if (denumerant_formula(a, n) != BigRational(table[n]))
                fail(v, "mismatch at parts " + to_string(a) + ", n = " + std::to_string(n));
    }
    if (v.pass)
        v.detail = std::to_string(cases) + " cases";
    return v;
}

Verdict dual_route_polynomial_part()
{
    Verdict v;
    std::size_t lists = 0;
    for (const auto& parts : subsets_of_1_to_9(4)) {
        const PartsList a(parts);
        ++lists;
        if (polynomial_part_average(a).coeffs() != polynomial_part_bernoulli(a).coeffs())
            fail(v, "routes differ for parts " + to_string(a));
    }
    std::size_t dary = 0;
    for (std::uint64_t d : {2, 3, 5})
        for (unsigned k = 0; k <= 3; ++k) {
            ++dary;
            if (poly_part_d_average(d, k).coeffs() != poly_part_d_bernoulli(d, k).coeffs())
                fail(v, "d-ary routes differ for d = " + std::to_string(d) + ", k = " + std::to_string(k));
        }
    if (v.pass)
        v.detail = std::to_string(lists) + " parts lists, " + std::to_string(dary) + " (d, k) pairs";
    return v;
}

Verdict wave_decomposition()
{
    Verdict v;
    std::size_t rows = 0;
    for (const auto& parts : {std::vector<std::uint64_t>{1, 3}, {1, 2, 4}, {1, 3, 9}}) {
        const PartsList a(parts);
        const auto report = wave_decomposition_check(a, 60, kValidatedWaveVariant);
        const auto poly = polynomial_part_average(a);
        for (const auto& row : report.rows) {
            ++rows;
            if (!row.pass)
                fail(v, "sum != p_a(n) for " + to_string(a) + " at n = " + std::to_string(row.n));
            const BigRational p_at = poly(BigRational(static_cast<unsigned long>(row.n)));
            if (row.waves.empty() || row.waves.front().j != 1 || row.waves.front().value != p_at)
                fail(v, "W_1 != P for " + to_string(a) + " at n = " + std::to_string(row.n));
        }
    }
    if (v.pass)
        v.detail = std::to_string(rows) + " rows, variant " + to_string(kValidatedWaveVariant);
    return v;
}

Verdict determinant()
{
    Verdict v;
    const auto c63 = IntMatrix::from_rows({{1, 0, 1, 1, 0, 0},
                                           {1, 1, 0, 1, 0, 0},
                                           {1, 1, 1, 0, 1, 0},
                                           {0, 1, 1, 1, 1, 1},
                                           {0, 0, 0, 0, 1, 1},
                                           {0, 0, 0, 0, 0, 1}});
    if (!(build_c_matrix(6, 3) == c63))
        fail(v, "C(6,3) differs from the printed matrix");
    if (det_exact(c63) != 3)
        fail(v, "det of the printed matrix is not 3");
    const auto report = circulant_det_check(10);
    for (const auto& row : report.rows)
        if (!row.pass)
            fail(v, "det C(" + std::to_string(row.n) + "," + std::to_string(row.j) + ") = " + to_string(row.det));
    if (v.pass)
        v.detail = std::to_string(report.rows.size()) + " (n, j) pairs";
    return v;
}

Verdict round_trip_and_uniqueness()
{
    Verdict v;
    std::size_t trips = 0;
    std::size_t sweeps = 0;
    std::size_t collisions = 0;
    for (std::uint64_t d : {2, 3})
        for (std::size_t ell = 2; ell <= 5; ++ell) {
            const auto family = enumerate_dary_fixed_length(d, ell, 3);
            for (std::size_t j = 1; j < ell; ++j) {
                for (const auto& mu : family) {
                    ++trips;
                    if (!(reconstruct_exponents(positional_products(mu.parts(), j), d) == mu))
                        fail(v, "round trip failed");
                }
                const auto report = verify_uniqueness(d, ell, 3, j);
                ++sweeps;
                collisions += report.multiset_collisions.size();
                if (!report.pass())
                    fail(v, "uniqueness violation at d = " + std::to_string(d) + ", ell = " + std::to_string(ell) +
                                ", j = " + std::to_string(j));
            }
        }
    if (v.pass)
        v.detail = std::to_string(trips) + " round trips, " + std::to_string(sweeps) + " sweeps, " +
                   std::to_string(collisions) + " multiset-only collisions (informational)";
    return v;
}

Verdict bijection()
{
    Verdict v;
    std::mt19937_64 rng(20261016);
    std::uniform_int_distribution<std::size_t> len(0, 12);
    std::uniform_int_distribution<long> part(1, 20);
    for (int trial = 0; trial < 1000; ++trial) {
        std::vector<BigInt> parts(len(rng));
        for (auto& p : parts)
            p = part(rng);
        const Partition lambda = Partition::from_unsorted(std::move(parts));
        for (std::uint64_t d : {2, 3, 10})
            if (!(log_d(exp_d(lambda, d)) == lambda))
                fail(v, "log_d(exp_d(" + to_string(lambda) + ")) differs for d = " + std::to_string(d));
    }
    if (v.pass)
        v.detail = "1000 partitions x 3 bases";
    return v;
}

Verdict k_stability()
{
    Verdict v;
    std::size_t cases = 0;
    for (std::uint64_t d : {2, 3})
        for (std::uint64_t n = 1; n <= 80; ++n, ++cases) {
            const unsigned k = floor_log(d, n);
            if (count_dary(d, n, k) != count_dary(d, n, k + 1))
                fail(v, "d = " + std::to_string(d) + ", n = " + std::to_string(n));
        }
    if (v.pass)
        v.detail = std::to_string(cases) + " cases";
    return v;
}

} // namespace

int main()
{
    const std::vector<Criterion> criteria{
        {1, "golden d-ary values", 3.0, golden_values},
        {2, "closed formula equals the recurrence", 60.0, formula_vs_dp},
        {3, "polynomial part by two routes", std::nullopt, dual_route_polynomial_part},
        {4, "wave decomposition", std::nullopt, wave_decomposition},
        {5, "determinant of C equals j", 1.0, determinant},
        {6, "reconstruction round trip and uniqueness", 120.0, round_trip_and_uniqueness},
        {7, "exp_d/log_d bijection", std::nullopt, bijection},
        {8, "k-stability of the d-ary count", std::nullopt, k_stability},
    };

    int failures = 0;
    for (const auto& c : criteria) {
        Verdict v;
        const auto t0 = std::chrono::steady_clock::now();
        try {
            v = c.check();
        } catch (const std::exception& e) {
            fail(v, std::string("exception: ") + e.what());
        }
        const double s = seconds_since(t0);
        if (v.pass && c.limit_seconds && s >= *c.limit_seconds)
            fail(v, "time limit exceeded");
        const std::string limit = c.limit_seconds ? "< " + std::to_string(*c.limit_seconds).substr(0, 5) + " s" : "none";
        std::printf("%s  [%d] %s  (%.3f s, limit %s, exact)  %s\n", v.pass ? "PASS" : "FAIL", c.id, c.name.c_str(), s,
                    limit.c_str(), v.detail.c_str());
        failures += v.pass ? 0 : 1;
    }
    std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failures, criteria.size());
    return failures == 0 ? 0 : 1;
}
