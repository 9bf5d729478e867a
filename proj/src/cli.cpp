#include "dpart/cli.hpp"

#include <limits>
#include <sstream>
#include <stdexcept>

#include <CLI11.hpp>

#include "dpart/dary.hpp"
#include "dpart/partition.hpp"
#include "dpart/quasipoly.hpp"
#include "dpart/reconstruct.hpp"
#include "dpart/waves.hpp"

namespace dpart::cli {

namespace {

class UsageError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

std::vector<std::string> split(const std::string& text, char sep)
{
    std::vector<std::string> out;
    std::string cur;
    std::istringstream in(text);
    while (std::getline(in, cur, sep))
        out.push_back(cur);
    if (!text.empty() && text.back() == sep)
        out.emplace_back();
    return out;
}

std::uint64_t parse_uint(const std::string& text)
{
    if (text.empty() || text.find_first_not_of("0123456789") != std::string::npos)
        throw UsageError("expected a non-negative integer, got '" + text + "'");
    try {
        return std::stoull(text);
    } catch (const std::out_of_range&) {
        throw UsageError("integer out of range: '" + text + "'");
    }
}

std::vector<std::uint64_t> parse_uint_list(const std::string& text)
{
    std::vector<std::uint64_t> out;
    for (const auto& item : split(text, ','))
        out.push_back(parse_uint(item));
    if (out.empty())
        throw UsageError("empty list");
    return out;
}

Partition parse_partition(const std::string& text)
{
    std::vector<BigInt> parts;
    for (const auto& item : split(text, ',')) {
        if (item.empty() || item.find_first_not_of("0123456789") != std::string::npos)
            throw UsageError("bad partition part '" + item + "'");
        parts.emplace_back(item);
    }
    try {
        return Partition(std::move(parts));
    } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
    }
}

// "1,2:27;1,3:9;2,3:3"
SubsetProductMap parse_products(const std::string& text)
{
    SubsetProductMap m;
    for (const auto& entry : split(text, ';')) {
        const auto colon = entry.find(':');
        if (colon == std::string::npos)
            throw UsageError("product entry '" + entry + "' lacks ':'");
        IndexTuple tuple;
        for (auto i : parse_uint_list(entry.substr(0, colon))) {
            if (i == 0)
                throw UsageError("positions are 1-based");
            tuple.push_back(i);
        }
        for (std::size_t k = 1; k < tuple.size(); ++k)
            if (tuple[k] <= tuple[k - 1])
                throw UsageError("positions in '" + entry + "' must be strictly increasing");
        const std::string value = entry.substr(colon + 1);
        if (value.empty() || value.find_first_not_of("0123456789") != std::string::npos)
            throw UsageError("bad product value '" + value + "'");
        if (m.order == 0)
            m.order = tuple.size();
        else if (m.order != tuple.size())
            throw UsageError("all product tuples must have the same size");
        m.length = std::max(m.length, tuple.back());
        if (!m.entries.emplace(tuple, BigInt(value)).second)
            throw UsageError("repeated product tuple in '" + entry + "'");
    }
    try {
        m.validate();
    } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
    }
    return m;
}

Json uint_list_json(const std::vector<std::uint64_t>& values)
{
    Json arr = Json::array();
    for (auto v : values)
        arr.push_back(v);
    return arr;
}

Json partition_json(const Partition& p)
{
    Json arr = Json::array();
    for (const auto& part : p.parts())
        arr.push_back(exact_json(part));
    return arr;
}

Json poly_json(const RationalPolynomial& p)
{
    Json arr = Json::array();
    for (const auto& c : p.coeffs())
        arr.push_back(exact_json(c));
    return arr;
}

std::string tuple_string(const IndexTuple& t)
{
    std::string s;
    for (std::size_t i = 0; i < t.size(); ++i)
        s += (i ? "," : "") + std::to_string(t[i]);
    return s;
}

// Text/CSV cell for a JSON value.
std::string cell(const Json& v)
{
    if (v.is_string())
        return v.get<std::string>();
    if (v.is_array()) {
        std::string s;
        for (std::size_t i = 0; i < v.size(); ++i)
            s += (i ? "," : "") + cell(v[i]);
        return s;
    }
    if (v.is_null())
        return "";
    return v.dump();
}

std::string csv_escape(const std::string& s)
{
    if (s.find_first_of(",\"\n") == std::string::npos)
        return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"')
            out += '"';
        out += c;
    }
    return out + "\"";
}

std::string csv_line(const std::vector<std::string>& cells)
{
    std::string line;
    for (std::size_t i = 0; i < cells.size(); ++i)
        line += (i ? "," : "") + csv_escape(cells[i]);
    return line + "\n";
}

} // namespace

Json exact_json(const BigInt& v)
{
    if (v.fits_slong_p())
        return Json(static_cast<std::int64_t>(v.get_si()));
    return Json(v.get_str());
}

Json exact_json(const BigRational& v)
{
    if (is_integer(v))
        return exact_json(v.get_num());
    return Json(to_string(v));
}

std::string render_json(const OutputRecord& rec)
{
    Json j = Json::object();
    j["command"] = rec.command;
    j["inputs"] = rec.inputs;
    j["result"] = rec.result;
    j["metadata"] = rec.metadata;
    if (rec.agreement)
        j["agreement"] = *rec.agreement;
    return j.dump() + "\n";
}

std::string render_csv(const OutputRecord& rec)
{
    std::string out;
    const Json& r = rec.result;
    if (r.is_array() && !r.empty() && r.front().is_object()) {
        std::vector<std::string> header;
        for (const auto& [key, _] : r.front().items())
            header.push_back(key);
        out += csv_line(header);
        for (const auto& row : r) {
            std::vector<std::string> cells;
            for (const auto& key : header)
                cells.push_back(row.contains(key) ? cell(row[key]) : "");
            out += csv_line(cells);
        }
    } else if (r.is_array()) {
        out += csv_line({"index", "value"});
        for (std::size_t i = 0; i < r.size(); ++i)
            out += csv_line({std::to_string(i), cell(r[i])});
    } else {
        std::vector<std::string> header{"result"};
        std::vector<std::string> cells{cell(r)};
        for (const auto& [key, value] : rec.metadata.items())
            if (!value.is_structured()) {
                header.push_back(key);
                cells.push_back(cell(value));
            }
        if (rec.agreement) {
            header.emplace_back("agreement");
            cells.emplace_back(*rec.agreement ? "true" : "false");
        }
        out += csv_line(header) + csv_line(cells);
    }
    return out;
}

std::string render_text(const OutputRecord& rec)
{
    std::ostringstream os;
    os << "command: " << rec.command << "\n";
    for (const auto& [key, value] : rec.inputs.items())
        os << "  " << key << " = " << cell(value) << "\n";
    const Json& r = rec.result;
    if (r.is_array() && !r.empty() && r.front().is_object()) {
        os << "result:\n";
        for (const auto& row : r) {
            os << " ";
            for (const auto& [key, value] : row.items())
                os << " " << key << "=" << cell(value);
            os << "\n";
        }
    } else {
        os << "result: " << cell(r) << "\n";
    }
    for (const auto& [key, value] : rec.metadata.items())
        os << key << ": " << cell(value) << "\n";
    if (rec.agreement)
        os << "agreement: " << (*rec.agreement ? "true" : "false") << "\n";
    return os.str();
}

std::string render(const OutputRecord& rec, Format format)
{
    switch (format) {
    case Format::Json:
        return render_json(rec);
    case Format::Csv:
        return render_csv(rec);
    case Format::Text:
        return render_text(rec);
    }
    return render_text(rec);
}

namespace {

struct Options {
    std::string format = "text";
    std::string variant = to_string(kValidatedWaveVariant);
    std::string parts;
    std::string partition;
    std::string products;
    std::string mode;
    std::string reading = "corrected";
    std::string at;
    std::uint64_t n = 0;
    std::uint64_t d = 0;
    std::uint64_t k = 0;
    std::uint64_t j = 0;
    std::uint64_t ell = 0;
    std::uint64_t max_exp = 0;
    std::uint64_t n_max = 0;
};

OutputRecord cmd_count(const Options& o)
{
    const PartsList a(parse_uint_list(o.parts));
    const BigRational formula = denumerant_formula(a, o.n);
    const BigInt oracle = denumerant_dp(a, o.n);
    OutputRecord rec;
    rec.command = "count";
    rec.inputs["parts"] = uint_list_json(a.parts());
    rec.inputs["n"] = o.n;
    rec.result = exact_json(formula);
    rec.metadata["oracle"] = exact_json(oracle);
    rec.metadata["D"] = a.lcm();
    rec.metadata["r"] = a.r();
    rec.agreement = formula == BigRational(oracle);
    return rec;
}

OutputRecord cmd_dary_count(const Options& o, bool k_given)
{
    if (o.n < 1)
        throw UsageError("dary-count needs --n >= 1");
    const unsigned k = k_given ? static_cast<unsigned>(o.k) : floor_log(o.d, BigInt(static_cast<unsigned long>(o.n)));
    const BigInt value = count_dary(o.d, o.n, k);
    const BigInt oracle = denumerant_dp(dary_parts(o.d, k), o.n);
    OutputRecord rec;
    rec.command = "dary-count";
    rec.inputs["d"] = o.d;
    rec.inputs["n"] = o.n;
    if (k_given)
        rec.inputs["k"] = o.k;
    rec.result = exact_json(value);
    rec.metadata["oracle"] = exact_json(oracle);
    rec.metadata["k"] = k;
    rec.metadata["D"] = exact_json(pow(BigInt(static_cast<unsigned long>(o.d)), k));
    rec.agreement = value == oracle;
    return rec;
}

OutputRecord cmd_poly_part(const Options& o, bool parts_mode)
{
    RationalPolynomial average;
    RationalPolynomial bern;
    OutputRecord rec;
    rec.command = "poly-part";
    if (parts_mode) {
        const PartsList a(parse_uint_list(o.parts));
        average = polynomial_part_average(a);
        bern = polynomial_part_bernoulli(a);
        rec.inputs["parts"] = uint_list_json(a.parts());
        rec.metadata["D"] = a.lcm();
    } else {
        const auto k = static_cast<unsigned>(o.k);
        average = poly_part_d_average(o.d, k);
        bern = poly_part_d_bernoulli(o.d, k);
        rec.inputs["d"] = o.d;
        rec.inputs["k"] = o.k;
    }
    if (!o.at.empty())
        rec.inputs["at"] = o.at;
    rec.result = poly_json(average);
    rec.metadata["bernoulli_route"] = poly_json(bern);
    rec.metadata["degree"] = average.degree();
    if (!o.at.empty())
        rec.metadata["value_at"] = exact_json(average(parse_rational(o.at)));
    rec.agreement = average == bern;
    return rec;
}

OutputRecord cmd_waves(const Options& o, bool parts_mode)
{
    const WaveVariant variant = parse_wave_variant(o.variant);
    OutputRecord rec;
    rec.command = "waves";
    std::vector<std::uint64_t> indices;
    BigInt oracle;
    Json rows = Json::array();
    BigRational sum = 0;
    if (parts_mode) {
        const PartsList a(parse_uint_list(o.parts));
        rec.inputs["parts"] = uint_list_json(a.parts());
        indices = a.divisors();
        for (auto j : indices) {
            const BigRational w = wave(static_cast<unsigned>(j), a, o.n, variant);
            sum += w;
            rows.push_back(Json{{"j", j}, {"value", exact_json(w)}});
        }
        oracle = denumerant_dp(a, o.n);
        rec.metadata["D"] = a.lcm();
    } else {
        if (o.n < 1)
            throw UsageError("waves --d needs --n >= 1");
        const IndexReading reading = parse_index_reading(o.reading);
        rec.inputs["d"] = o.d;
        const unsigned k = floor_log(o.d, BigInt(static_cast<unsigned long>(o.n)));
        indices = dary_wave_indices(o.d, k);
        for (auto j : indices) {
            const BigRational w = wave_d(static_cast<unsigned>(j), o.d, o.n, variant, reading);
            sum += w;
            rows.push_back(Json{{"j", j}, {"value", exact_json(w)}});
        }
        oracle = denumerant_dp(dary_parts(o.d, k), o.n);
        rec.metadata["k"] = k;
        rec.metadata["reading"] = to_string(reading);
    }
    rec.inputs["n"] = o.n;
    rec.result = rows;
    rec.metadata["variant"] = to_string(variant);
    rec.metadata["divisors"] = uint_list_json(indices);
    rec.metadata["sum"] = exact_json(sum);
    rec.metadata["oracle"] = exact_json(oracle);
    rec.agreement = sum == BigRational(oracle);
    return rec;
}

OutputRecord cmd_presym(const Options& o)
{
    const Partition lambda = parse_partition(o.partition);
    if (o.j < 1 || o.j > lambda.length())
        throw UsageError("--j must lie in 1.." + std::to_string(lambda.length()));
    const Partition result = pre_j(lambda, o.j);
    const BigInt e = elementary_symmetric_value(lambda, o.j);
    OutputRecord rec;
    rec.command = "presym";
    rec.inputs["partition"] = partition_json(lambda);
    rec.inputs["j"] = o.j;
    rec.result = partition_json(result);
    rec.metadata["length"] = result.length();
    rec.metadata["size"] = exact_json(result.size());
    rec.metadata["e_j"] = exact_json(e);
    rec.agreement = result.size() == e;
    return rec;
}

OutputRecord cmd_reconstruct(const Options& o)
{
    const SubsetProductMap products = parse_products(o.products);
    if (products.order != o.j)
        throw UsageError("--j does not match the tuple size of --products");
    if (products.order >= products.length)
        throw UsageError("reconstruction needs j <= ell - 1");
    const DAryPartition mu = reconstruct_exponents(products, o.d);
    OutputRecord rec;
    rec.command = "reconstruct";
    rec.inputs["d"] = o.d;
    rec.inputs["j"] = o.j;
    Json prods = Json::object();
    for (const auto& [tuple, value] : products.entries)
        prods[tuple_string(tuple)] = exact_json(value);
    rec.inputs["products"] = prods;
    rec.result = partition_json(mu.parts());
    rec.metadata["exponents"] = uint_list_json(mu.exponents());
    rec.metadata["ell"] = products.length;
    rec.agreement = positional_products(mu.parts(), products.order) == products;
    return rec;
}

OutputRecord cmd_verify(const Options& o)
{
    OutputRecord rec;
    rec.command = "verify";
    rec.inputs["mode"] = o.mode;
    if (o.mode == "circulant") {
        if (o.n_max < 2)
            throw UsageError("verify --mode circulant needs --n-max >= 2");
        const auto report = circulant_det_check(o.n_max);
        rec.inputs["n_max"] = o.n_max;
        Json rows = Json::array();
        for (const auto& row : report.rows)
            rows.push_back(Json{{"n", row.n}, {"j", row.j}, {"det", exact_json(row.det)}, {"pass", row.pass}});
        rec.result = rows;
        rec.metadata["cases"] = report.rows.size();
        rec.agreement = report.all_pass();
    } else if (o.mode == "uniqueness") {
        if (o.ell < 2 || o.j < 1 || o.j >= o.ell)
            throw UsageError("verify --mode uniqueness needs --ell >= 2 and 1 <= --j <= ell-1");
        const auto report = verify_uniqueness(o.d, o.ell, o.max_exp, o.j);
        rec.inputs["d"] = o.d;
        rec.inputs["ell"] = o.ell;
        rec.inputs["max_exp"] = o.max_exp;
        rec.inputs["j"] = o.j;
        Json rows = Json::array();
        for (const auto& [a, b] : report.violations)
            rows.push_back(Json{{"kind", "violation"}, {"lambda", partition_json(a.parts())}, {"mu", partition_json(b.parts())}});
        for (const auto& [a, b] : report.multiset_collisions)
            rows.push_back(Json{{"kind", "multiset-only"}, {"lambda", partition_json(a.parts())}, {"mu", partition_json(b.parts())}});
        rec.result = rows;
        rec.metadata["partitions_checked"] = report.partitions_checked;
        rec.metadata["pairs_checked"] = report.pairs_checked;
        rec.metadata["violations"] = report.violations.size();
        rec.metadata["multiset_collisions"] = report.multiset_collisions.size();
        rec.agreement = report.pass();
    } else if (o.mode == "waves") {
        if (o.parts.empty())
            throw UsageError("verify --mode waves needs --parts");
        const PartsList a(parse_uint_list(o.parts));
        const WaveVariant variant = parse_wave_variant(o.variant);
        const auto report = wave_decomposition_check(a, o.n_max, variant);
        rec.inputs["parts"] = uint_list_json(a.parts());
        rec.inputs["n_max"] = o.n_max;
        Json rows = Json::array();
        for (const auto& row : report.rows) {
            Json r = Json::object();
            r["n"] = row.n;
            for (const auto& w : row.waves)
                r["W_" + std::to_string(w.j)] = w.value ? exact_json(*w.value) : Json(nullptr);
            r["sum"] = row.sum ? exact_json(*row.sum) : Json(nullptr);
            r["oracle"] = exact_json(row.oracle);
            r["pass"] = row.pass;
            if (!row.note.empty())
                r["note"] = row.note;
            rows.push_back(std::move(r));
        }
        rec.result = rows;
        rec.metadata["variant"] = to_string(variant);
        rec.metadata["divisors"] = uint_list_json(report.divisors);
        rec.agreement = report.all_pass();
    } else {
        throw UsageError("--mode must be one of uniqueness, circulant, waves");
    }
    return rec;
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Exact restricted and d-ary partition counts, Sylvester waves and elementary symmetric partitions",
                 "dpart"};
    app.require_subcommand(1);
    app.fallthrough();

    Options o;
    app.add_option("--format", o.format, "Output format")->check(CLI::IsMember({"text", "json", "csv"}));
    app.add_option("--variant", o.variant, "Wave formula variant")
        ->check(CLI::IsMember({"literal", "twisted", "sylvester"}));

    auto* count = app.add_subcommand("count", "Denumerant p_a(n): closed formula and DP oracle");
    count->add_option("--parts", o.parts, "Allowed parts, comma separated")->required();
    count->add_option("--n", o.n)->required();

    auto* dary_count = app.add_subcommand("dary-count", "Number of d-ary partitions of n");
    dary_count->add_option("--d", o.d)->required()->check(CLI::Range(std::uint64_t{2}, std::numeric_limits<std::uint64_t>::max()));
    dary_count->add_option("--n", o.n)->required();
    auto* dary_k = dary_count->add_option("--k", o.k, "Window exponent, n < d^(k+1)");

    auto* poly = app.add_subcommand("poly-part", "Polynomial part from the average and Bernoulli formulas");
    auto* poly_parts = poly->add_option("--parts", o.parts);
    auto* poly_d = poly->add_option("--d", o.d)->check(CLI::Range(std::uint64_t{2}, std::numeric_limits<std::uint64_t>::max()));
    auto* poly_k = poly->add_option("--k", o.k);
    poly->add_option("--at", o.at, "Evaluate the polynomial at this rational");
    poly_parts->excludes(poly_d)->excludes(poly_k);
    poly_d->needs(poly_k);
    poly_k->needs(poly_d);

    auto* waves = app.add_subcommand("waves", "Sylvester waves W_j and their sum");
    auto* waves_parts = waves->add_option("--parts", o.parts);
    auto* waves_d = waves->add_option("--d", o.d)->check(CLI::Range(std::uint64_t{2}, std::numeric_limits<std::uint64_t>::max()));
    waves->add_option("--n", o.n)->required();
    waves->add_option("--reading", o.reading, "Index reading of the d-ary wave sum")
        ->check(CLI::IsMember({"corrected", "literal"}));
    waves_parts->excludes(waves_d);

    auto* presym = app.add_subcommand("presym", "Elementary symmetric partition pre_j");
    presym->add_option("--partition", o.partition)->required();
    presym->add_option("--j", o.j)->required();

    auto* recon = app.add_subcommand("reconstruct", "Recover a d-ary partition from positional j-fold products");
    recon->add_option("--d", o.d)->required()->check(CLI::Range(std::uint64_t{2}, std::numeric_limits<std::uint64_t>::max()));
    recon->add_option("--j", o.j)->required();
    recon->add_option("--products", o.products, "tuple:value pairs, e.g. \"1,2:27;1,3:9;2,3:3\"")->required();

    auto* verify = app.add_subcommand("verify", "Exhaustive verification reports");
    verify->add_option("--mode", o.mode)->required()->check(CLI::IsMember({"uniqueness", "circulant", "waves"}));
    verify->add_option("--d", o.d)->check(CLI::Range(std::uint64_t{2}, std::numeric_limits<std::uint64_t>::max()));
    verify->add_option("--ell", o.ell);
    verify->add_option("--max-exp", o.max_exp);
    verify->add_option("--j", o.j);
    verify->add_option("--n-max", o.n_max);
    verify->add_option("--parts", o.parts);

    try {
        app.parse(std::vector<std::string>(args.rbegin(), args.rend()));
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        err << "dpart: " << e.what() << "\n";
        return kExitUsage;
    }

    const Format format = o.format == "json" ? Format::Json : o.format == "csv" ? Format::Csv : Format::Text;

    try {
        OutputRecord rec;
        if (count->parsed()) {
            rec = cmd_count(o);
        } else if (dary_count->parsed()) {
            rec = cmd_dary_count(o, dary_k->count() > 0);
        } else if (poly->parsed()) {
            if (poly_parts->count() == 0 && poly_d->count() == 0)
                throw UsageError("poly-part needs --parts or --d/--k");
            rec = cmd_poly_part(o, poly_parts->count() > 0);
        } else if (waves->parsed()) {
            if (waves_parts->count() == 0 && waves_d->count() == 0)
                throw UsageError("waves needs --parts or --d");
            rec = cmd_waves(o, waves_parts->count() > 0);
        } else if (presym->parsed()) {
            rec = cmd_presym(o);
        } else if (recon->parsed()) {
            rec = cmd_reconstruct(o);
        } else if (verify->parsed()) {
            if (o.mode == "uniqueness" && o.d < 2)
                throw UsageError("verify --mode uniqueness needs --d >= 2");
            rec = cmd_verify(o);
        }
        out << render(rec, format);
        return rec.agreement.value_or(true) ? kExitOk : kExitFailure;
    } catch (const dpart::Error& e) {
        err << "dpart: " << e.what() << "\n";
        return kExitFailure;
    } catch (const std::invalid_argument& e) {
        err << "dpart: " << e.what() << "\n";
        return kExitUsage;
    }
}

} // namespace dpart::cli
