#pragma once

#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include <json.hpp>

#include "dpart/exact.hpp"

namespace dpart::cli {

using Json = nlohmann::ordered_json;

enum class Format { Text, Json, Csv };

/// One serialized answer. Exact values are JSON integers when they fit in
/// 64 bits and "p/q" (or decimal) strings otherwise; never floats.
struct OutputRecord {
    std::string command;
    Json inputs = Json::object();
    Json result;
    Json metadata = Json::object();
    std::optional<bool> agreement;
};

Json exact_json(const BigInt& v);
Json exact_json(const BigRational& v);

std::string render_json(const OutputRecord& rec);
std::string render_csv(const OutputRecord& rec);
std::string render_text(const OutputRecord& rec);
std::string render(const OutputRecord& rec, Format format);

/// Exit codes of run().
inline constexpr int kExitOk = 0;
inline constexpr int kExitFailure = 1;
inline constexpr int kExitUsage = 2;

/// Parses args (without the program name), runs the subcommand and writes
/// the record to out. Diagnostics go to err.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace dpart::cli
