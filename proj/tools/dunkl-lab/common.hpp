#pragma once

#include "dunkl/rootsys.hpp"
#include "dunkl/symfunc.hpp"

#include <json.hpp>

#include <chrono>
#include <cstdint>
#include <filesystem>
#include <stdexcept>
#include <string>
#include <vector>

namespace dunkl::cli {

using nlohmann::json;

inline constexpr std::uint64_t kDefaultSeed = 0x5eed'd0c5'2024ULL;

enum ExitCode : int { kOk = 0, kVerificationFailed = 1, kUsage = 2, kNumeric = 3 };

// Flag combinations rejected after parsing.
struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct BinSpec {
    double lo = 0.0;
    double hi = 1.0;
    double width = 0.01;
};

Vec parse_vector(const std::string& text);
BinSpec parse_bins(const std::string& text);
Partition parse_partition(const std::string& text);

// Accepts integral values written in floating notation such as 1e6.
long to_count(double value, const std::string& flag);

RootSystemConfig make_config(const std::string& type, int n, double beta, double nu);
json config_json(const RootSystemConfig& cfg);
json partition_json(const Partition& p);

// Shortest round-trip decimal, independent of the C locale.
std::string format_number(double x);

class Stopwatch {
public:
    double seconds() const { return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0_).count(); }

private:
    std::chrono::steady_clock::time_point t0_ = std::chrono::steady_clock::now();
};

json manifest(const std::string& command, const json& params, std::uint64_t seed, double seconds,
              const std::vector<std::string>& argv);

// Writes to path, or stdout when path is empty or "-".
void emit_json(const json& doc, const std::string& path);
void write_text(const std::filesystem::path& path, const std::string& text);

} // namespace dunkl::cli
