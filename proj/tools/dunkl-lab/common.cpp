#include "common.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <iostream>
#include <sstream>

namespace dunkl::cli {

namespace {

std::vector<std::string> split(const std::string& text, char sep)
{
    std::vector<std::string> out;
    std::string item;
    std::istringstream in(text);
    while (std::getline(in, item, sep)) out.push_back(item);
    if (!text.empty() && text.back() == sep) out.emplace_back();
    return out;
}

std::string trim(const std::string& s)
{
    const auto b = s.find_first_not_of(" \t");
    if (b == std::string::npos) return {};
    const auto e = s.find_last_not_of(" \t");
    return s.substr(b, e - b + 1);
}

double parse_double(const std::string& raw)
{
    const std::string s = trim(raw);
    double v = 0.0;
    const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (s.empty() || ec != std::errc() || ptr != s.data() + s.size() || !std::isfinite(v))
        throw UsageError("not a finite number: '" + raw + "'");
    return v;
}

} // namespace

Vec parse_vector(const std::string& text)
{
    Vec out;
    if (trim(text).empty()) return out;
    for (const auto& item : split(text, ',')) out.push_back(parse_double(item));
    return out;
}

BinSpec parse_bins(const std::string& text)
{
    const auto parts = split(text, ':');
    if (parts.size() != 3) throw UsageError("--bins expects lo:hi:width");
    BinSpec b{parse_double(parts[0]), parse_double(parts[1]), parse_double(parts[2])};
    if (!(b.lo < b.hi) || !(b.width > 0.0)) throw UsageError("--bins needs lo < hi and width > 0");
    return b;
}

Partition parse_partition(const std::string& text)
{
    std::vector<int> parts;
    if (trim(text).empty()) return Partition{};
    for (const auto& item : split(text, ',')) {
        const std::string s = trim(item);
        int v = 0;
        const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
        if (s.empty() || ec != std::errc() || ptr != s.data() + s.size() || v < 0)
            throw UsageError("--lambda expects nonnegative integers, got '" + item + "'");
        parts.push_back(v);
    }
    return Partition(parts);
}

long to_count(double value, const std::string& flag)
{
    if (!(value >= 1.0) || value != std::floor(value) || value > 9.0e18)
        throw UsageError(flag + " expects a positive integer");
    return static_cast<long>(value);
}

RootSystemConfig make_config(const std::string& type, int n, double beta, double nu)
{
    RootSystemConfig cfg = type == "B" ? RootSystemConfig{RootKind::TypeB, n, beta, nu}
                                       : RootSystemConfig{RootKind::TypeA, n, beta, 0.0};
    try {
        cfg.validate();
    } catch (const DomainError& e) {
        throw UsageError(e.what());
    }
    return cfg;
}

json config_json(const RootSystemConfig& cfg)
{
    json j{{"type", to_string(cfg.kind)}, {"n", cfg.n}, {"beta", cfg.beta}, {"gamma", gamma(cfg)}};
    if (cfg.kind == RootKind::TypeB) j["nu"] = cfg.nu;
    return j;
}

json partition_json(const Partition& p)
{
    return p.parts();
}

std::string format_number(double x)
{
    if (std::isnan(x)) return "nan";
    char buf[32];
    const auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, x);
    return ec == std::errc() ? std::string(buf, ptr) : std::string("nan");
}

json manifest(const std::string& command, const json& params, std::uint64_t seed, double seconds,
              const std::vector<std::string>& argv)
{
    return json{{"command", command},   {"parameters", params},   {"seed", seed},
                {"version", DUNKL_LAB_VERSION}, {"wall_seconds", seconds}, {"argv", argv}};
}

void emit_json(const json& doc, const std::string& path)
{
    if (path.empty() || path == "-") {
        std::cout << doc.dump(2) << '\n';
        return;
    }
    write_text(path, doc.dump(2) + "\n");
}

void write_text(const std::filesystem::path& path, const std::string& text)
{
    if (path.has_parent_path()) std::filesystem::create_directories(path.parent_path());
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write " + path.string());
    out << text;
    if (!out) throw std::runtime_error("write failed for " + path.string());
}

} // namespace dunkl::cli
