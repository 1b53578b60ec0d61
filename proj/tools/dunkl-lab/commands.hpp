#pragma once

#include <CLI11.hpp>

#include <functional>
#include <string>
#include <vector>

namespace dunkl::cli {

// Each register_* adds a subcommand whose options are bound to state owned by the runner;
// the runner returns a process exit code.
using Runner = std::function<int(const std::vector<std::string>& argv)>;

struct Command {
    CLI::App* sub = nullptr;
    Runner run;
};

Command register_simulate(CLI::App& app);
Command register_fekete(CLI::App& app);
Command register_verify(CLI::App& app);
Command register_intertwine(CLI::App& app);

} // namespace dunkl::cli
