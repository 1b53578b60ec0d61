#include "commands.hpp"
#include "common.hpp"

#include "dunkl/equilibrium.hpp"
#include "dunkl/orthopoly.hpp"

#include <algorithm>
#include <cmath>
#include <iostream>
#include <memory>

namespace dunkl::cli {

namespace {

constexpr double kTolerance = 1e-9;

struct FeketeOptions {
    std::string type = "A";
    int n = 3;
    double nu = 0.5;
    std::string out;
};

int run_fekete(const FeketeOptions& o, const std::vector<std::string>& argv)
{
    const Stopwatch clock;
    // the peak set does not depend on beta
    const RootSystemConfig cfg = make_config(o.type, o.n, 2.0, o.nu);
    const PotentialReport rep = peak_set(cfg);

    Vec oracle;
    if (cfg.kind == RootKind::TypeA) {
        oracle = hermite_zeros(cfg.n).zeros;
    } else {
        for (double l : laguerre_zeros(cfg.n, cfg.nu - 0.5).zeros) oracle.push_back(std::sqrt(l));
    }
    std::sort(oracle.begin(), oracle.end());
    Vec delta(oracle.size());
    double max_delta = 0.0;
    for (std::size_t i = 0; i < oracle.size(); ++i) {
        delta[i] = rep.minimizer[i] - oracle[i];
        max_delta = std::max(max_delta, std::abs(delta[i]));
    }
    double max_residual = 0.0;
    for (const auto& [name, r] : rep.identity_residuals) max_residual = std::max(max_residual, r);

    const bool ok = max_residual <= kTolerance && max_delta <= kTolerance;
    json doc = manifest("fekete", {{"type", o.type}, {"n", o.n}, {"nu", cfg.kind == RootKind::TypeB ? json(o.nu) : json()}},
                        0, clock.seconds(), argv);
    doc["report"] = {{"minimizer", rep.minimizer},
                     {"potential_at_min", rep.potential_at_min},
                     {"freezing_constant", rep.freezing_constant},
                     {"identity_residuals", rep.identity_residuals},
                     {"newton_iterations", rep.newton_iterations},
                     {"hessian_eigenvalues", rep.hessian_eigenvalues}};
    doc["oracle"] = {{"kind", cfg.kind == RootKind::TypeA ? "hermite zeros" : "square roots of Laguerre zeros"},
                     {"values", oracle},
                     {"delta", delta},
                     {"max_delta", max_delta}};
    doc["tolerance"] = kTolerance;
    doc["pass"] = ok;
    emit_json(doc, o.out);
    if (!ok) std::cerr << "fekete: residual " << max_residual << " or oracle delta " << max_delta << " exceeds " << kTolerance << '\n';
    return ok ? kOk : kVerificationFailed;
}

} // namespace

Command register_fekete(CLI::App& app)
{
    auto opts = std::make_shared<FeketeOptions>();
    CLI::App* sub = app.add_subcommand("fekete", "Peak set of the log-gas potential with identity checks");
    sub->add_option("--type", opts->type, "Root system")->check(CLI::IsMember({"A", "B"}))->capture_default_str();
    sub->add_option("--n", opts->n, "Particle count")->check(CLI::PositiveNumber)->capture_default_str();
    sub->add_option("--nu", opts->nu, "Bessel index (type B)")->check(CLI::NonNegativeNumber)->capture_default_str();
    sub->add_option("--out", opts->out, "JSON report path (default: stdout)");
    return {sub, [opts](const std::vector<std::string>& argv) { return run_fekete(*opts, argv); }};
}

} // namespace dunkl::cli
