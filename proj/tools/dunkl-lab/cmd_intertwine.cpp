#include "commands.hpp"
#include "common.hpp"

#include "dunkl/intertwine.hpp"

#include <memory>

namespace dunkl::cli {

namespace {

struct IntertwineOptions {
    std::string type = "A";
    std::string lambda;
    int n = 3;
    double beta = 2.0;
    double nu = 0.5;
    std::string basis = "monomial";
    std::string limit = "none";
    std::string out;
};

int run_intertwine(const IntertwineOptions& o, const std::vector<std::string>& argv)
{
    const Stopwatch clock;
    const Partition lambda = parse_partition(o.lambda);
    if (lambda.length() > o.n) throw UsageError("--lambda has more parts than --n");
    if (o.limit != "none" && o.basis != "monomial") throw UsageError("--limit results are given in the monomial basis");
    if (o.type == "A" && o.limit == "nu") throw UsageError("--limit nu applies to --type B");

    SymPoly result;
    if (o.limit == "none") {
        const RootSystemConfig cfg = make_config(o.type, o.n, o.beta, o.nu);
        result = cfg.kind == RootKind::TypeA ? v_a_on_monomial(lambda, o.n, o.beta)
                                             : v_b_on_monomial(lambda, o.n, o.beta, o.nu);
        if (o.basis == "monomial") result = to_monomial(result);
    } else if (o.limit == "beta") {
        result = o.type == "A" ? v_a_limit(lambda, o.n) : v_b_limit_beta(lambda, o.n, o.nu);
    } else {
        result = v_b_limit_nu(lambda, o.n, o.beta);
    }

    json coeffs = json::array();
    for (const auto& [mu, c] : result.coeffs) coeffs.push_back({{"partition", partition_json(mu)}, {"coefficient", c}});
    json params{{"type", o.type}, {"lambda", partition_json(lambda)}, {"n", o.n}, {"basis", o.basis}, {"limit", o.limit}};
    if (!(o.type == "A" && o.limit == "beta")) params["beta"] = o.beta;
    if (o.type == "B") params["nu"] = o.nu;
    json doc = manifest("intertwine", params, 0, clock.seconds(), argv);
    std::string scaling = "none";
    if (o.limit == "beta" && o.type == "B") scaling = "beta^|lambda|";
    if (o.limit == "nu") scaling = "nu^|lambda|";
    doc["result"] = {{"basis", o.basis == "jack" ? "jack" : "monomial"},
                     {"jack_alpha", o.basis == "jack" ? json(result.alpha) : json()},
                     {"variables", o.type == "A" ? "x" : "x^2"},
                     {"scaling", scaling},
                     {"coefficients", coeffs}};
    emit_json(doc, o.out);
    return kOk;
}

} // namespace

Command register_intertwine(CLI::App& app)
{
    auto opts = std::make_shared<IntertwineOptions>();
    CLI::App* sub = app.add_subcommand("intertwine", "Intertwining operator applied to a monomial symmetric polynomial");
    sub->add_option("--type", opts->type, "Root system")->check(CLI::IsMember({"A", "B"}))->capture_default_str();
    sub->add_option("--lambda", opts->lambda, "Partition, e.g. \"2,1\" (empty for the constant)");
    sub->add_option("--n", opts->n, "Number of variables")->check(CLI::PositiveNumber)->capture_default_str();
    sub->add_option("--beta", opts->beta, "Inverse temperature")->check(CLI::PositiveNumber)->capture_default_str();
    sub->add_option("--nu", opts->nu, "Bessel index (type B)")->check(CLI::NonNegativeNumber)->capture_default_str();
    sub->add_option("--basis", opts->basis, "Output basis")->check(CLI::IsMember({"jack", "monomial"}))->capture_default_str();
    sub->add_option("--limit", opts->limit, "Limit formula")->check(CLI::IsMember({"none", "beta", "nu"}))->capture_default_str();
    sub->add_option("--out", opts->out, "JSON output path (default: stdout)");
    return {sub, [opts](const std::vector<std::string>& argv) { return run_intertwine(*opts, argv); }};
}

} // namespace dunkl::cli
