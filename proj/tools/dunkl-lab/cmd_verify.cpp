#include "commands.hpp"
#include "common.hpp"

#include "dunkl/equilibrium.hpp"
#include "dunkl/intertwine.hpp"
#include "dunkl/orthopoly.hpp"
#include "dunkl/rng.hpp"

#include <boost/random/uniform_real_distribution.hpp>

#include <algorithm>
#include <cmath>
#include <iostream>
#include <memory>

namespace dunkl::cli {

namespace {

struct VerifyOptions {
    std::vector<std::string> suites{"all"};
    int n_max = 3;
    double paths = 100000;
    std::uint64_t seed = kDefaultSeed;
    std::string out;
};

struct Report {
    json checks = json::array();
    bool pass = true;

    void add(const std::string& suite, const std::string& name, double measured, double tolerance, json extra = {})
    {
        const bool ok = std::isfinite(measured) && measured <= tolerance;
        json c{{"suite", suite}, {"check", name}, {"measured", measured}, {"tolerance", tolerance}, {"pass", ok}};
        if (!extra.is_null()) c["details"] = std::move(extra);
        checks.push_back(std::move(c));
        pass = pass && ok;
    }
};

void suite_freezing(const VerifyOptions& o, Report& r)
{
    for (int n = 1; n <= o.n_max; ++n) {
        std::vector<RootSystemConfig> cfgs{RootSystemConfig::type_a(n, 2.0)};
        for (double nu : {0.5, 1.0, 2.5}) cfgs.push_back(RootSystemConfig::type_b(n, 2.0, nu));
        for (const auto& cfg : cfgs) {
            const auto rep = peak_set(cfg);
            Vec oracle;
            if (cfg.kind == RootKind::TypeA) {
                oracle = hermite_zeros(n).zeros;
            } else {
                for (double l : laguerre_zeros(n, cfg.nu - 0.5).zeros) oracle.push_back(std::sqrt(l));
            }
            std::sort(oracle.begin(), oracle.end());
            double delta = 0.0;
            for (int i = 0; i < n; ++i) delta = std::max(delta, std::abs(rep.minimizer[i] - oracle[i]));
            double residual = 0.0;
            for (const auto& [k, v] : rep.identity_residuals) residual = std::max(residual, v);
            std::string label = to_string(cfg.kind) + " N=" + std::to_string(n);
            if (cfg.kind == RootKind::TypeB) label += " nu=" + format_number(cfg.nu);
            r.add("freezing", label + " identities", residual, 1e-9, rep.identity_residuals);
            r.add("freezing", label + " zero oracle", delta, 1e-9);
        }
    }
}

void suite_limits(const VerifyOptions& o, Report& r)
{
    double worst = 0.0;
    for (int n = 1; n <= o.n_max; ++n)
        for (int w = 0; w <= 4; ++w)
            for (const auto& lambda : partitions_of(w, n)) {
                const SymPoly fin = to_monomial(v_a_on_monomial(lambda, n, 1e6));
                const SymPoly lim = v_a_limit(lambda, n);
                double scale = 0.0;
                double d = 0.0;
                for (const auto& [mu, c] : lim.coeffs) scale = std::max(scale, std::abs(c));
                for (const auto& [mu, c] : lim.coeffs) d = std::max(d, std::abs(fin.coeff(mu) - c));
                for (const auto& [mu, c] : fin.coeffs) d = std::max(d, std::abs(c - lim.coeff(mu)));
                worst = std::max(worst, d / scale);
            }
    r.add("limits", "V_A at beta=1e6 vs beta limit", worst, 1e-5);
    double filter = 0.0;
    for (int n = 1; n <= o.n_max; ++n)
        for (int w = 1; w <= 4; ++w)
            for (const auto& tau : partitions_of(w, n)) {
                const double f = filter_product(tau, n, 1e8);
                if (tau.length() > 1) {
                    filter = std::max(filter, std::abs(f));
                } else {
                    filter = std::max(filter, std::abs(f * std::pow(n, w) * std::tgamma(w + 1.0) - 1.0));
                }
            }
    r.add("limits", "filter product at beta=1e8", filter, 1e-6);
}

void suite_fke(const VerifyOptions& o, Report& r)
{
    auto rng = Xoshiro256pp::stream(o.seed, 1);
    boost::random::uniform_real_distribution<double> u(-2.0, 2.0);
    for (int n = 2; n <= std::max(2, o.n_max); ++n)
        for (const auto& cfg : {RootSystemConfig::type_a(n, 2.0), RootSystemConfig::type_b(n, 2.0, 0.5)}) {
            const auto logf = [&cfg](const Vec& v) { return steady_state_logdensity(cfg, v); };
            json table = json::array();
            double worst = 0.0;
            while (table.size() < 10) {
                Vec v(static_cast<std::size_t>(n));
                for (auto& x : v) x = cfg.kind == RootKind::TypeB ? std::abs(u(rng)) : u(rng);
                std::sort(v.begin(), v.end());
                bool interior = true;
                for (const auto& root : positive_roots(cfg)) interior = interior && std::abs(root.dot(v.data())) >= 0.1;
                if (!interior) continue;
                const auto res = fke_residual(cfg, logf, v);
                worst = std::max(worst, res.relative());
                table.push_back({{"point", v}, {"relative_residual", res.relative()}});
            }
            r.add("fke", to_string(cfg.kind) + " N=" + std::to_string(n) + " steady state", worst, 1e-4, table);
        }
}

void suite_kernel(const VerifyOptions& o, Report& r)
{
    HyperSeriesParams p;
    p.n_vars = 3;
    p.alpha = 1.0;
    auto rng = Xoshiro256pp::stream(o.seed, 2);
    boost::random::uniform_real_distribution<double> u(-1.0, 1.0);
    double worst = 0.0;
    for (int k = 0; k < 10; ++k) {
        const Vec x{u(rng), u(rng), u(rng)};
        worst = std::max(worst, std::abs(hyper_series(p, x, {1.0, 1.0, 1.0}).value / std::exp(x[0] + x[1] + x[2]) - 1.0));
    }
    r.add("kernel", "0F0(x,1) = exp(sum x)", worst, 1e-10);
    const std::vector<std::pair<Vec, Vec>> args{{{0.4}, {-0.3}}, {{-0.3, 0.4}, {0.1, 0.5}}};
    for (int n = 1; n <= std::min(2, o.n_max); ++n) {
        const auto cfg = RootSystemConfig::type_a(n, 2.0);
        const auto& [y, z] = args[static_cast<std::size_t>(n - 1)];
        const auto kc = kernel_reproducing_check(cfg, y, z, to_count(o.paths, "--paths"), 24, o.seed);
        r.add("kernel", "reproducing identity A N=" + std::to_string(n) + " |z|", std::abs(kc.z_score()), 3.0,
              {{"lhs", kc.lhs_estimate}, {"rhs", kc.rhs_value}, {"std_error", kc.std_error}, {"acceptance", kc.acceptance}});
    }
}

void suite_jack(const VerifyOptions& o, Report& r)
{
    auto rng = Xoshiro256pp::stream(o.seed, 3);
    boost::random::uniform_real_distribution<double> u(0.2, 1.5);
    double worst = 0.0;
    const int n = std::max(2, o.n_max);
    for (int w = 1; w <= 6; ++w)
        for (const auto& lambda : partitions_of(w, n)) {
            Vec x(static_cast<std::size_t>(n));
            for (auto& v : x) v = u(rng);
            const double s = schur_eval(lambda, x);
            worst = std::max(worst, std::abs(jack_eval(lambda, 1.0, x) - s) / std::max(1.0, std::abs(s)));
        }
    r.add("jack", "alpha=1 equals Schur", worst, 1e-10);
    double p2 = 0.0;
    for (double alpha : {0.1, 1.0, 2.0, 10.0})
        p2 = std::max(p2, std::abs(jack_coeffs(Partition{2}, alpha, 2).coeff(Partition{1, 1}) - 2.0 / (1.0 + alpha)));
    r.add("jack", "P_(2) coefficient 2/(1+alpha)", p2, 1e-12);
}

int run_verify(const VerifyOptions& o, const std::vector<std::string>& argv)
{
    const Stopwatch clock;
    if (o.n_max < 1) throw UsageError("--n-max must be positive");
    if (to_count(o.paths, "--paths") < 2) throw UsageError("--paths must be at least 2");
    const auto wants = [&](const std::string& s) {
        return std::find(o.suites.begin(), o.suites.end(), "all") != o.suites.end() ||
               std::find(o.suites.begin(), o.suites.end(), s) != o.suites.end();
    };
    Report r;
    if (wants("freezing")) suite_freezing(o, r);
    if (wants("limits")) suite_limits(o, r);
    if (wants("fke")) suite_fke(o, r);
    if (wants("kernel")) suite_kernel(o, r);
    if (wants("jack")) suite_jack(o, r);

    json doc = manifest("verify", {{"suites", o.suites}, {"n_max", o.n_max}, {"paths", to_count(o.paths, "--paths")}}, o.seed,
                        clock.seconds(), argv);
    doc["checks"] = r.checks;
    doc["pass"] = r.pass;
    for (const auto& c : r.checks)
        std::cerr << (c["pass"].get<bool>() ? "PASS " : "FAIL ") << c["suite"].get<std::string>() << ": "
                  << c["check"].get<std::string>() << " = " << c["measured"].get<double>() << " (tol "
                  << c["tolerance"].get<double>() << ")\n";
    emit_json(doc, o.out);
    return r.pass ? kOk : kVerificationFailed;
}

} // namespace

Command register_verify(CLI::App& app)
{
    auto opts = std::make_shared<VerifyOptions>();
    CLI::App* sub = app.add_subcommand("verify", "Run property suites and report measured residuals");
    sub->add_option("--suite", opts->suites, "Suites to run")
        ->check(CLI::IsMember({"all", "freezing", "limits", "fke", "kernel", "jack"}))
        ->capture_default_str();
    sub->add_option("--n-max", opts->n_max, "Largest particle count")->capture_default_str();
    sub->add_option("--paths", opts->paths, "Monte Carlo samples for the kernel suite")->capture_default_str();
    sub->add_option("--seed", opts->seed, "RNG seed")->capture_default_str();
    sub->add_option("--out", opts->out, "JSON report path (default: stdout)");
    return {sub, [opts](const std::vector<std::string>& argv) { return run_verify(*opts, argv); }};
}

} // namespace dunkl::cli
