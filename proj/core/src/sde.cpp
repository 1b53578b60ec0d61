#include "dunkl/sde.hpp"

#include "dunkl/rng.hpp"

#include <boost/random/normal_distribution.hpp>

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <numeric>
#include <thread>

namespace dunkl {

namespace {

// Drift into b; singular terms are skipped when skip_singular is set.
void drift_raw(const RootSystemConfig& cfg, const double* x, double* b, bool skip_singular)
{
    const int n = cfg.n;
    const double hb = 0.5 * cfg.beta;
    std::fill(b, b + n, 0.0);
    for (int i = 1; i < n; ++i) {
        for (int j = 0; j < i; ++j) {
            const double d = x[i] - x[j];
            double f = 0.0;
            if (d != 0.0) f = 1.0 / d;
            else if (!skip_singular) throw DomainError("drift: coincident coordinates");
            if (cfg.kind == RootKind::TypeB) {
                const double s = x[i] + x[j];
                if (s != 0.0) {
                    b[i] += f + 1.0 / s;
                    b[j] += -f + 1.0 / s;
                } else if (!skip_singular) {
                    throw DomainError("drift: coordinates at the origin");
                } else {
                    b[i] += f;
                    b[j] -= f;
                }
            } else {
                b[i] += f;
                b[j] -= f;
            }
        }
    }
    if (cfg.kind == RootKind::TypeB) {
        const double c = cfg.nu + 0.5;
        for (int i = 0; i < n; ++i) {
            if (x[i] != 0.0) b[i] += c / x[i];
            else if (!skip_singular) throw DomainError("drift: zero coordinate");
        }
    }
    for (int i = 0; i < n; ++i) b[i] *= hb;
}

} // namespace

void SimPlan::validate() const
{
    cfg.validate();
    if (!(dt > 0.0)) throw DomainError("SimPlan: dt must be positive");
    if (!(t_final > 0.0)) throw DomainError("SimPlan: t_final must be positive");
    if (!(dt <= t_final)) throw DomainError("SimPlan: dt must not exceed t_final");
    if (n_paths < 1) throw DomainError("SimPlan: n_paths must be positive");
    if (static_cast<int>(initial.size()) != cfg.n) throw DomainError("SimPlan: initial has wrong length");
    if (!(noise_scale >= 0.0)) throw DomainError("SimPlan: noise_scale must be nonnegative");
    for (int i = 0; i < cfg.n; ++i) {
        if (!std::isfinite(initial[i])) throw DomainError("SimPlan: initial must be finite");
        if (i > 0 && initial[i] < initial[i - 1]) throw DomainError("SimPlan: initial must be ascending");
    }
    if (cfg.kind == RootKind::TypeB && initial[0] < 0.0) throw DomainError("SimPlan: TypeB initial must be >= 0");
}

Vec drift(const RootSystemConfig& cfg, const Vec& x)
{
    if (static_cast<int>(x.size()) != cfg.n) throw DomainError("drift: dimension mismatch");
    if (!in_weyl_chamber(cfg, x)) throw DomainError("drift: point outside the open Weyl chamber");
    Vec b(x.size());
    drift_raw(cfg, x.data(), b.data(), false);
    return b;
}

ParticleState euler_step(const RootSystemConfig& cfg, const ParticleState& state, double dt, const Vec& noise)
{
    const Vec b = drift(cfg, state.positions);
    if (static_cast<int>(noise.size()) != cfg.n) throw DomainError("euler_step: noise has wrong length");
    ParticleState out{state.positions, state.time + dt};
    const double sdt = std::sqrt(dt);
    for (int i = 0; i < cfg.n; ++i) out.positions[i] += b[i] * dt + sdt * noise[i];
    project_to_chamber(cfg, out.positions.data());
    return out;
}

int worker_count(int requested)
{
    int w = requested;
    if (w <= 0) {
        if (const char* env = std::getenv("DUNKL_LAB_THREADS")) w = std::atoi(env);
    }
    if (w <= 0) w = static_cast<int>(std::thread::hardware_concurrency());
    return std::max(1, w);
}

PathEnsemble simulate_paths(const SimPlan& plan)
{
    plan.validate();
    const RootSystemConfig cfg = plan.cfg;
    const int n = cfg.n;
    const long steps = std::max(1L, static_cast<long>(std::ceil(plan.t_final / plan.dt - 1e-9)));
    const double dt_last = plan.t_final - static_cast<double>(steps - 1) * plan.dt;
    const bool start_on_wall = !in_weyl_chamber(cfg, plan.initial);

    PathEnsemble out;
    out.n = n;
    out.n_paths = plan.n_paths;
    out.steps_per_path = steps;
    out.finals.resize(static_cast<std::size_t>(plan.n_paths) * static_cast<std::size_t>(n));

    const int workers = static_cast<int>(std::min<long>(worker_count(plan.threads), plan.n_paths));
    std::vector<long> repairs(static_cast<std::size_t>(workers), 0);

    auto run = [&](int w) {
        const long begin = plan.n_paths * w / workers;
        const long end = plan.n_paths * (w + 1) / workers;
        Vec x(static_cast<std::size_t>(n));
        Vec b(static_cast<std::size_t>(n));
        boost::random::normal_distribution<double> normal;
        long rep = 0;
        for (long p = begin; p < end; ++p) {
            auto rng = Xoshiro256pp::stream(plan.seed, static_cast<std::uint64_t>(p));
            std::copy(plan.initial.begin(), plan.initial.end(), x.begin());
            for (long s = 0; s < steps; ++s) {
                const double h = s + 1 == steps ? dt_last : plan.dt;
                const double sh = std::sqrt(h) * plan.noise_scale;
                drift_raw(cfg, x.data(), b.data(), s == 0 && start_on_wall);
                for (int i = 0; i < n; ++i) x[i] += b[i] * h + sh * normal(rng);
                rep += project_to_chamber(cfg, x.data());
            }
            std::copy(x.begin(), x.end(), out.finals.begin() + p * n);
        }
        repairs[static_cast<std::size_t>(w)] = rep;
    };

    if (workers == 1) {
        run(0);
    } else {
        std::vector<std::thread> pool;
        pool.reserve(static_cast<std::size_t>(workers));
        for (int w = 0; w < workers; ++w) pool.emplace_back(run, w);
        for (auto& t : pool) t.join();
    }
    out.tie_repairs = std::accumulate(repairs.begin(), repairs.end(), 0L);
    return out;
}

DensityHistogram scaled_histogram(const PathEnsemble& finals, double scale_factor, double lo, double hi,
                                  double bin_width)
{
    if (!(bin_width > 0.0)) throw DomainError("scaled_histogram: bin_width must be positive");
    if (!(lo < hi)) throw DomainError("scaled_histogram: need lo < hi");
    if (!(scale_factor > 0.0)) throw DomainError("scaled_histogram: scale_factor must be positive");
    DensityHistogram h;
    h.lo = lo;
    h.hi = hi;
    h.bin_width = bin_width;
    h.scale_factor = scale_factor;
    h.n_paths = finals.n_paths;
    const auto nbins = static_cast<std::size_t>(std::ceil((hi - lo) / bin_width - 1e-9));
    h.counts.assign(std::max<std::size_t>(nbins, 1), 0);
    for (double y : finals.finals) {
        const double v = y / scale_factor;
        ++h.total_particles;
        if (v < lo) {
            ++h.underflow;
            continue;
        }
        const auto b = static_cast<std::size_t>(std::floor((v - lo) / bin_width));
        if (b >= h.counts.size() || v >= hi) {
            ++h.overflow;
            continue;
        }
        ++h.counts[b];
    }
    return h;
}

InitStats init_stats(const std::vector<Vec>& points, const std::vector<double>& weights)
{
    if (points.empty()) throw DomainError("init_stats: no points");
    const std::size_t n = points.front().size();
    std::vector<double> w = weights;
    if (w.empty()) w.assign(points.size(), 1.0);
    if (w.size() != points.size()) throw DomainError("init_stats: weights size mismatch");
    const double total = std::accumulate(w.begin(), w.end(), 0.0);
    if (!(total > 0.0)) throw DomainError("init_stats: weights must have positive sum");
    InitStats st;
    st.mean.assign(n, 0.0);
    for (std::size_t k = 0; k < points.size(); ++k)
        for (std::size_t i = 0; i < n; ++i) st.mean[i] += w[k] / total * points[k][i];
    for (std::size_t k = 0; k < points.size(); ++k)
        for (std::size_t i = 0; i < n; ++i) {
            const double d = points[k][i] - st.mean[i];
            st.variance_total += w[k] / total * d * d;
        }
    return st;
}

double relaxation_bound(const InitStats& stats, double beta)
{
    double m2 = 0.0;
    for (double m : stats.mean) m2 += m * m;
    return (stats.variance_total + m2) * std::max(1.0, beta);
}

} // namespace dunkl
