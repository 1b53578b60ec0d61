#pragma once

#include "dunkl/rootsys.hpp"

#include <cstdint>
#include <span>
#include <vector>

namespace dunkl {

struct ParticleState {
    Vec positions;
    double time = 0.0;
};

struct InitStats {
    Vec mean;
    double variance_total = 0.0;
};

struct SimPlan {
    RootSystemConfig cfg;
    double dt = 2e-4;
    double t_final = 1.0;
    long n_paths = 1;
    std::uint64_t seed = 0x5eed'd0c5'2024ULL;
    Vec initial;             // N starting positions in the closed chamber
    double noise_scale = 1.0; // multiplies the Brownian increments; 0 gives the drift flow
    int threads = 0;          // 0: DUNKL_LAB_THREADS or hardware concurrency

    void validate() const;
};

struct PathEnsemble {
    int n = 0;
    long n_paths = 0;
    std::vector<double> finals; // row-major, n_paths x n
    long tie_repairs = 0;
    long steps_per_path = 0;

    std::span<const double> path(long i) const
    {
        return {finals.data() + i * static_cast<long>(n), static_cast<std::size_t>(n)};
    }
};

struct DensityHistogram {
    double lo = 0.0;
    double hi = 1.0;
    double bin_width = 1.0;
    std::vector<long> counts;
    long total_particles = 0;
    long n_paths = 0;
    long underflow = 0;
    long overflow = 0;
    double scale_factor = 1.0;

    std::size_t bins() const { return counts.size(); }
    double bin_left(std::size_t b) const { return lo + static_cast<double>(b) * bin_width; }
    double bin_right(std::size_t b) const { return lo + static_cast<double>(b + 1) * bin_width; }
    // particle density: integrates to N up to out-of-range counts
    double density(std::size_t b) const
    {
        return static_cast<double>(counts[b]) / (static_cast<double>(n_paths) * bin_width);
    }
};

// Drift b(x) of the radial SDE; throws DomainError off the open chamber.
Vec drift(const RootSystemConfig& cfg, const Vec& x);

// x' = x + b(x) dt + sqrt(dt) noise, projected back to the chamber.
ParticleState euler_step(const RootSystemConfig& cfg, const ParticleState& state, double dt, const Vec& noise);

PathEnsemble simulate_paths(const SimPlan& plan);

DensityHistogram scaled_histogram(const PathEnsemble& finals, double scale_factor, double lo, double hi,
                                  double bin_width);

InitStats init_stats(const std::vector<Vec>& points, const std::vector<double>& weights = {});

// (s^2 + |xbar|^2) max(1, beta)
double relaxation_bound(const InitStats& stats, double beta);

// Worker count from DUNKL_LAB_THREADS (0 or unset: hardware concurrency).
int worker_count(int requested = 0);

} // namespace dunkl
