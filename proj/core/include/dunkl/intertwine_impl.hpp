#pragma once

#include <cmath>
#include <limits>

namespace dunkl {

template <class Rng, class Normal>
Vec WeightSampler::draw(Rng& rng, Normal& normal, long* trials) const
{
    Vec x(static_cast<std::size_t>(cfg_.n));
    for (;;) {
        if (trials) ++*trials;
        double r2 = 0.0;
        for (auto& xi : x) {
            xi = sigma_ * normal(rng);
            r2 += xi * xi;
        }
        const double lw = log_weight(cfg_, x);
        if (!std::isfinite(lw)) continue;
        const double log_ratio = lw - 0.5 * a_ * r2 - log_bound_;
        const double u = (static_cast<double>(rng() >> 11) + 0.5) * 0x1.0p-53;
        if (std::log(u) < log_ratio) return x;
    }
}

} // namespace dunkl
