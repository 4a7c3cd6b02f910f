#ifndef HOUTU_BANDWIDTH_HPP
#define HOUTU_BANDWIDTH_HPP

#include <algorithm>

#include "houtu/model.hpp"
#include "houtu/rng.hpp"

namespace houtu::sim {

inline constexpr Time kDefaultResampleInterval = 5 * kMicrosPerSecond;

// One bandwidth draw: Normal(mean, stddev) truncated below at the floor.
inline double sample_bandwidth(const model::LinkModel& link, Rng& rng) {
    if (link.stddev_mbps <= 0.0) return link.mean_mbps;
    return std::max(link.floor_mbps, rng.normal(link.mean_mbps, link.stddev_mbps));
}

// Piecewise transfer integration: the bandwidth is resampled every
// `resample_interval` of simulated time for long transfers.
inline Time transfer_time(double bytes, const model::LinkModel& link, Rng& rng,
                          Time resample_interval = kDefaultResampleInterval) {
    if (bytes <= 0.0) return 0;
    double elapsed = 0.0;
    double remaining = bytes;
    const double interval = to_seconds(resample_interval);
    while (true) {
        double bw_bytes_per_sec = sample_bandwidth(link, rng) * 1e6 / 8.0;
        double chunk = bw_bytes_per_sec * interval;
        if (remaining <= chunk) {
            elapsed += remaining / bw_bytes_per_sec;
            return from_seconds(elapsed);
        }
        remaining -= chunk;
        elapsed += interval;
    }
}

}  // namespace houtu::sim

#endif
