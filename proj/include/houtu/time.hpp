#ifndef HOUTU_TIME_HPP
#define HOUTU_TIME_HPP

#include <cmath>
#include <cstdint>

namespace houtu {

// Simulated time in integer microseconds. Integer time keeps event ordering
// and trace bytes identical across platforms.
using Time = std::int64_t;

constexpr Time kMicrosPerSecond = 1'000'000;

inline Time from_seconds(double s) {
    return static_cast<Time>(std::llround(s * static_cast<double>(kMicrosPerSecond)));
}

inline double to_seconds(Time t) {
    return static_cast<double>(t) / static_cast<double>(kMicrosPerSecond);
}

}  // namespace houtu

#endif
