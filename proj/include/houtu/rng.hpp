#ifndef HOUTU_RNG_HPP
#define HOUTU_RNG_HPP

#include <cmath>
#include <cstdint>
#include <random>
#include <string_view>

namespace houtu {

// Deterministic RNG built on mt19937_64 with hand-rolled distributions.
// std::normal_distribution et al. are implementation-defined, so traces
// would differ across standard libraries; these do not.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : gen_(seed) {}

    std::uint64_t next_u64() { return gen_(); }

    // uniform in [0, 1) with 53 bits of entropy
    double uniform01() { return static_cast<double>(gen_() >> 11) * 0x1.0p-53; }

    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform01(); }

    // uniform integer in [0, n)
    std::uint64_t below(std::uint64_t n) {
        // modulo bias is negligible for n << 2^64 (all our uses)
        return n ? gen_() % n : 0;
    }

    std::int64_t range(std::int64_t lo, std::int64_t hi) {  // inclusive
        return lo + static_cast<std::int64_t>(below(static_cast<std::uint64_t>(hi - lo + 1)));
    }

    double normal(double mean, double stddev) {
        if (have_spare_) {
            have_spare_ = false;
            return mean + stddev * spare_;
        }
        double u1 = 0.0, u2 = 0.0;
        do {
            u1 = uniform01();
        } while (u1 <= 0.0);
        u2 = uniform01();
        double mag = std::sqrt(-2.0 * std::log(u1));
        spare_ = mag * std::sin(2.0 * M_PI * u2);
        have_spare_ = true;
        return mean + stddev * mag * std::cos(2.0 * M_PI * u2);
    }

    double exponential(double mean) {
        double u;
        do {
            u = uniform01();
        } while (u <= 0.0);
        return -mean * std::log(u);
    }

    // Derive an independent stream for one concern so that changing the
    // draw count of one knob does not perturb the others.
    static Rng stream(std::uint64_t seed, std::string_view label) {
        std::uint64_t h = 1469598103934665603ull;  // FNV-1a
        for (char c : label) {
            h ^= static_cast<unsigned char>(c);
            h *= 1099511628211ull;
        }
        return Rng(seed ^ h);
    }

private:
    std::mt19937_64 gen_;
    double spare_ = 0.0;
    bool have_spare_ = false;
};

}  // namespace houtu

#endif
