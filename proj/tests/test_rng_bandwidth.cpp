#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "houtu/bandwidth.hpp"
#include "houtu/rng.hpp"

using namespace houtu;

TEST_CASE("rng streams are deterministic and independent") {
    Rng a = Rng::stream(42, "bandwidth");
    Rng b = Rng::stream(42, "bandwidth");
    for (int i = 0; i < 100; ++i) CHECK(a.next_u64() == b.next_u64());

    Rng c = Rng::stream(42, "failures");
    Rng d = Rng::stream(42, "bandwidth");
    bool all_same = true;
    for (int i = 0; i < 10; ++i) all_same = all_same && (c.next_u64() == d.next_u64());
    CHECK_FALSE(all_same);
}

TEST_CASE("normal and exponential empirical moments") {
    Rng rng(123);
    const int n = 100000;
    double sum = 0.0, sq = 0.0;
    for (int i = 0; i < n; ++i) {
        double x = rng.normal(10.0, 3.0);
        sum += x;
        sq += x * x;
    }
    double mean = sum / n;
    double stddev = std::sqrt(sq / n - mean * mean);
    CHECK(mean == doctest::Approx(10.0).epsilon(0.01));
    CHECK(stddev == doctest::Approx(3.0).epsilon(0.02));

    sum = 0.0;
    for (int i = 0; i < n; ++i) sum += rng.exponential(60.0);
    CHECK(sum / n == doctest::Approx(60.0).epsilon(0.02));
}

TEST_CASE("bandwidth sampling") {
    Rng rng(7);
    model::LinkModel constant{100.0, 0.0, 10.0};
    for (int i = 0; i < 10; ++i) CHECK(sim::sample_bandwidth(constant, rng) == 100.0);

    model::LinkModel wan{100.0, 30.0, 10.0};
    const int n = 10000;
    double sum = 0.0, sq = 0.0, lo = 1e9;
    for (int i = 0; i < n; ++i) {
        double x = sim::sample_bandwidth(wan, rng);
        lo = std::min(lo, x);
        sum += x;
        sq += x * x;
    }
    double mean = sum / n;
    double stddev = std::sqrt(sq / n - mean * mean);
    CHECK(lo >= 10.0);
    CHECK(mean == doctest::Approx(100.0).epsilon(0.02));
    // truncation at the floor trims the left tail slightly
    CHECK(stddev == doctest::Approx(30.0).epsilon(0.05));
}

TEST_CASE("transfer_time") {
    Rng rng(7);
    model::LinkModel constant{100.0, 0.0, 10.0};
    CHECK(sim::transfer_time(0.0, constant, rng) == 0);
    // 100 Mbit = 12.5 MB at a constant 100 Mbps is exactly 1 s
    CHECK(sim::transfer_time(12.5e6, constant, rng) == from_seconds(1.0));
    // long transfer spans several resample intervals
    CHECK(sim::transfer_time(12.5e6 * 60, constant, rng) == from_seconds(60.0));

    model::LinkModel wan{100.0, 30.0, 10.0};
    const int n = 2000;
    double sum = 0.0;
    for (int i = 0; i < n; ++i) sum += to_seconds(sim::transfer_time(1e9, wan, rng));
    double mean = sum / n;
    // 1 GB at ~100 Mbps nominal is 80 s; variance and the convexity of
    // time = bytes/bw push the mean a little above that
    CHECK(mean > 70.0);
    CHECK(mean < 100.0);
}
