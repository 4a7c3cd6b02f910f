#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "houtu/af.hpp"
#include "houtu/rng.hpp"

using namespace houtu;

TEST_CASE("classify_period") {
    CHECK(af::classify_period({1, 8, 8, 0.3, false}, 0.5) == af::PeriodClass::Inefficient);
    CHECK(af::classify_period({1, 8, 4, 0.3, true}, 0.5) == af::PeriodClass::EfficientDeprived);
    CHECK(af::classify_period({1, 8, 8, 0.9, false}, 0.5) == af::PeriodClass::EfficientSatisfied);
    // a waiting task blocks the inefficient classification even at low utilization
    CHECK(af::classify_period({1, 8, 8, 0.3, true}, 0.5) == af::PeriodClass::EfficientSatisfied);
    // classification flips exactly at u = delta
    CHECK(af::classify_period({1, 4, 4, 0.499, false}, 0.5) == af::PeriodClass::Inefficient);
    CHECK(af::classify_period({1, 4, 4, 0.5, false}, 0.5) == af::PeriodClass::EfficientSatisfied);
}

TEST_CASE("next_desire") {
    model::SchedulerParams params;
    CHECK(af::next_desire(std::nullopt, params, 100) == 1);
    CHECK(af::next_desire(af::PeriodRecord{1, 8, 8, 0.3, false}, params, 100) == 4);
    CHECK(af::next_desire(af::PeriodRecord{1, 8, 4, 0.3, true}, params, 100) == 8);
    CHECK(af::next_desire(af::PeriodRecord{1, 8, 8, 0.9, true}, params, 100) == 16);
    CHECK(af::next_desire(af::PeriodRecord{1, 8, 8, 0.9, true}, params, 10) == 10);  // clamp
    CHECK(af::next_desire(af::PeriodRecord{1, 1, 1, 0.1, false}, params, 100) == 1);  // floor at 1
    // non-integral rho rounds up
    model::SchedulerParams r3 = params;
    r3.rho = 1.5;
    CHECK(af::next_desire(af::PeriodRecord{1, 3, 3, 0.9, true}, r3, 100) == 5);  // ceil(4.5)
    CHECK(af::next_desire(af::PeriodRecord{1, 3, 3, 0.1, false}, r3, 100) == 2);  // ceil(2.0)
}

TEST_CASE("measure_utilization") {
    CHECK(af::measure_utilization({{1.0, 1.0}, {1.0, 1.0}}) == doctest::Approx(1.0));
    CHECK(af::measure_utilization({}) == doctest::Approx(0.0));
    CHECK(af::measure_utilization({{0.0, 1.0}, {0.0, 1.0}}) == doctest::Approx(0.5));
}

namespace {

// Independent rendering of the Algorithm-1 recurrence, kept deliberately
// separate from the library implementation.
int recurrence_oracle(bool first, int d_prev, int a_prev, double u_prev, bool waited,
                      double delta, double rho, int cap) {
    double d;
    if (first) {
        d = 1.0;
    } else if (u_prev < delta && !waited) {
        d = std::ceil(d_prev / rho);
    } else if (d_prev > a_prev) {
        d = d_prev;
    } else {
        d = std::ceil(d_prev * rho);
    }
    if (d < 1.0) d = 1.0;
    if (d > cap) d = cap;
    return static_cast<int>(d);
}

}  // namespace

TEST_CASE("desire sequences match the recurrence on 50 random histories") {
    Rng rng(2024);
    for (int seq = 0; seq < 50; ++seq) {
        model::SchedulerParams params;
        params.rho = 1.0 + 0.5 * (1 + rng.below(4));  // 1.5, 2.0, 2.5, 3.0
        params.delta = 0.2 + 0.1 * rng.below(6);
        int cap = 1 + static_cast<int>(rng.below(16));

        int d = af::next_desire(std::nullopt, params, cap);
        REQUIRE(d == recurrence_oracle(true, 0, 0, 0, false, params.delta, params.rho, cap));
        for (int q = 1; q <= 20; ++q) {
            int a = static_cast<int>(rng.below(static_cast<std::uint64_t>(d) + 1));
            double u = rng.uniform01();
            bool waited = rng.below(2) == 1;
            af::PeriodRecord rec{q, d, a, u, waited};
            int got = af::next_desire(rec, params, cap);
            int want = recurrence_oracle(false, d, a, u, waited, params.delta, params.rho, cap);
            REQUIRE(got == want);
            d = got;
        }
    }
}

TEST_CASE("satisfied growth reaches the capacity clamp within ceil(log_rho cap) periods") {
    model::SchedulerParams params;
    int cap = 13;
    int d = af::next_desire(std::nullopt, params, cap);
    int periods = 0;
    while (d < cap) {
        d = af::next_desire(af::PeriodRecord{periods + 1, d, d, 1.0, true}, params, cap);
        ++periods;
    }
    CHECK(periods <= static_cast<int>(std::ceil(std::log2(static_cast<double>(cap)))) + 1);
}
