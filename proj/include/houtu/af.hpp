#ifndef HOUTU_AF_HPP
#define HOUTU_AF_HPP

#include <algorithm>
#include <cmath>
#include <optional>
#include <string>
#include <vector>

#include "houtu/model.hpp"

namespace houtu::af {

// One period of feedback for a sub-job's job manager.
struct PeriodRecord {
    int q = 1;             // period index, >= 1
    int desire = 1;        // d(q)
    int allocation = 0;    // a(q), always <= desire
    double utilization = 0.0;
    bool had_waiting_tasks = false;
};

enum class PeriodClass { Inefficient, EfficientDeprived, EfficientSatisfied };

inline const char* to_string(PeriodClass c) {
    switch (c) {
        case PeriodClass::Inefficient: return "inefficient";
        case PeriodClass::EfficientDeprived: return "efficient-deprived";
        case PeriodClass::EfficientSatisfied: return "efficient-satisfied";
    }
    return "?";
}

inline PeriodClass classify_period(const PeriodRecord& rec, double delta) {
    if (rec.utilization < delta && !rec.had_waiting_tasks) return PeriodClass::Inefficient;
    if (rec.desire > rec.allocation) return PeriodClass::EfficientDeprived;
    return PeriodClass::EfficientSatisfied;
}

// Desire for the next period. `capacity` clamps to the containers available
// in the sub-job's data center. Desire stays integral and at least 1; a
// sub-job with desire 0 could never run its future stages.
inline int next_desire(const std::optional<PeriodRecord>& prev,
                       const model::SchedulerParams& params, int capacity) {
    int d;
    if (!prev) {
        d = 1;
    } else {
        switch (classify_period(*prev, params.delta)) {
            case PeriodClass::Inefficient:
                d = static_cast<int>(std::ceil(static_cast<double>(prev->desire) / params.rho));
                break;
            case PeriodClass::EfficientDeprived:
                d = prev->desire;
                break;
            case PeriodClass::EfficientSatisfied:
                d = static_cast<int>(std::ceil(static_cast<double>(prev->desire) * params.rho));
                break;
            default:
                d = prev->desire;
        }
    }
    return std::clamp(d, 1, std::max(1, capacity));
}

// Mean over all (tick, container) samples of one period; 0 when the sub-job
// held no containers for the whole period.
inline double measure_utilization(const std::vector<std::vector<double>>& per_tick_used) {
    double sum = 0.0;
    std::size_t n = 0;
    for (const auto& tick : per_tick_used) {
        for (double u : tick) {
            sum += u;
            ++n;
        }
    }
    return n == 0 ? 0.0 : sum / static_cast<double>(n);
}

}  // namespace houtu::af

#endif
