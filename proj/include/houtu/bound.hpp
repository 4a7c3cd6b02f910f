#ifndef HOUTU_BOUND_HPP
#define HOUTU_BOUND_HPP

#include <cmath>
#include <stdexcept>

#include "houtu/model.hpp"

namespace houtu::sim {

// Makespan bound for fair scheduling + adaptive feedback + parameterized
// delay scheduling across k data centers:
//   T(J) <= c_max * T1(J) + sum_i (L * log_rho |P_i| + 2L)
// with c_i = (2/(1-delta) + (1+rho)/delta + 2*tau/theta) / |P_i|.
// Returned in seconds.
inline double makespan_bound(const model::SchedulerParams& params,
                             const model::ClusterTopology& topo,
                             const std::vector<model::DagJob>& jobs) {
    params.validate();
    double total_work = 0.0;
    for (const auto& j : jobs) {
        for (const auto& s : j.stages) {
            for (const auto& t : s.tasks) {
                if (t.r + 1e-12 < params.theta || t.r + params.delta > 1.0 + 1e-12)
                    throw std::invalid_argument("task requirement violates bound preconditions");
            }
        }
        total_work += model::job_work(j);
    }
    double coeff = 2.0 / (1.0 - params.delta) + (1.0 + params.rho) / params.delta +
                   2.0 * params.tau / params.theta;
    double c_max = 0.0;
    double sum_d = 0.0;
    const double L = to_seconds(params.period);
    for (const auto& dc : topo.datacenters) {
        double p = static_cast<double>(dc.containers.size());
        if (p <= 0.0) throw std::invalid_argument("data center without containers");
        c_max = std::max(c_max, coeff / p);
        sum_d += L * std::log(p) / std::log(params.rho) + 2.0 * L;
    }
    return c_max * total_work + sum_d;
}

}  // namespace houtu::sim

#endif
