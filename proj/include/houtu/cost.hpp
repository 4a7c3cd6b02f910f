#ifndef HOUTU_COST_HPP
#define HOUTU_COST_HPP

#include <map>
#include <optional>
#include <stdexcept>
#include <vector>

#include "houtu/model.hpp"

namespace houtu::sim {

// Hourly instance prices plus the cross-DC transfer price. Defaults encode
// the published ratios (Spot ~10x below On-demand, ~3x below Reserved) and
// the 0.13 $/GB inter-DC transfer price.
struct PriceTable {
    double on_demand_hourly = 1.0;
    double reserved_hourly = 0.30;
    double spot_hourly = 0.10;
    double transfer_per_gb = 0.13;

    void validate() const {
        if (!(spot_hourly <= reserved_hourly && reserved_hourly <= on_demand_hourly))
            throw std::invalid_argument("expected spot <= reserved <= on_demand prices");
        if (transfer_per_gb < 0.0) throw std::invalid_argument("negative transfer price");
    }

    double hourly(model::Reliability rel) const {
        return rel == model::Reliability::Spot ? spot_hourly : on_demand_hourly;
    }
};

struct HostUsage {
    int node = -1;
    model::Reliability reliability = model::Reliability::Spot;
    Time uptime = 0;
};

struct CostTrace {
    std::vector<HostUsage> hosts;
    double cross_dc_bytes = 0.0;
};

struct CostReport {
    double machine_cost = 0.0;
    double transfer_cost = 0.0;
};

// Prices a finished run. `override_class` re-prices every host as if it were
// of that class (used for like-for-like Spot vs On-demand comparisons).
inline CostReport compute_cost(const CostTrace& trace, const PriceTable& prices,
                               std::optional<model::Reliability> override_class = std::nullopt) {
    prices.validate();
    CostReport report;
    for (const auto& h : trace.hosts) {
        auto rel = override_class.value_or(h.reliability);
        report.machine_cost += to_seconds(h.uptime) / 3600.0 * prices.hourly(rel);
    }
    report.transfer_cost = trace.cross_dc_bytes / 1e9 * prices.transfer_per_gb;
    return report;
}

}  // namespace houtu::sim

#endif
