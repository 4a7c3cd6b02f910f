#ifndef HOUTU_SCENARIO_HPP
#define HOUTU_SCENARIO_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "houtu/cost.hpp"
#include "houtu/model.hpp"
#include "houtu/workload.hpp"

namespace houtu::sim {

enum class Deployment { Houtu, DecentStat, CentStat, CentDyna };

inline const char* to_string(Deployment d) {
    switch (d) {
        case Deployment::Houtu: return "houtu";
        case Deployment::DecentStat: return "decent-stat";
        case Deployment::CentStat: return "cent-stat";
        case Deployment::CentDyna: return "cent-dyna";
    }
    return "?";
}

inline Deployment deployment_from_string(const std::string& s) {
    if (s == "houtu") return Deployment::Houtu;
    if (s == "decent-stat") return Deployment::DecentStat;
    if (s == "cent-stat") return Deployment::CentStat;
    if (s == "cent-dyna") return Deployment::CentDyna;
    throw std::invalid_argument("unknown deployment: " + s);
}

struct KillEvent {
    enum class Target { PrimaryJm, SemiActiveJm, Node };
    Target target = Target::PrimaryJm;
    int job = 0;      // which job's JM to hit
    int dc = -1;      // for sJM kills: which data center (-1 = lowest-id sJM)
    int node = -1;    // for raw node kills
    Time at = 0;
};

struct FailureSpec {
    std::vector<KillEvent> kills;
    double spot_rate_per_hour = 0.0;  // per Spot host, exponential terminations
};

struct InjectSpec {
    Time at = -1;  // < 0 disables
    Time duration = 200 * kMicrosPerSecond;
    std::vector<int> dcs;
};

struct Delays {
    Time detection = 5 * kMicrosPerSecond;
    Time spawn = 10 * kMicrosPerSecond;
    double store_mean_s = 0.1;     // replica propagation per update
    double steal_mean_s = 0.1635;  // one-way steal message
};

struct ScenarioConfig {
    model::ClusterTopology topology;
    model::SchedulerParams params;
    Deployment deployment = Deployment::Houtu;
    bool stealing = true;
    int static_desire = 0;  // for *-stat deployments; 0 = half the domain
    std::vector<model::DagJob> jobs;  // explicit workload (release_time set)
    std::optional<GeneratorSpec> generator;
    FailureSpec failures;
    InjectSpec inject;
    PriceTable prices;
    Delays delays;
    std::uint64_t seed = 0;
    Time max_sim_time = 86'400 * kMicrosPerSecond;
};

}  // namespace houtu::sim

#endif
