#ifndef HOUTU_PARADES_HPP
#define HOUTU_PARADES_HPP

#include <algorithm>
#include <cmath>
#include <map>
#include <vector>

#include "houtu/model.hpp"

namespace houtu::parades {

enum class Locality { NodeLocal, RackLocal, Remote, Stolen };

inline const char* to_string(Locality l) {
    switch (l) {
        case Locality::NodeLocal: return "node";
        case Locality::RackLocal: return "rack";
        case Locality::Remote: return "remote";
        case Locality::Stolen: return "stolen";
    }
    return "?";
}

inline Locality locality_of(const model::Task& task, const model::Container& n,
                            const model::ClusterTopology& topo) {
    if (task.preferred_nodes.empty()) return Locality::NodeLocal;  // no data, no affinity
    if (task.preferred_nodes.count(n.node_id)) return Locality::NodeLocal;
    for (int pref : task.preferred_nodes)
        if (topo.nodes.at(static_cast<std::size_t>(pref)).rack_id == n.rack_id)
            return Locality::RackLocal;
    return Locality::Remote;
}

// Largest-remainder apportionment of a stage's tasks proportional to input
// bytes per data center. All-zero distribution sends everything to the pJM's
// data center.
inline std::map<int, int> initial_assignment(int task_count,
                                             const std::map<int, double>& bytes_per_dc,
                                             int pjm_dc) {
    std::map<int, int> counts;
    double total = 0.0;
    for (const auto& [dc, b] : bytes_per_dc) {
        (void)dc;
        total += b;
    }
    if (total <= 0.0) {
        counts[pjm_dc] = task_count;
        return counts;
    }
    int assigned = 0;
    std::vector<std::pair<double, int>> remainders;  // (-fraction, dc) for sorting
    for (const auto& [dc, b] : bytes_per_dc) {
        double quota = static_cast<double>(task_count) * b / total;
        int whole = static_cast<int>(std::floor(quota + 1e-9));
        counts[dc] = whole;
        assigned += whole;
        remainders.emplace_back(-(quota - whole), dc);
    }
    std::sort(remainders.begin(), remainders.end());
    for (int i = 0; i < task_count - assigned; ++i)
        ++counts[remainders[static_cast<std::size_t>(i)].second];
    return counts;
}

struct Placement {
    model::TaskId task;
    Locality tier = Locality::Remote;
    Time wait = 0;       // task wait at placement time
    double pre_free = 0.0;  // container free before this placement
    double r = 0.0;
    Time p = 0;
};

// The placement loop of the UPDATE handler: repeatedly pick a node-local task
// that fits; else a rack-local task past tau*p; else any task past 2*tau*p
// when free >= 1-delta. Picked tasks are removed from `waiting` and `free` is
// decremented. Within a tier, the longest-waiting task wins, ties by id.
inline std::vector<Placement> pick_placements(std::vector<model::Task*>& waiting,
                                              const model::Container& n, double& free,
                                              const model::ClusterTopology& topo,
                                              const model::SchedulerParams& params) {
    std::vector<Placement> out;
    auto take = [&](std::size_t i, Locality tier) {
        model::Task* t = waiting[i];
        out.push_back({t->id, tier, t->wait, free, t->r, t->p});
        free -= t->r;
        waiting.erase(waiting.begin() + static_cast<std::ptrdiff_t>(i));
    };
    auto better = [](const model::Task* a, const model::Task* b) {
        return a->wait != b->wait ? a->wait > b->wait : a->id < b->id;
    };

    bool cont = true;
    while (free > 1e-12 && cont) {
        cont = false;
        std::size_t best = waiting.size();
        Locality best_tier = Locality::Remote;
        for (std::size_t i = 0; i < waiting.size(); ++i) {
            const model::Task* t = waiting[i];
            if (locality_of(*t, n, topo) != Locality::NodeLocal) continue;
            if (t->r > free + 1e-12) continue;
            if (best == waiting.size() || better(t, waiting[best])) {
                best = i;
                best_tier = Locality::NodeLocal;
            }
        }
        if (best == waiting.size()) {
            for (std::size_t i = 0; i < waiting.size(); ++i) {
                const model::Task* t = waiting[i];
                if (locality_of(*t, n, topo) != Locality::RackLocal) continue;
                if (t->r > free + 1e-12) continue;
                if (to_seconds(t->wait) + 1e-12 < params.tau * to_seconds(t->p)) continue;
                if (best == waiting.size() || better(t, waiting[best])) {
                    best = i;
                    best_tier = Locality::RackLocal;
                }
            }
        }
        if (best == waiting.size() && free + 1e-12 >= 1.0 - params.delta) {
            for (std::size_t i = 0; i < waiting.size(); ++i) {
                const model::Task* t = waiting[i];
                if (t->r > free + 1e-12) continue;
                if (to_seconds(t->wait) + 1e-12 < 2.0 * params.tau * to_seconds(t->p)) continue;
                if (best == waiting.size() || better(t, waiting[best])) {
                    best = i;
                    best_tier = Locality::Remote;
                }
            }
        }
        if (best != waiting.size()) {
            take(best, best_tier);
            cont = true;
        }
    }
    return out;
}

}  // namespace houtu::parades

#endif
