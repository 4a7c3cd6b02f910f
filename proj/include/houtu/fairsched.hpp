#ifndef HOUTU_FAIRSCHED_HPP
#define HOUTU_FAIRSCHED_HPP

#include <algorithm>
#include <functional>
#include <map>
#include <set>
#include <vector>

#include "houtu/model.hpp"

namespace houtu::fairsched {

// Progressive-filling max-min fairness capped by desire: repeatedly grant one
// container to the sub-job holding the fewest grants among those still below
// their desire; ties go to the smallest key.
inline std::map<int, int> allocate(const std::map<int, int>& desires, int capacity) {
    std::map<int, int> grants;
    for (const auto& [k, d] : desires) {
        (void)d;
        grants[k] = 0;
    }
    int remaining = capacity;
    while (remaining > 0) {
        int best = -1;
        int best_grant = 0;
        for (const auto& [k, g] : grants) {
            if (g >= desires.at(k)) continue;
            if (best == -1 || g < best_grant) {
                best = k;
                best_grant = g;
            }
        }
        if (best == -1) break;  // every desire satisfied
        ++grants[best];
        --remaining;
    }
    return grants;
}

struct AllocationPlan {
    // New container ids granted per sub-job this boundary.
    std::map<int, std::vector<int>> grants;
    // Surplus containers released immediately (they were idle).
    std::map<int, std::vector<int>> reclaim_now;
    // Surplus containers still running tasks: they accept no new tasks and
    // are released when their current tasks complete.
    std::map<int, std::vector<int>> reclaim_deferred;
};

// Turns target counts into concrete container movements.
//   held:        containers currently held per sub-job (excluding ones already
//                pending reclamation)
//   next_counts: output of allocate()
//   free_pool:   grantable container ids
//   is_idle:     true when a held container runs no task right now
//   node_of:     container id -> node id
//   preferred:   per sub-job, nodes hosting its waiting tasks' input data
//   busy_rank:   ordering key approximating "becomes free first" for busy
//                containers (smaller = sooner)
inline AllocationPlan reconcile(const std::map<int, std::vector<int>>& held,
                                const std::map<int, int>& next_counts,
                                std::vector<int> free_pool,
                                const std::function<bool(int)>& is_idle,
                                const std::function<int(int)>& node_of,
                                const std::map<int, std::set<int>>& preferred,
                                const std::function<Time(int)>& busy_rank) {
    AllocationPlan plan;
    std::sort(free_pool.begin(), free_pool.end());

    // Shrinks first so reclaimed idle containers can be re-granted below.
    for (const auto& [sj, containers] : held) {
        int target = 0;
        if (auto it = next_counts.find(sj); it != next_counts.end()) target = it->second;
        int surplus = static_cast<int>(containers.size()) - target;
        if (surplus <= 0) continue;

        std::vector<int> idle, busy;
        for (int c : containers) (is_idle(c) ? idle : busy).push_back(c);
        std::sort(idle.begin(), idle.end());
        std::sort(busy.begin(), busy.end(), [&](int a, int b) {
            Time ra = busy_rank(a), rb = busy_rank(b);
            return ra != rb ? ra < rb : a < b;
        });
        for (int c : idle) {
            if (surplus == 0) break;
            plan.reclaim_now[sj].push_back(c);
            free_pool.push_back(c);
            --surplus;
        }
        for (int c : busy) {
            if (surplus == 0) break;
            plan.reclaim_deferred[sj].push_back(c);
            --surplus;
        }
    }
    std::sort(free_pool.begin(), free_pool.end());

    // Grants, smallest sub-job key first; each grant prefers a container on a
    // preferred node (helps the node-local tier), then lowest id.
    std::vector<std::pair<int, int>> deficits;  // (sub-job, count)
    for (const auto& [sj, target] : next_counts) {
        int have = 0;
        if (auto it = held.find(sj); it != held.end())
            have = static_cast<int>(it->second.size());
        if (auto it = plan.reclaim_now.find(sj); it != plan.reclaim_now.end())
            have -= static_cast<int>(it->second.size());
        if (auto it = plan.reclaim_deferred.find(sj); it != plan.reclaim_deferred.end())
            have -= static_cast<int>(it->second.size());
        if (target > have) deficits.emplace_back(sj, target - have);
    }
    for (auto& [sj, want] : deficits) {
        const std::set<int>* pref = nullptr;
        if (auto it = preferred.find(sj); it != preferred.end()) pref = &it->second;
        while (want > 0 && !free_pool.empty()) {
            std::size_t pick = 0;
            if (pref) {
                for (std::size_t i = 0; i < free_pool.size(); ++i) {
                    if (pref->count(node_of(free_pool[i]))) {
                        pick = i;
                        break;
                    }
                }
            }
            plan.grants[sj].push_back(free_pool[pick]);
            free_pool.erase(free_pool.begin() + static_cast<std::ptrdiff_t>(pick));
            --want;
        }
    }
    return plan;
}

}  // namespace houtu::fairsched

#endif
