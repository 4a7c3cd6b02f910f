#ifndef HOUTU_COORD_HPP
#define HOUTU_COORD_HPP

#include <cstdint>
#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "houtu/model.hpp"

namespace houtu::coord {

enum class Role { Primary, SemiActive };
enum class JmStatus { Alive, Failed, Recovering };

inline const char* to_string(Role r) { return r == Role::Primary ? "pJM" : "sJM"; }

struct JmState {
    int id = -1;
    int dc = -1;
    Role role = Role::SemiActive;
    JmStatus status = JmStatus::Alive;
    int host_node = -1;
    int epoch = 0;  // bumped on regeneration; stale steal replies are discarded
};

struct ExecutorEntry {
    int container = -1;
    int jm = -1;
    Role role = Role::SemiActive;
};

// The replicated job state: enough to take over a failed JM without
// re-executing completed work.
struct IntermediateInfo {
    int job = -1;
    std::set<int> frontier_stages;
    std::vector<ExecutorEntry> executor_list;
    std::map<model::TaskId, int> task_map;        // task -> owning data center
    std::map<model::TaskId, int> partition_list;  // done task -> output node
    std::map<int, Role> jm_roles;
};

struct InfoUpdate {
    enum class Kind {
        PartitionDone,
        PartitionInvalidated,
        TaskReassigned,
        ExecutorAdd,
        ExecutorRemove,
        ExecutorReassign,
        RoleChange,
        StageFrontier,
    };
    std::int64_t seq = 0;  // assigned by the store
    Kind kind = Kind::PartitionDone;
    model::TaskId task;
    int node = -1;
    int dc = -1;
    int container = -1;
    int jm = -1;
    Role role = Role::SemiActive;
    std::set<int> stages;

    std::string kind_str() const {
        switch (kind) {
            case Kind::PartitionDone: return "partition-done";
            case Kind::PartitionInvalidated: return "partition-invalidated";
            case Kind::TaskReassigned: return "task-reassigned";
            case Kind::ExecutorAdd: return "executor-add";
            case Kind::ExecutorRemove: return "executor-remove";
            case Kind::ExecutorReassign: return "executor-reassign";
            case Kind::RoleChange: return "role-change";
            case Kind::StageFrontier: return "stage-frontier";
        }
        return "?";
    }
};

// Deterministic state transition; sequence handling (idempotence, ordering)
// lives in Replica.
inline void apply_update(IntermediateInfo& info, const InfoUpdate& u) {
    switch (u.kind) {
        case InfoUpdate::Kind::PartitionDone:
            info.partition_list[u.task] = u.node;
            break;
        case InfoUpdate::Kind::PartitionInvalidated:
            info.partition_list.erase(u.task);
            break;
        case InfoUpdate::Kind::TaskReassigned:
            info.task_map[u.task] = u.dc;
            break;
        case InfoUpdate::Kind::ExecutorAdd:
            info.executor_list.push_back({u.container, u.jm, u.role});
            break;
        case InfoUpdate::Kind::ExecutorRemove:
            std::erase_if(info.executor_list,
                          [&](const ExecutorEntry& e) { return e.container == u.container; });
            break;
        case InfoUpdate::Kind::ExecutorReassign:
            for (auto& e : info.executor_list)
                if (e.container == u.container) e.jm = u.jm;
            break;
        case InfoUpdate::Kind::RoleChange:
            info.jm_roles[u.jm] = u.role;
            break;
        case InfoUpdate::Kind::StageFrontier:
            info.frontier_stages = u.stages;
            break;
    }
}

// One data center's view of the replicated log. Updates arrive with sequence
// numbers; duplicates are dropped, gaps are buffered until filled.
struct Replica {
    IntermediateInfo info;
    std::int64_t applied = 0;
    std::map<std::int64_t, InfoUpdate> pending;

    void deliver(const InfoUpdate& u) {
        if (u.seq <= applied) return;  // redelivered duplicate
        pending[u.seq] = u;
        while (!pending.empty() && pending.begin()->first == applied + 1) {
            apply_update(info, pending.begin()->second);
            applied = pending.begin()->first;
            pending.erase(pending.begin());
        }
    }
};

// Totally-ordered replicated log for one job, one replica per data center.
// The canonical info applies every update immediately; replicas lag by the
// store propagation delay (delivery is driven by the simulator).
class ConsistentStore {
public:
    explicit ConsistentStore(int job, const std::vector<int>& dcs) {
        canonical_.info.job = job;
        for (int dc : dcs) {
            replicas_[dc].info.job = job;
        }
    }

    std::int64_t append(InfoUpdate u) {
        u.seq = static_cast<std::int64_t>(log_.size()) + 1;
        log_.push_back(u);
        canonical_.deliver(u);
        return u.seq;
    }

    void deliver_to(int dc, std::int64_t seq) {
        if (seq < 1 || seq > static_cast<std::int64_t>(log_.size()))
            throw std::out_of_range("store seq out of range");
        replicas_.at(dc).deliver(log_[static_cast<std::size_t>(seq - 1)]);
    }

    const IntermediateInfo& info() const { return canonical_.info; }
    const IntermediateInfo& replica(int dc) const { return replicas_.at(dc).info; }
    std::int64_t size() const { return static_cast<std::int64_t>(log_.size()); }
    const InfoUpdate& at(std::int64_t seq) const {
        return log_.at(static_cast<std::size_t>(seq - 1));
    }

private:
    std::vector<InfoUpdate> log_;
    Replica canonical_;
    std::map<int, Replica> replicas_;
};

// Lowest data-center id among live semi-active JMs wins.
inline int elect_primary(const std::vector<JmState>& jms) {
    int winner = -1;
    for (const auto& jm : jms) {
        if (jm.status != JmStatus::Alive || jm.role != Role::SemiActive) continue;
        if (winner == -1 || jm.dc < jms[static_cast<std::size_t>(winner)].dc) winner = jm.id;
    }
    if (winner == -1) throw std::runtime_error("no live semi-active job manager to elect");
    return winner;
}

// Recomputation set after losing a node: Done tasks whose outputs lived on the
// dead node and are still needed -- by an incomplete consumer, by a consumer
// that itself must be recomputed, or because the stage is terminal (its output
// is the job result).
inline std::vector<model::TaskId> lost_output_rollback(const model::DagJob& job, int dead_node) {
    std::vector<model::TaskId> lost;
    for (const auto& s : job.stages)
        for (const auto& t : s.tasks)
            if (t.state == model::TaskState::Done && t.output_node == dead_node)
                lost.push_back(t.id);
    if (lost.empty() || job.all_done()) return {};

    std::map<int, std::vector<int>> successors;  // stage -> consumer stages
    for (const auto& s : job.stages)
        for (int p : s.predecessors) successors[p].push_back(s.id);

    std::set<model::TaskId> recompute;
    bool changed = true;
    while (changed) {
        changed = false;
        for (const auto& tid : lost) {
            if (recompute.count(tid)) continue;
            const auto& succ = successors[tid.stage];
            bool needed = succ.empty();  // terminal output
            for (int ss : succ) {
                for (const auto& ct : job.stages[static_cast<std::size_t>(ss)].tasks) {
                    if (ct.state != model::TaskState::Done || recompute.count(ct.id)) {
                        needed = true;
                        break;
                    }
                }
                if (needed) break;
            }
            if (needed) {
                recompute.insert(tid);
                changed = true;
            }
        }
    }
    return {recompute.begin(), recompute.end()};
}

}  // namespace houtu::coord

#endif
