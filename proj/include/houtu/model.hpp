#ifndef HOUTU_MODEL_HPP
#define HOUTU_MODEL_HPP

#include <algorithm>
#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "houtu/time.hpp"

namespace houtu::model {

// ---------------------------------------------------------------------------
// Cluster topology
// ---------------------------------------------------------------------------

enum class Reliability { Reliable, Spot };

struct LinkModel {
    double mean_mbps = 0.0;
    double stddev_mbps = 0.0;
    double floor_mbps = 1.0;

    void validate() const {
        if (mean_mbps <= 0.0) throw std::invalid_argument("link mean must be > 0");
        if (stddev_mbps < 0.0) throw std::invalid_argument("link stddev must be >= 0");
        if (floor_mbps <= 0.0 || floor_mbps > mean_mbps)
            throw std::invalid_argument("link floor must be in (0, mean]");
    }
};

struct Container {
    int id = -1;
    int node_id = -1;
    int rack_id = -1;
    int dc_id = -1;
    double capacity = 1.0;
    double free = 1.0;
    Reliability reliability = Reliability::Spot;
    bool alive = true;
};

struct Node {
    int id = -1;
    std::string name;
    int rack_id = -1;
    int dc_id = -1;
    Reliability reliability = Reliability::Spot;
    std::vector<int> containers;
    bool alive = true;
};

struct Rack {
    int id = -1;
    std::string name;
    int dc_id = -1;
    std::vector<int> nodes;
};

struct DataCenter {
    int id = -1;
    std::string name;
    LinkModel lan;
    std::vector<int> racks;
    std::vector<int> nodes;
    std::vector<int> containers;
};

struct ClusterTopology {
    std::vector<DataCenter> datacenters;
    std::vector<Rack> racks;
    std::vector<Node> nodes;
    std::vector<Container> containers;
    std::map<std::pair<int, int>, LinkModel> wan_links;

    int total_containers() const { return static_cast<int>(containers.size()); }

    int alive_containers_in(int dc) const {
        int n = 0;
        for (int c : datacenters.at(static_cast<std::size_t>(dc)).containers)
            if (containers[static_cast<std::size_t>(c)].alive) ++n;
        return n;
    }

    bool same_rack(int node_a, int node_b) const {
        return nodes.at(static_cast<std::size_t>(node_a)).rack_id ==
               nodes.at(static_cast<std::size_t>(node_b)).rack_id;
    }

    const LinkModel& link_between(int dc_a, int dc_b) const {
        if (dc_a == dc_b) return datacenters.at(static_cast<std::size_t>(dc_a)).lan;
        auto it = wan_links.find({std::min(dc_a, dc_b), std::max(dc_a, dc_b)});
        if (it == wan_links.end()) throw std::runtime_error("no WAN link between data centers");
        return it->second;
    }

    void validate() const {
        if (datacenters.empty()) throw std::invalid_argument("topology needs at least one data center");
        for (const auto& dc : datacenters) {
            if (dc.nodes.empty()) throw std::invalid_argument("data center has no nodes");
        }
        std::set<int> container_ids;
        for (const auto& c : containers) {
            if (!container_ids.insert(c.id).second)
                throw std::invalid_argument("duplicate container id");
            if (c.free < -1e-12 || c.free > c.capacity + 1e-12)
                throw std::invalid_argument("container free outside [0, capacity]");
        }
        for (const auto& n : nodes) {
            const auto& rack = racks.at(static_cast<std::size_t>(n.rack_id));
            if (rack.dc_id != n.dc_id) throw std::invalid_argument("node rack/dc mismatch");
        }
        for (std::size_t a = 0; a < datacenters.size(); ++a)
            for (std::size_t b = a + 1; b < datacenters.size(); ++b)
                link_between(static_cast<int>(a), static_cast<int>(b)).validate();
        for (const auto& dc : datacenters) dc.lan.validate();
    }
};

// ---------------------------------------------------------------------------
// Jobs and tasks
// ---------------------------------------------------------------------------

struct TaskId {
    int job = -1;
    int stage = -1;
    int index = -1;

    auto operator<=>(const TaskId&) const = default;

    std::string str() const {
        return std::to_string(job) + "." + std::to_string(stage) + "." + std::to_string(index);
    }
};

enum class TaskState { Unreleased, Waiting, Running, Done };

struct TaskInput {
    int node_id = -1;      // where this input partition lives
    double bytes = 0.0;
};

struct Task {
    TaskId id;
    double r = 0.0;          // peak requirement, normalized by container capacity
    Time p = 0;              // processing time
    std::vector<TaskInput> inputs;
    std::set<int> preferred_nodes;
    Time wait = 0;
    Time wait_accrued_at = 0;  // last time `wait` was brought up to date
    TaskState state = TaskState::Unreleased;
    int running_on = -1;     // container id while Running
    int output_node = -1;    // node holding the output while Done
    Time released_at = -1;
    Time started_at = -1;
    Time finished_at = -1;

    void refresh_preferred() {
        preferred_nodes.clear();
        for (const auto& in : inputs) preferred_nodes.insert(in.node_id);
    }
};

struct Stage {
    int id = -1;
    std::vector<int> predecessors;
    std::vector<Task> tasks;
    double input_bytes_per_task = 0.0;  // used when deriving inputs for non-root stages

    bool done() const {
        return std::all_of(tasks.begin(), tasks.end(),
                           [](const Task& t) { return t.state == TaskState::Done; });
    }
};

struct DagJob {
    int id = -1;
    std::string name;
    std::vector<Stage> stages;
    Time release_time = 0;
    std::optional<Time> completion_time;
    bool aborted = false;

    Task& task(const TaskId& tid) {
        return stages.at(static_cast<std::size_t>(tid.stage)).tasks.at(static_cast<std::size_t>(tid.index));
    }
    const Task& task(const TaskId& tid) const {
        return stages.at(static_cast<std::size_t>(tid.stage)).tasks.at(static_cast<std::size_t>(tid.index));
    }

    bool all_done() const {
        return std::all_of(stages.begin(), stages.end(), [](const Stage& s) { return s.done(); });
    }

    std::size_t task_count() const {
        std::size_t n = 0;
        for (const auto& s : stages) n += s.tasks.size();
        return n;
    }
};

struct SchedulerParams {
    double delta = 0.5;   // utilization threshold
    double rho = 2.0;     // desire adjustment factor
    double tau = 0.1;     // waiting time factor (thresholds tau*p, 2*tau*p)
    double theta = 0.05;  // minimum task requirement
    Time period = 10 * kMicrosPerSecond;  // L

    void validate() const {
        if (delta <= 0.0 || delta >= 1.0) throw std::invalid_argument("delta must be in (0,1)");
        if (rho <= 1.0) throw std::invalid_argument("rho must be > 1");
        if (tau <= 0.0) throw std::invalid_argument("tau must be > 0");
        if (theta <= 0.0) throw std::invalid_argument("theta must be > 0");
        if (period <= 0) throw std::invalid_argument("period must be > 0");
    }
};

// Acyclicity via repeated frontier peeling.
inline void check_acyclic(const DagJob& job) {
    std::set<int> done;
    bool progress = true;
    while (progress) {
        progress = false;
        for (const auto& s : job.stages) {
            if (done.count(s.id)) continue;
            bool ready = std::all_of(s.predecessors.begin(), s.predecessors.end(),
                                     [&](int p) { return done.count(p) > 0; });
            if (ready) {
                done.insert(s.id);
                progress = true;
            }
        }
    }
    if (done.size() != job.stages.size()) throw std::invalid_argument("stage graph has a cycle");
}

// Admission checks: acyclic DAG, homogeneous stages, r within [theta, 1-delta],
// and every task must fit an existing container.
inline void admit_job(const DagJob& job, const SchedulerParams& params, double max_container_capacity = 1.0) {
    check_acyclic(job);
    for (const auto& s : job.stages) {
        for (const auto& t : s.tasks) {
            if (t.r < params.theta - 1e-12)
                throw std::invalid_argument("task r below theta: " + t.id.str());
            if (t.r + params.delta > 1.0 + 1e-12)
                throw std::invalid_argument("task r + delta exceeds 1: " + t.id.str());
            if (t.r > max_container_capacity + 1e-12)
                throw std::invalid_argument("task can never fit a container: " + t.id.str());
            if (!s.tasks.empty() && (t.r != s.tasks.front().r || t.p != s.tasks.front().p))
                throw std::invalid_argument("heterogeneous stage rejected: stage " + std::to_string(s.id));
        }
    }
}

// ---------------------------------------------------------------------------
// Metric operations
// ---------------------------------------------------------------------------

// T1(J) = sum over tasks of r*p, in resource-seconds.
inline double job_work(const DagJob& job) {
    double w = 0.0;
    for (const auto& s : job.stages)
        for (const auto& t : s.tasks) w += t.r * to_seconds(t.p);
    return w;
}

// Transition every Unreleased task whose predecessor stages are all Done to
// Waiting. Returns the released task ids.
inline std::vector<TaskId> release_ready_tasks(DagJob& job, Time now) {
    std::vector<TaskId> released;
    for (auto& s : job.stages) {
        bool preds_done = std::all_of(s.predecessors.begin(), s.predecessors.end(), [&](int p) {
            return job.stages.at(static_cast<std::size_t>(p)).done();
        });
        if (!preds_done) continue;
        for (auto& t : s.tasks) {
            if (t.state == TaskState::Unreleased) {
                t.state = TaskState::Waiting;
                t.wait = 0;
                t.released_at = now;
                released.push_back(t.id);
            }
        }
    }
    return released;
}

inline Time makespan(const std::vector<DagJob>& jobs) {
    Time m = 0;
    for (const auto& j : jobs) {
        if (!j.completion_time) throw std::runtime_error("makespan on incomplete job set");
        m = std::max(m, *j.completion_time);
    }
    return m;
}

inline double avg_response_time(const std::vector<DagJob>& jobs) {
    if (jobs.empty()) throw std::invalid_argument("avg_response_time on empty job set");
    double sum = 0.0;
    for (const auto& j : jobs) {
        if (!j.completion_time) throw std::runtime_error("avg_response_time on incomplete job set");
        sum += to_seconds(*j.completion_time - j.release_time);
    }
    return sum / static_cast<double>(jobs.size());
}

}  // namespace houtu::model

#endif
