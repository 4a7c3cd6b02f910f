#ifndef HOUTU_ENGINE_HPP
#define HOUTU_ENGINE_HPP

#include <algorithm>
#include <cassert>
#include <map>
#include <memory>
#include <optional>
#include <queue>
#include <set>
#include <string>
#include <tuple>
#include <vector>

#include "houtu/af.hpp"
#include "houtu/bandwidth.hpp"
#include "houtu/bound.hpp"
#include "houtu/coord.hpp"
#include "houtu/cost.hpp"
#include "houtu/fairsched.hpp"
#include "houtu/model.hpp"
#include "houtu/parades.hpp"
#include "houtu/rng.hpp"
#include "houtu/scenario.hpp"
#include "houtu/workload.hpp"

namespace houtu::sim {

// ---------------------------------------------------------------------------
// Trace rows and the report
// ---------------------------------------------------------------------------

struct PlacementRow {
    Time t = 0;
    int job = -1;
    model::TaskId task;
    int jm = -1;
    int dc = -1;
    int container = -1;
    parades::Locality tier = parades::Locality::Remote;
    Time wait = 0;
    double r = 0.0;
    Time p = 0;
    double pre_free = 0.0;
};

struct PeriodRow {
    Time t = 0;
    int dc = -1;
    int job = -1;
    int jm = -1;
    int q = 0;
    int desire = 0;
    int allocation = 0;
    double utilization = 0.0;
    af::PeriodClass cls = af::PeriodClass::EfficientSatisfied;
    int granted = 0;
    int reclaimed = 0;
};

struct ProtocolRow {
    Time t = 0;
    int job = -1;
    std::string event;
    std::string actor;
    std::string payload;  // compact JSON object fragment
};

struct RecoveryEntry {
    int job = -1;
    int jm = -1;
    int dc = -1;
    bool was_primary = false;
    Time killed_at = -1;
    Time detected_at = -1;
    Time replaced_at = -1;
    std::vector<model::TaskId> reexecuted;
};

struct JobMetrics {
    int id = -1;
    std::string name;
    Time release = 0;
    std::optional<Time> completion;
    bool aborted = false;
};

struct StealStats {
    long requests = 0;
    long grants = 0;
    long tasks_stolen = 0;
    double total_message_delay_s = 0.0;
    long messages = 0;
};

struct MetricsReport {
    bool ok = false;
    std::string error;
    std::optional<Time> makespan;
    std::optional<double> avg_response_s;
    std::vector<JobMetrics> jobs;
    double machine_cost = 0.0;
    double transfer_cost = 0.0;
    double cross_dc_bytes = 0.0;
    std::optional<double> bound_s;
    std::optional<bool> bound_ok;
    StealStats steals;
    std::vector<RecoveryEntry> recoveries;
    // task-seconds spent Waiting, per data center, after the injection time
    std::map<int, double> post_inject_wait_s;
};

// ---------------------------------------------------------------------------
// Simulator
// ---------------------------------------------------------------------------

class Simulator {
public:
    explicit Simulator(ScenarioConfig cfg)
        : cfg_(std::move(cfg)),
          topo_(cfg_.topology),
          rng_bw_(Rng::stream(cfg_.seed, "bandwidth")),
          rng_msg_(Rng::stream(cfg_.seed, "messages")),
          rng_fail_(Rng::stream(cfg_.seed, "failures")),
          rng_wl_(Rng::stream(cfg_.seed, "workload")) {
        cfg_.params.validate();
        topo_.validate();
        decentralized_ = cfg_.deployment == Deployment::Houtu ||
                         cfg_.deployment == Deployment::DecentStat;
        af_enabled_ = cfg_.deployment == Deployment::Houtu ||
                      cfg_.deployment == Deployment::CentDyna;
        stealing_ = cfg_.stealing && decentralized_;

        jobs_ = cfg_.jobs;
        if (cfg_.generator)
            for (auto& j : generate_workload(*cfg_.generator, topo_, cfg_.params, rng_wl_))
                jobs_.push_back(std::move(j));
        for (auto& j : jobs_) model::admit_job(j, cfg_.params);

        owner_.assign(topo_.containers.size(), kFree);
        running_.assign(topo_.containers.size(), {});
        node_killed_at_.assign(topo_.nodes.size(), -1);
    }

    MetricsReport run() {
        schedule_initial_events();
        while (!events_.empty()) {
            Event ev = events_.top();
            events_.pop();
            if (ev.t > cfg_.max_sim_time) {
                report_.error = "max simulation time exceeded";
                break;
            }
            now_ = std::max(now_, ev.t);
            dispatch(ev);
        }
        finalize_report();
        return report_;
    }

    const std::vector<PlacementRow>& placements() const { return placements_; }
    const std::vector<PeriodRow>& periods() const { return periods_; }
    const std::vector<ProtocolRow>& protocol() const { return protocol_; }
    const std::vector<model::DagJob>& jobs() const { return jobs_; }
    const model::ClusterTopology& topology() const { return topo_; }
    const coord::ConsistentStore& job_store(int j) const {
        return *stores_[static_cast<std::size_t>(j)];
    }
    int live_primaries(int j) const {
        int n = 0;
        for (int id : job_jms_[static_cast<std::size_t>(j)]) {
            const auto& m = jms_[static_cast<std::size_t>(id)];
            if (m.status == coord::JmStatus::Alive && m.role == coord::Role::Primary) ++n;
        }
        return n;
    }

private:
    static constexpr int kFree = -1;
    static constexpr int kSeized = -2;  // held by injected background load
    static constexpr int kDead = -3;

    enum class EvKind {
        Arrival,
        Boundary,
        UtilTick,
        TaskFinish,
        StealRequest,
        StealReply,
        NodeKill,
        Detect,
        Spawn,
        SpawnRestarted,
        Restart,
        Inject,
        InjectEnd,
        StoreDeliver,
    };

    struct Event {
        Time t = 0;
        std::int64_t seq = 0;
        EvKind kind = EvKind::Arrival;
        int a = -1, b = -1, c = -1;
        std::int64_t e = 0;
        model::TaskId task;
        bool operator>(const Event& o) const { return std::tie(t, seq) > std::tie(o.t, o.seq); }
    };

    enum class JobPhase { Pending, Active, Done, Aborted };

    struct Jm {
        int id = -1;
        int job = -1;
        int dc = -1;
        coord::Role role = coord::Role::SemiActive;
        coord::JmStatus status = coord::JmStatus::Alive;
        int host_node = -1;
        int epoch = 0;
        std::vector<int> held;
        std::set<int> reclaiming;
        int q = 0;  // completed periods
        std::optional<af::PeriodRecord> last;
        int desire = 1;
        int alloc = 0;   // fair scheduler's grant for the current period
        int target = 0;  // same value; cap for mid-period top-ups
        double util_sum = 0.0;
        long util_n = 0;
        bool had_waiting = false;
        bool steal_inflight = false;
        Time failed_at = -1;
    };

    struct RunningTask {
        model::TaskId task;
        Time finish = 0;
    };

    struct StealOp {
        int thief = -1;
        int thief_epoch = 0;
        int container = -1;
        int job = -1;
        std::vector<int> victims;
        std::size_t idx = 0;
        std::vector<model::TaskId> granted;
    };

    // --- scheduling plumbing -------------------------------------------------

    void schedule(Time t, EvKind kind, int a = -1, int b = -1, int c = -1,
                  std::int64_t e = 0, model::TaskId task = {}) {
        events_.push({std::max(t, now_), next_seq_++, kind, a, b, c, e, task});
    }

    void dispatch(const Event& ev) {
        switch (ev.kind) {
            case EvKind::Arrival: on_arrival(ev.a); break;
            case EvKind::Boundary: on_boundary(); break;
            case EvKind::UtilTick: on_util_tick(); break;
            case EvKind::TaskFinish: on_task_finish(ev.task, ev.a, ev.b); break;
            case EvKind::StealRequest: on_steal_request(static_cast<std::size_t>(ev.a)); break;
            case EvKind::StealReply: on_steal_reply(static_cast<std::size_t>(ev.a)); break;
            case EvKind::NodeKill: on_node_kill(ev.a, ev.b); break;
            case EvKind::Detect: on_detect(ev.a); break;
            case EvKind::Spawn: on_spawn(ev.a, ev.b, ev.c); break;
            case EvKind::SpawnRestarted: on_respawn_restarted(ev.a, ev.b, ev.c); break;
            case EvKind::Restart: on_restart(ev.a, ev.b, ev.c); break;
            case EvKind::Inject: on_inject(); break;
            case EvKind::InjectEnd: on_inject_end(); break;
            case EvKind::StoreDeliver:
                stores_[static_cast<std::size_t>(ev.a)]->deliver_to(ev.b, ev.e);
                break;
        }
    }

    void schedule_initial_events() {
        for (std::size_t i = 0; i < jobs_.size(); ++i) {
            phases_.push_back(JobPhase::Pending);
            stores_.push_back(nullptr);
            job_jms_.emplace_back();
            pending_assign_.emplace_back();
            schedule(jobs_[i].release_time, EvKind::Arrival, static_cast<int>(i));
        }
        for (std::size_t k = 0; k < cfg_.failures.kills.size(); ++k) {
            const auto& kill = cfg_.failures.kills[k];
            schedule(kill.at, EvKind::NodeKill, -1, static_cast<int>(k));
        }
        if (cfg_.failures.spot_rate_per_hour > 0.0) {
            for (const auto& n : topo_.nodes) {
                if (n.reliability != model::Reliability::Spot) continue;
                double hours = rng_fail_.exponential(1.0 / cfg_.failures.spot_rate_per_hour);
                Time t = from_seconds(hours * 3600.0);
                if (t < cfg_.max_sim_time) schedule(t, EvKind::NodeKill, n.id);
            }
        }
        if (cfg_.inject.at >= 0) schedule(cfg_.inject.at, EvKind::Inject);
    }

    // --- helpers -------------------------------------------------------------

    bool job_active(int j) const { return phases_[static_cast<std::size_t>(j)] == JobPhase::Active; }

    int domain_count() const { return decentralized_ ? static_cast<int>(topo_.datacenters.size()) : 1; }

    int domain_of_dc(int dc) const { return decentralized_ ? dc : 0; }

    std::vector<int> domain_containers(int dom) const {
        std::vector<int> out;
        for (const auto& c : topo_.containers) {
            if (!c.alive) continue;
            if (decentralized_ && c.dc_id != dom) continue;
            out.push_back(c.id);
        }
        return out;
    }

    Jm& jm(int id) { return jms_[static_cast<std::size_t>(id)]; }
    model::Container& cont(int id) { return topo_.containers[static_cast<std::size_t>(id)]; }
    model::DagJob& job(int id) { return jobs_[static_cast<std::size_t>(id)]; }
    coord::ConsistentStore& store(int j) { return *stores_[static_cast<std::size_t>(j)]; }

    int owner_dc_of(int j, const model::TaskId& tid) {
        const auto& tm = store(j).info().task_map;
        auto it = tm.find(tid);
        return it == tm.end() ? -1 : it->second;
    }

    std::vector<model::Task*> waiting_tasks(Jm& m) {
        std::vector<model::Task*> out;
        auto& jb = job(m.job);
        for (auto& s : jb.stages) {
            for (auto& t : s.tasks) {
                if (t.state != model::TaskState::Waiting) continue;
                if (in_transit_.count(t.id)) continue;
                if (decentralized_ && owner_dc_of(m.job, t.id) != m.dc) continue;
                out.push_back(&t);
            }
        }
        return out;
    }

    void accrue_waits(Jm& m) {
        for (auto* t : waiting_tasks(m)) {
            t->wait += now_ - t->wait_accrued_at;
            t->wait_accrued_at = now_;
        }
    }

    Time msg_latency(double mean_s) {
        double s = std::max(0.001, rng_msg_.normal(mean_s, 0.3 * mean_s));
        return from_seconds(s);
    }

    void append_update(int j, coord::InfoUpdate u) {
        auto seq = store(j).append(std::move(u));
        Time delay = from_seconds(std::max(0.001, rng_msg_.normal(cfg_.delays.store_mean_s,
                                                                  0.3 * cfg_.delays.store_mean_s)));
        for (const auto& dc : topo_.datacenters)
            schedule(now_ + delay, EvKind::StoreDeliver, j, dc.id, -1, seq);
    }

    void proto(int j, std::string event, std::string actor, std::string payload = "{}") {
        protocol_.push_back({now_, j, std::move(event), std::move(actor), std::move(payload)});
    }

    // --- job arrival ---------------------------------------------------------

    int submission_dc(const model::DagJob& jb) const {
        std::map<int, double> bytes;
        for (const auto& s : jb.stages)
            for (const auto& t : s.tasks)
                for (const auto& in : t.inputs)
                    bytes[topo_.nodes[static_cast<std::size_t>(in.node_id)].dc_id] += in.bytes;
        int best = 0;
        double best_bytes = -1.0;
        for (const auto& dc : topo_.datacenters) {
            double b = bytes.count(dc.id) ? bytes[dc.id] : 0.0;
            if (b > best_bytes) {
                best = dc.id;
                best_bytes = b;
            }
        }
        return best;
    }

    int spawn_jm(int j, int dc, coord::Role role, int epoch) {
        Jm m;
        m.id = static_cast<int>(jms_.size());
        m.job = j;
        m.dc = dc;
        m.role = role;
        m.epoch = epoch;
        m.host_node = pick_host_node(dc);
        jms_.push_back(m);
        job_jms_[static_cast<std::size_t>(j)].push_back(m.id);
        append_update(j, {.kind = coord::InfoUpdate::Kind::RoleChange, .jm = m.id, .role = role});
        proto(j, "jm-spawn", std::to_string(m.id),
              std::string("{\"dc\":") + std::to_string(dc) + ",\"role\":\"" +
                  coord::to_string(role) + "\"}");
        return m.id;
    }

    int pick_host_node(int dc) const {
        for (int n : topo_.datacenters[static_cast<std::size_t>(dc)].nodes)
            if (topo_.nodes[static_cast<std::size_t>(n)].alive) return n;
        return -1;
    }

    void on_arrival(int j) {
        auto& jb = job(j);
        phases_[static_cast<std::size_t>(j)] = JobPhase::Active;
        ++active_jobs_;
        std::vector<int> dcs;
        for (const auto& dc : topo_.datacenters) dcs.push_back(dc.id);
        stores_[static_cast<std::size_t>(j)] = std::make_unique<coord::ConsistentStore>(j, dcs);
        proto(j, "job-arrival", "master", "{\"name\":\"" + jb.name + "\"}");

        int sub_dc = submission_dc(jb);
        spawn_jm(j, sub_dc, coord::Role::Primary, 0);
        if (decentralized_)
            for (const auto& dc : topo_.datacenters)
                if (dc.id != sub_dc && !dc.containers.empty())
                    spawn_jm(j, dc.id, coord::Role::SemiActive, 0);

        release_and_assign(j);
        ensure_clocks();
    }

    void ensure_clocks() {
        if (!tick_scheduled_) {
            tick_scheduled_ = true;
            Time next = ((now_ / kMicrosPerSecond) + 1) * kMicrosPerSecond;
            schedule(next, EvKind::UtilTick);
        }
        if (!boundary_scheduled_) {
            // first allocation happens right away, not at the next multiple of L
            boundary_scheduled_ = true;
            schedule(now_, EvKind::Boundary);
        }
    }

    bool any_job_open() const {
        for (auto p : phases_)
            if (p == JobPhase::Pending || p == JobPhase::Active) return true;
        return false;
    }

    // --- stage release and initial assignment --------------------------------

    void resolve_inputs(int j, model::Stage& stage, const std::vector<model::TaskId>& released) {
        if (stage.predecessors.empty()) return;  // root inputs are pre-placed
        auto& jb = job(j);
        std::vector<int> sources;
        for (int ps : stage.predecessors)
            for (const auto& pt : jb.stages[static_cast<std::size_t>(ps)].tasks)
                if (pt.state == model::TaskState::Done && pt.output_node >= 0)
                    sources.push_back(pt.output_node);
        std::sort(sources.begin(), sources.end());
        sources.erase(std::unique(sources.begin(), sources.end()), sources.end());
        if (sources.empty()) return;
        double share = stage.input_bytes_per_task / static_cast<double>(sources.size());
        for (const auto& tid : released) {
            if (tid.stage != stage.id) continue;
            auto& t = jb.task(tid);
            t.inputs.clear();
            for (int n : sources) t.inputs.push_back({n, share});
            t.refresh_preferred();
        }
    }

    int primary_jm(int j) {
        for (int id : job_jms_[static_cast<std::size_t>(j)]) {
            auto& m = jm(id);
            if (m.status == coord::JmStatus::Alive && m.role == coord::Role::Primary) return id;
        }
        return -1;
    }

    void assign_stage(int j, int stage_id) {
        auto& jb = job(j);
        auto& stage = jb.stages[static_cast<std::size_t>(stage_id)];
        std::vector<model::Task*> unassigned;
        for (auto& t : stage.tasks)
            if (!store(j).info().task_map.count(t.id)) unassigned.push_back(&t);
        if (unassigned.empty()) return;
        int pjm = primary_jm(j);
        if (pjm < 0) {  // deferred until a new primary is elected
            pending_assign_[static_cast<std::size_t>(j)].insert(stage_id);
            return;
        }
        int pjm_dc = jm(pjm).dc;

        std::map<int, int> counts;
        if (!decentralized_) {
            counts[pjm_dc] = static_cast<int>(unassigned.size());
        } else {
            std::map<int, double> dist;
            for (const auto* t : unassigned)
                for (const auto& in : t->inputs)
                    dist[topo_.nodes[static_cast<std::size_t>(in.node_id)].dc_id] += in.bytes;
            counts = parades::initial_assignment(static_cast<int>(unassigned.size()), dist, pjm_dc);
        }

        // hand each data center the tasks with the most input bytes there
        std::set<const model::Task*> taken;
        for (const auto& [dc, cnt] : counts) {
            std::vector<std::pair<double, const model::Task*>> ranked;
            for (const auto* t : unassigned) {
                if (taken.count(t)) continue;
                double b = 0.0;
                for (const auto& in : t->inputs)
                    if (topo_.nodes[static_cast<std::size_t>(in.node_id)].dc_id == dc) b += in.bytes;
                ranked.emplace_back(-b, t);
            }
            std::sort(ranked.begin(), ranked.end(), [](const auto& a, const auto& b) {
                return a.first != b.first ? a.first < b.first : a.second->id < b.second->id;
            });
            for (int i = 0; i < cnt && i < static_cast<int>(ranked.size()); ++i) {
                const auto* t = ranked[static_cast<std::size_t>(i)].second;
                taken.insert(t);
                append_update(j, {.kind = coord::InfoUpdate::Kind::TaskReassigned,
                                  .task = t->id,
                                  .dc = dc});
            }
        }
        append_update(j, {.kind = coord::InfoUpdate::Kind::StageFrontier,
                          .stages = frontier_of(jb)});
    }

    std::set<int> frontier_of(const model::DagJob& jb) const {
        std::set<int> f;
        for (const auto& s : jb.stages)
            if (!s.done())
                f.insert(s.id);
        return f;
    }

    void release_and_assign(int j) {
        auto& jb = job(j);
        auto released = model::release_ready_tasks(jb, now_);
        if (released.empty()) return;
        std::set<int> stages;
        for (const auto& tid : released) {
            jb.task(tid).wait_accrued_at = now_;
            stages.insert(tid.stage);
        }
        for (int s : stages) {
            resolve_inputs(j, jb.stages[static_cast<std::size_t>(s)], released);
            assign_stage(j, s);
        }
        wake_idle_containers(j);
    }

    void wake_idle_containers(int j) {
        for (int id : job_jms_[static_cast<std::size_t>(j)]) {
            auto& m = jm(id);
            if (m.status != coord::JmStatus::Alive) continue;
            for (int c : m.held)
                if (running_[static_cast<std::size_t>(c)].empty() && !m.reclaiming.count(c))
                    on_update(id, c);
        }
    }

    // --- period boundary -----------------------------------------------------

    void on_boundary() {
        boundary_scheduled_ = false;
        for (int dom = 0; dom < domain_count(); ++dom) boundary_for_domain(dom);
        if (any_job_open()) {
            boundary_scheduled_ = true;
            schedule(now_ + cfg_.params.period, EvKind::Boundary);
        }
    }

    int domain_capacity(int dom) const {
        int cap = 0;
        for (int c : domain_containers(dom))
            if (owner_[static_cast<std::size_t>(c)] != kSeized) ++cap;
        return cap;
    }

    void boundary_for_domain(int dom) {
        std::vector<int> active;
        for (auto& m : jms_) {
            if (m.status != coord::JmStatus::Alive || !job_active(m.job)) continue;
            if (domain_of_dc(m.dc) != dom) continue;
            active.push_back(m.id);
        }
        if (active.empty()) return;

        int cap = domain_capacity(dom);
        std::map<int, int> desires;
        std::map<int, af::PeriodClass> classes;
        for (int id : active) {
            auto& m = jm(id);
            if (m.q >= 1) {
                af::PeriodRecord rec;
                rec.q = m.q;
                rec.desire = m.desire;
                rec.allocation = m.alloc;
                rec.utilization = m.util_n ? m.util_sum / static_cast<double>(m.util_n) : 0.0;
                rec.had_waiting_tasks = m.had_waiting;
                m.last = rec;
                classes[id] = af::classify_period(rec, cfg_.params.delta);
            }
            int d;
            if (af_enabled_) {
                d = af::next_desire(m.q >= 1 ? m.last : std::nullopt, cfg_.params, cap);
            } else {
                int st = cfg_.static_desire > 0 ? cfg_.static_desire : std::max(1, cap / 2);
                d = std::clamp(st, 1, std::max(1, cap));
            }
            m.desire = d;
            ++m.q;
            m.util_sum = 0.0;
            m.util_n = 0;
            m.had_waiting = false;
            desires[id] = d;
        }

        auto counts = fairsched::allocate(desires, cap);
        for (int id : active) {
            auto& m = jm(id);
            m.target = counts.count(id) ? counts[id] : 0;
            m.alloc = m.target;
        }

        std::map<int, std::vector<int>> held;
        std::map<int, std::set<int>> preferred;
        for (int id : active) {
            auto& m = jm(id);
            held[id] = m.held;
            std::erase_if(held[id], [&](int c) { return m.reclaiming.count(c) > 0; });
            std::set<int> pref;
            for (auto* t : waiting_tasks(m))
                pref.insert(t->preferred_nodes.begin(), t->preferred_nodes.end());
            preferred[id] = std::move(pref);
        }
        std::vector<int> pool;
        for (int c : domain_containers(dom))
            if (owner_[static_cast<std::size_t>(c)] == kFree) pool.push_back(c);

        auto plan = fairsched::reconcile(
            held, counts, pool, [&](int c) { return running_[static_cast<std::size_t>(c)].empty(); },
            [&](int c) { return cont(c).node_id; }, preferred,
            [&](int c) {
                Time worst = 0;
                for (const auto& rt : running_[static_cast<std::size_t>(c)])
                    worst = std::max(worst, rt.finish);
                return worst;
            });

        std::map<int, int> granted_n, reclaimed_n;
        for (const auto& [id, cs] : plan.reclaim_now) {
            auto& m = jm(id);
            for (int c : cs) {
                std::erase(m.held, c);
                release_container(m.job, c);
                reclaimed_n[id] += 1;
            }
        }
        for (const auto& [id, cs] : plan.reclaim_deferred) {
            auto& m = jm(id);
            for (int c : cs) {
                m.reclaiming.insert(c);
                reclaimed_n[id] += 1;
            }
        }
        std::set<std::pair<int, int>> updated;
        for (const auto& [id, cs] : plan.grants) {
            auto& m = jm(id);
            for (int c : cs) {
                // a mid-boundary top_up may already have taken this container
                // or satisfied the target
                if (owner_[static_cast<std::size_t>(c)] != kFree) continue;
                if (static_cast<int>(m.held.size() - m.reclaiming.size()) >= m.target) break;
                grant_container(m, c);
                granted_n[id] += 1;
                updated.insert({id, c});
                on_update(id, c);
            }
        }
        for (int id : active) {
            auto& m = jm(id);
            periods_.push_back({now_, m.dc, m.job, id, m.q, m.desire, m.alloc,
                                m.q >= 2 && m.last ? m.last->utilization : 0.0,
                                m.q >= 2 && m.last ? classes[id] : af::PeriodClass::EfficientSatisfied,
                                granted_n.count(id) ? granted_n[id] : 0,
                                reclaimed_n.count(id) ? reclaimed_n[id] : 0});
            for (int c : m.held)
                if (!m.reclaiming.count(c) && !updated.count({id, c})) on_update(id, c);
        }
    }

    void grant_container(Jm& m, int c) {
        owner_[static_cast<std::size_t>(c)] = m.id;
        m.held.push_back(c);
        append_update(m.job, {.kind = coord::InfoUpdate::Kind::ExecutorAdd,
                              .container = c,
                              .jm = m.id,
                              .role = m.role});
    }

    void release_container(int j, int c) {
        owner_[static_cast<std::size_t>(c)] =
            saturated_.count(cont(c).dc_id) ? kSeized : kFree;
        if (j >= 0 && stores_[static_cast<std::size_t>(j)])
            append_update(j, {.kind = coord::InfoUpdate::Kind::ExecutorRemove, .container = c});
        if (owner_[static_cast<std::size_t>(c)] == kFree) top_up(domain_of_dc(cont(c).dc_id));
    }

    // Mid-period re-grant of a freed container to the sub-job with the biggest
    // unmet share of its boundary allocation.
    void top_up(int dom) {
        while (true) {
            int free_c = -1;
            for (int c : domain_containers(dom))
                if (owner_[static_cast<std::size_t>(c)] == kFree) {
                    free_c = c;
                    break;
                }
            if (free_c < 0) return;
            int best = -1;
            for (auto& m : jms_) {
                if (m.status != coord::JmStatus::Alive || !job_active(m.job)) continue;
                if (domain_of_dc(m.dc) != dom) continue;
                int effective = static_cast<int>(m.held.size() - m.reclaiming.size());
                if (effective >= m.target) continue;
                if (best == -1 ||
                    static_cast<int>(jm(best).held.size()) > static_cast<int>(m.held.size()))
                    best = m.id;
            }
            if (best < 0) return;
            grant_container(jm(best), free_c);
            on_update(best, free_c);
        }
    }

    // --- utilization ticks ---------------------------------------------------

    void on_util_tick() {
        tick_scheduled_ = false;
        for (auto& m : jms_) {
            if (m.status != coord::JmStatus::Alive || !job_active(m.job)) continue;
            for (int c : m.held) {
                const auto& con = cont(c);
                m.util_sum += (con.capacity - con.free) / con.capacity;
                ++m.util_n;
            }
            if (!m.had_waiting && !waiting_tasks(m).empty()) m.had_waiting = true;
        }
        if (any_job_open()) {
            tick_scheduled_ = true;
            schedule(now_ + kMicrosPerSecond, EvKind::UtilTick);
        }
    }

    // --- the UPDATE event ----------------------------------------------------

    void on_update(int jm_id, int c) {
        auto& m = jm(jm_id);
        if (m.status != coord::JmStatus::Alive || !job_active(m.job)) return;
        if (owner_[static_cast<std::size_t>(c)] != jm_id || !cont(c).alive) return;
        accrue_waits(m);
        if (m.reclaiming.count(c)) {
            if (running_[static_cast<std::size_t>(c)].empty()) {
                m.reclaiming.erase(c);
                std::erase(m.held, c);
                release_container(m.job, c);
            }
            return;
        }
        auto waiting = waiting_tasks(m);
        if (waiting.empty()) {
            if (stealing_ && !m.steal_inflight && cont(c).free > cfg_.params.theta)
                start_steal(m, c);
            return;
        }
        double free_local = cont(c).free;
        auto picks = parades::pick_placements(waiting, cont(c), free_local, topo_, cfg_.params);
        for (const auto& pk : picks) place(m, pk.task, c, pk.tier, pk.pre_free);
    }

    void place(Jm& m, const model::TaskId& tid, int c, parades::Locality tier, double pre_free) {
        auto& jb = job(m.job);
        auto& t = jb.task(tid);
        assert(t.state == model::TaskState::Waiting);
        auto& con = cont(c);
        t.state = model::TaskState::Running;
        t.running_on = c;
        t.started_at = now_;
        int token = ++tokens_[tid];
        con.free -= t.r;
        if (con.free < 0.0) con.free = std::max(con.free, -1e-9);

        Time xfer = 0;
        for (const auto& in : t.inputs) {
            if (in.node_id == con.node_id || in.bytes <= 0.0) continue;
            int src_dc = topo_.nodes[static_cast<std::size_t>(in.node_id)].dc_id;
            xfer += transfer_time(in.bytes, topo_.link_between(src_dc, con.dc_id), rng_bw_);
            if (src_dc != con.dc_id) cross_dc_bytes_ += in.bytes;
        }
        Time finish = now_ + xfer + t.p;
        running_[static_cast<std::size_t>(c)].push_back({tid, finish});
        schedule(finish, EvKind::TaskFinish, c, token, -1, 0, tid);
        placements_.push_back(
            {now_, m.job, tid, m.id, m.dc, c, tier, t.wait, t.r, t.p, pre_free});
    }

    void on_task_finish(const model::TaskId& tid, int c, int token) {
        if (tokens_[tid] != token) return;  // rolled back or restarted meanwhile
        int j = tid.job;
        if (!job_active(j)) return;
        auto& jb = job(j);
        auto& t = jb.task(tid);
        if (t.state != model::TaskState::Running) return;
        auto& con = cont(c);
        t.state = model::TaskState::Done;
        t.finished_at = now_;
        t.output_node = con.node_id;
        t.running_on = -1;
        con.free = std::min(con.capacity, con.free + t.r);
        std::erase_if(running_[static_cast<std::size_t>(c)],
                      [&](const RunningTask& rt) { return rt.task == tid; });
        append_update(j, {.kind = coord::InfoUpdate::Kind::PartitionDone,
                          .task = tid,
                          .node = con.node_id});

        int owner = owner_[static_cast<std::size_t>(c)];
        if (owner >= 0) {
            auto& m = jm(owner);
            if (m.reclaiming.count(c) && running_[static_cast<std::size_t>(c)].empty()) {
                m.reclaiming.erase(c);
                std::erase(m.held, c);
                release_container(j, c);
                owner = kFree;
            }
        }

        release_and_assign(j);
        if (jb.all_done()) {
            complete_job(j);
            return;
        }
        if (owner >= 0) on_update(owner, c);
    }

    void complete_job(int j) {
        auto& jb = job(j);
        jb.completion_time = now_;
        phases_[static_cast<std::size_t>(j)] = JobPhase::Done;
        --active_jobs_;
        proto(j, "job-complete", "pJM");
        for (int id : job_jms_[static_cast<std::size_t>(j)]) {
            auto& m = jm(id);
            if (m.status != coord::JmStatus::Alive) continue;
            auto all = m.held;
            for (int c : all) {
                std::erase(m.held, c);
                m.reclaiming.erase(c);
                running_[static_cast<std::size_t>(c)].clear();
                cont(c).free = cont(c).capacity;
                release_container(j, c);
            }
        }
    }

    void abort_job(int j, const std::string& why) {
        phases_[static_cast<std::size_t>(j)] = JobPhase::Aborted;
        job(j).aborted = true;
        --active_jobs_;
        proto(j, "job-aborted", "sim", "{\"reason\":\"" + why + "\"}");
        for (int id : job_jms_[static_cast<std::size_t>(j)]) {
            auto& m = jm(id);
            auto all = m.held;
            for (int c : all) {
                std::erase(m.held, c);
                m.reclaiming.erase(c);
                if (cont(c).alive) {
                    running_[static_cast<std::size_t>(c)].clear();
                    cont(c).free = cont(c).capacity;
                    release_container(j, c);
                }
            }
        }
    }

    // --- work stealing ---------------------------------------------------------

    void start_steal(Jm& m, int c) {
        std::vector<int> victims;
        for (int id : job_jms_[static_cast<std::size_t>(m.job)]) {
            auto& v = jm(id);
            if (id == m.id || v.status != coord::JmStatus::Alive) continue;
            victims.push_back(id);
        }
        if (victims.empty()) return;
        std::sort(victims.begin(), victims.end(), [&](int a, int b) {
            auto wa = waiting_tasks(jm(a)).size();
            auto wb = waiting_tasks(jm(b)).size();
            return wa != wb ? wa > wb : jm(a).dc < jm(b).dc;
        });
        m.steal_inflight = true;
        ++steals_.requests;
        StealOp op;
        op.thief = m.id;
        op.thief_epoch = m.epoch;
        op.container = c;
        op.job = m.job;
        op.victims = std::move(victims);
        ops_.push_back(std::move(op));
        Time lat = msg_latency(cfg_.delays.steal_mean_s);
        steals_.total_message_delay_s += to_seconds(lat);
        ++steals_.messages;
        schedule(now_ + lat, EvKind::StealRequest, static_cast<int>(ops_.size() - 1));
        proto(m.job, "steal-request", std::to_string(m.id),
              "{\"container\":" + std::to_string(c) + "}");
    }

    void on_steal_request(std::size_t op_id) {
        auto& op = ops_[op_id];
        op.granted.clear();
        int vid = op.victims[op.idx];
        auto& v = jm(vid);
        if (v.status == coord::JmStatus::Alive && job_active(op.job) && cont(op.container).alive) {
            accrue_waits(v);  // the victim handles the steal as an UPDATE event
            auto waiting = waiting_tasks(v);
            double free_local = cont(op.container).free;
            auto picks =
                parades::pick_placements(waiting, cont(op.container), free_local, topo_, cfg_.params);
            for (const auto& pk : picks) {
                auto& t = job(op.job).task(pk.task);
                append_update(op.job, {.kind = coord::InfoUpdate::Kind::TaskReassigned,
                                       .task = pk.task,
                                       .dc = jm(op.thief).dc});
                in_transit_.insert(pk.task);
                t.wait = 0;
                t.wait_accrued_at = now_;
                op.granted.push_back(pk.task);
            }
        }
        Time lat = msg_latency(cfg_.delays.steal_mean_s);
        steals_.total_message_delay_s += to_seconds(lat);
        ++steals_.messages;
        schedule(now_ + lat, EvKind::StealReply, static_cast<int>(op_id));
    }

    void on_steal_reply(std::size_t op_id) {
        auto& op = ops_[op_id];
        for (const auto& tid : op.granted) in_transit_.erase(tid);
        auto& thief = jm(op.thief);
        bool valid = thief.status == coord::JmStatus::Alive && thief.epoch == op.thief_epoch &&
                     job_active(op.job) && cont(op.container).alive &&
                     owner_[static_cast<std::size_t>(op.container)] == op.thief;
        if (!valid) {
            proto(op.job, "steal-reply-dropped", std::to_string(op.thief));
            if (thief.epoch == op.thief_epoch) thief.steal_inflight = false;
            return;
        }
        if (op.granted.empty()) {
            if (++op.idx < op.victims.size()) {
                Time lat = msg_latency(cfg_.delays.steal_mean_s);
                steals_.total_message_delay_s += to_seconds(lat);
                ++steals_.messages;
                schedule(now_ + lat, EvKind::StealRequest, static_cast<int>(op_id));
            } else {
                thief.steal_inflight = false;
            }
            return;
        }
        accrue_waits(thief);
        ++steals_.grants;
        std::string ids;
        for (const auto& tid : op.granted) {
            auto& t = job(op.job).task(tid);
            if (t.state == model::TaskState::Waiting && t.r <= cont(op.container).free + 1e-12) {
                place(thief, tid, op.container, parades::Locality::Stolen, cont(op.container).free);
                ++steals_.tasks_stolen;
                if (!ids.empty()) ids += ",";
                ids += "\"" + tid.str() + "\"";
            }
        }
        thief.steal_inflight = false;
        proto(op.job, "steal-granted", std::to_string(op.victims[op.idx]), "{\"tasks\":[" + ids + "]}");
    }

    // --- failures and recovery -------------------------------------------------

    void on_node_kill(int node_id, int kill_idx = -1) {
        if (node_id < 0 && kill_idx >= 0) {
            node_id = resolve_kill_target(cfg_.failures.kills[static_cast<std::size_t>(kill_idx)]);
            if (node_id < 0) return;
        }
        auto& node = topo_.nodes[static_cast<std::size_t>(node_id)];
        if (!node.alive) return;
        node.alive = false;
        node_killed_at_[static_cast<std::size_t>(node_id)] = now_;
        proto(-1, "node-kill", node.name);

        for (int c : node.containers) kill_container(c);

        for (std::size_t j = 0; j < jobs_.size(); ++j) {
            if (!job_active(static_cast<int>(j))) continue;
            auto lost = coord::lost_output_rollback(jobs_[j], node_id);
            for (const auto& tid : lost) {
                auto& t = jobs_[j].task(tid);
                t.state = model::TaskState::Waiting;
                t.wait = 0;
                t.wait_accrued_at = now_;
                t.output_node = -1;
                ++tokens_[tid];
                append_update(static_cast<int>(j),
                              {.kind = coord::InfoUpdate::Kind::PartitionInvalidated, .task = tid});
            }
            if (!lost.empty())
                pending_reexec_[static_cast<int>(j)].insert(pending_reexec_[static_cast<int>(j)].end(),
                                                            lost.begin(), lost.end());
            demote_unready(jobs_[j]);
        }

        for (auto& m : jms_) {
            if (m.status != coord::JmStatus::Alive || m.host_node != node_id) continue;
            m.status = coord::JmStatus::Failed;
            m.failed_at = now_;
            if (job_active(m.job)) schedule(now_ + cfg_.delays.detection, EvKind::Detect, m.id);
        }
        // rolled-back tasks can go straight onto surviving idle containers
        for (std::size_t j = 0; j < jobs_.size(); ++j)
            if (job_active(static_cast<int>(j))) wake_idle_containers(static_cast<int>(j));
    }

    void kill_container(int c) {
        auto& con = cont(c);
        if (!con.alive) return;
        con.alive = false;
        int owner = owner_[static_cast<std::size_t>(c)];
        for (const auto& rt : running_[static_cast<std::size_t>(c)]) {
            auto& t = job(rt.task.job).task(rt.task);
            t.state = model::TaskState::Waiting;
            t.wait = 0;
            t.wait_accrued_at = now_;
            t.running_on = -1;
            ++tokens_[rt.task];
        }
        running_[static_cast<std::size_t>(c)].clear();
        con.free = con.capacity;
        if (owner >= 0) {
            auto& m = jm(owner);
            std::erase(m.held, c);
            m.reclaiming.erase(c);
            if (stores_[static_cast<std::size_t>(m.job)])
                append_update(m.job,
                              {.kind = coord::InfoUpdate::Kind::ExecutorRemove, .container = c});
        }
        owner_[static_cast<std::size_t>(c)] = kDead;
    }

    // Tasks whose predecessor outputs were invalidated go back to Unreleased.
    void demote_unready(model::DagJob& jb) {
        for (auto& s : jb.stages) {
            bool preds_done = std::all_of(s.predecessors.begin(), s.predecessors.end(), [&](int p) {
                return jb.stages[static_cast<std::size_t>(p)].done();
            });
            if (preds_done) continue;
            for (auto& t : s.tasks)
                if (t.state == model::TaskState::Waiting && !in_transit_.count(t.id))
                    t.state = model::TaskState::Unreleased;
        }
    }

    int resolve_kill_target(const KillEvent& k) {
        if (k.target == KillEvent::Target::Node) return k.node;
        for (int id : job_jms_[static_cast<std::size_t>(k.job)]) {
            auto& m = jm(id);
            if (m.status != coord::JmStatus::Alive) continue;
            if (k.target == KillEvent::Target::PrimaryJm && m.role == coord::Role::Primary)
                return m.host_node;
            if (k.target == KillEvent::Target::SemiActiveJm && m.role == coord::Role::SemiActive &&
                (k.dc < 0 || m.dc == k.dc))
                return m.host_node;
        }
        return -1;
    }

    void on_detect(int jm_id) {
        auto& m = jm(jm_id);
        if (!job_active(m.job)) return;
        proto(m.job, "failure-detected", std::to_string(jm_id));
        RecoveryEntry entry;
        entry.job = m.job;
        entry.jm = jm_id;
        entry.dc = m.dc;
        entry.was_primary = m.role == coord::Role::Primary;
        entry.killed_at = m.failed_at;
        entry.detected_at = now_;
        recoveries_.push_back(entry);
        std::size_t rec_idx = recoveries_.size() - 1;

        if (!decentralized_) {
            // centralized architectures resubmit the job from scratch
            schedule(now_, EvKind::Restart, m.job, jm_id, static_cast<int>(rec_idx));
            return;
        }
        if (m.role == coord::Role::Primary) {
            std::vector<coord::JmState> states;
            for (int id : job_jms_[static_cast<std::size_t>(m.job)]) {
                auto& o = jm(id);
                states.push_back({o.id, o.dc, o.role, o.status, o.host_node, o.epoch});
            }
            bool any_live = std::any_of(states.begin(), states.end(), [](const coord::JmState& s) {
                return s.status == coord::JmStatus::Alive && s.role == coord::Role::SemiActive;
            });
            if (!any_live) {
                abort_job(m.job, "all job managers failed");
                return;
            }
            int winner = coord::elect_primary(states);
            jm(winner).role = coord::Role::Primary;
            append_update(m.job, {.kind = coord::InfoUpdate::Kind::RoleChange,
                                  .jm = winner,
                                  .role = coord::Role::Primary});
            proto(m.job, "election", std::to_string(winner));
            auto pending = pending_assign_[static_cast<std::size_t>(m.job)];
            pending_assign_[static_cast<std::size_t>(m.job)].clear();
            for (int s : pending) assign_stage(m.job, s);
        }
        schedule(now_ + cfg_.delays.spawn, EvKind::Spawn, m.job, jm_id,
                 static_cast<int>(rec_idx));
    }

    void on_spawn(int j, int old_jm, int rec_idx) {
        if (!job_active(j)) return;
        auto& old_m = jm(old_jm);
        int id = spawn_jm(j, old_m.dc, coord::Role::SemiActive, old_m.epoch + 1);
        auto& m = jm(id);
        // inherit the failed JM's surviving containers
        auto inherited = old_m.held;
        for (int c : inherited) {
            if (!cont(c).alive) continue;
            owner_[static_cast<std::size_t>(c)] = id;
            m.held.push_back(c);
            append_update(j, {.kind = coord::InfoUpdate::Kind::ExecutorReassign,
                              .container = c,
                              .jm = id});
        }
        for (int c : old_m.reclaiming)
            if (cont(c).alive) m.reclaiming.insert(c);
        old_m.held.clear();
        old_m.reclaiming.clear();
        m.target = static_cast<int>(m.held.size());
        m.alloc = m.target;
        if (rec_idx >= 0) {
            auto& entry = recoveries_[static_cast<std::size_t>(rec_idx)];
            entry.replaced_at = now_;
            auto& pend = pending_reexec_[j];
            entry.reexecuted.insert(entry.reexecuted.end(), pend.begin(), pend.end());
            pend.clear();
        }
        proto(j, "jm-inherit", std::to_string(id),
              "{\"containers\":" + std::to_string(m.held.size()) + "}");
        for (int c : m.held) on_update(id, c);
    }

    void on_restart(int j, int failed_jm = -1, int rec_idx = -1) {
        if (!job_active(j)) return;
        auto& jb = job(j);
        std::size_t done_before = 0;
        for (auto& s : jb.stages) {
            for (auto& t : s.tasks) {
                if (t.state == model::TaskState::Done) ++done_before;
                if (t.state == model::TaskState::Running) {
                    auto& con = cont(t.running_on);
                    std::erase_if(running_[static_cast<std::size_t>(t.running_on)],
                                  [&](const RunningTask& rt) { return rt.task == t.id; });
                    con.free = std::min(con.capacity, con.free + t.r);
                }
                t.state = model::TaskState::Unreleased;
                t.wait = 0;
                t.output_node = -1;
                t.running_on = -1;
                ++tokens_[t.id];
            }
        }
        for (int id : job_jms_[static_cast<std::size_t>(j)]) {
            auto& m = jm(id);
            auto all = m.held;
            for (int c : all) {
                std::erase(m.held, c);
                m.reclaiming.erase(c);
                if (cont(c).alive) release_container(j, c);
            }
            if (m.status == coord::JmStatus::Alive) m.status = coord::JmStatus::Failed;
        }
        proto(j, "job-restart", "master",
              "{\"wasted_tasks\":" + std::to_string(done_before) + "}");
        if (rec_idx >= 0) {
            auto& entry = recoveries_[static_cast<std::size_t>(rec_idx)];
            for (auto& s : jb.stages)
                for (auto& t : s.tasks) entry.reexecuted.push_back(t.id);
        }
        // new JM after the spawn delay, then the job starts over
        int epoch = failed_jm >= 0 ? jm(failed_jm).epoch + 1 : 1;
        schedule(now_ + cfg_.delays.spawn, EvKind::SpawnRestarted, j, epoch, rec_idx);
    }

    void on_respawn_restarted(int j, int epoch, int rec_idx) {
        if (!job_active(j)) return;
        int dc = submission_dc(job(j));
        int id = spawn_jm(j, dc, coord::Role::Primary, epoch);
        if (rec_idx >= 0) recoveries_[static_cast<std::size_t>(rec_idx)].replaced_at = now_;
        (void)id;
        release_and_assign(j);
    }

    void on_inject() {
        for (int dc : cfg_.inject.dcs) {
            saturated_.insert(dc);
            for (int c : topo_.datacenters[static_cast<std::size_t>(dc)].containers)
                if (cont(c).alive && owner_[static_cast<std::size_t>(c)] == kFree)
                    owner_[static_cast<std::size_t>(c)] = kSeized;
        }
        proto(-1, "inject-load", "sim");
        if (cfg_.inject.duration > 0)
            schedule(now_ + cfg_.inject.duration, EvKind::InjectEnd);
    }

    void on_inject_end() {
        std::set<int> was = saturated_;
        saturated_.clear();
        for (int dc : was) {
            for (int c : topo_.datacenters[static_cast<std::size_t>(dc)].containers)
                if (cont(c).alive && owner_[static_cast<std::size_t>(c)] == kSeized)
                    owner_[static_cast<std::size_t>(c)] = kFree;
            top_up(domain_of_dc(dc));
        }
        proto(-1, "inject-load-end", "sim");
    }

    // --- reporting --------------------------------------------------------------

    void finalize_report() {
        report_.ok = report_.error.empty();
        std::vector<model::DagJob> completed;
        for (std::size_t i = 0; i < jobs_.size(); ++i) {
            auto& jb = jobs_[i];
            report_.jobs.push_back({jb.id, jb.name, jb.release_time, jb.completion_time, jb.aborted});
            if (jb.completion_time)
                completed.push_back(jb);
            else if (!jb.aborted) {
                report_.ok = false;
                if (report_.error.empty()) report_.error = "job did not complete: " + jb.name;
            }
        }
        if (!completed.empty()) {
            report_.makespan = model::makespan(completed);
            report_.avg_response_s = model::avg_response_time(completed);
        }
        Time horizon = report_.makespan.value_or(now_);
        CostTrace trace;
        for (const auto& n : topo_.nodes) {
            Time up = node_killed_at_[static_cast<std::size_t>(n.id)] >= 0
                          ? node_killed_at_[static_cast<std::size_t>(n.id)]
                          : horizon;
            trace.hosts.push_back({n.id, n.reliability, up});
        }
        trace.cross_dc_bytes = cross_dc_bytes_;
        cost_trace_ = trace;
        auto cost = compute_cost(trace, cfg_.prices);
        report_.machine_cost = cost.machine_cost;
        report_.transfer_cost = cost.transfer_cost;
        report_.cross_dc_bytes = cross_dc_bytes_;
        report_.steals = steals_;
        report_.recoveries = recoveries_;

        if (cfg_.deployment == Deployment::Houtu && report_.makespan) {
            try {
                // the bound needs the pre-failure topology's container counts
                double b = makespan_bound(cfg_.params, cfg_.topology, jobs_);
                report_.bound_s = b;
                report_.bound_ok = to_seconds(*report_.makespan) <= b + 1e-9;
            } catch (const std::exception&) {
                // workload outside the bound preconditions; leave fields unset
            }
        }
        if (cfg_.inject.at >= 0) compute_post_inject_wait();
    }

    // Task-seconds of waiting accumulated inside each DC after the injection:
    // the Fig. 8(c)-style queueing signal.
    void compute_post_inject_wait() {
        for (const auto& row : placements_) {
            if (row.t <= cfg_.inject.at) continue;
            report_.post_inject_wait_s[row.dc] += to_seconds(row.wait);
        }
        // also count tasks that never got placed (aborted/incomplete runs)
        for (const auto& jb : jobs_) {
            for (const auto& s : jb.stages)
                for (const auto& t : s.tasks)
                    if (t.state == model::TaskState::Waiting)
                        report_.post_inject_wait_s[-1] += to_seconds(t.wait);
        }
    }

public:
    const CostTrace& cost_trace() const { return cost_trace_; }

private:
    ScenarioConfig cfg_;
    model::ClusterTopology topo_;
    Rng rng_bw_, rng_msg_, rng_fail_, rng_wl_;
    bool decentralized_ = true;
    bool af_enabled_ = true;
    bool stealing_ = true;

    std::vector<model::DagJob> jobs_;
    std::vector<JobPhase> phases_;
    std::vector<std::unique_ptr<coord::ConsistentStore>> stores_;
    std::vector<std::vector<int>> job_jms_;
    std::vector<std::set<int>> pending_assign_;
    std::map<int, std::vector<model::TaskId>> pending_reexec_;

    std::vector<Jm> jms_;
    std::vector<int> owner_;
    std::vector<std::vector<RunningTask>> running_;
    std::map<model::TaskId, int> tokens_;
    std::set<model::TaskId> in_transit_;
    std::vector<StealOp> ops_;
    std::set<int> saturated_;
    std::vector<Time> node_killed_at_;

    std::priority_queue<Event, std::vector<Event>, std::greater<>> events_;
    std::int64_t next_seq_ = 0;
    Time now_ = 0;
    int active_jobs_ = 0;
    bool tick_scheduled_ = false;
    bool boundary_scheduled_ = false;

    double cross_dc_bytes_ = 0.0;
    StealStats steals_;
    std::vector<PlacementRow> placements_;
    std::vector<PeriodRow> periods_;
    std::vector<ProtocolRow> protocol_;
    std::vector<RecoveryEntry> recoveries_;
    CostTrace cost_trace_;
    MetricsReport report_;
};

}  // namespace houtu::sim

#endif
