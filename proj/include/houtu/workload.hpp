#ifndef HOUTU_WORKLOAD_HPP
#define HOUTU_WORKLOAD_HPP

#include <map>
#include <string>
#include <vector>

#include "houtu/model.hpp"
#include "houtu/rng.hpp"

namespace houtu::sim {

enum class JobFamily { WordCount, TpchJoin, IterativeMl, PageRank };
enum class JobSize { Small, Medium, Large };

inline const char* to_string(JobFamily f) {
    switch (f) {
        case JobFamily::WordCount: return "wordcount";
        case JobFamily::TpchJoin: return "tpch";
        case JobFamily::IterativeMl: return "iterative";
        case JobFamily::PageRank: return "pagerank";
    }
    return "?";
}

struct GeneratorSpec {
    int job_count = 10;
    double mean_interarrival_s = 60.0;
    double small_frac = 0.46;
    double medium_frac = 0.40;  // remainder is large
    int large_tasks = 32;       // width of a large job's widest stage
    double root_mb_small = 25.0;
    double root_mb_medium = 100.0;
    double root_mb_large = 400.0;
    double shuffle_fraction = 0.10;  // non-root input bytes as fraction of root
};

namespace detail {

inline int size_width(JobSize s, const GeneratorSpec& g) {
    switch (s) {
        case JobSize::Small: return std::max(2, g.large_tasks / 8);
        case JobSize::Medium: return std::max(3, g.large_tasks / 3);
        case JobSize::Large: return g.large_tasks;
    }
    return 2;
}

inline double size_root_mb(JobSize s, const GeneratorSpec& g) {
    switch (s) {
        case JobSize::Small: return g.root_mb_small;
        case JobSize::Medium: return g.root_mb_medium;
        case JobSize::Large: return g.root_mb_large;
    }
    return g.root_mb_small;
}

// Spread a root stage's input partitions across data centers; one partition
// per task, placed round-robin over the target DCs' nodes.
inline void place_root_inputs(model::Stage& stage, const std::vector<int>& target_dcs,
                              double bytes_per_task, const model::ClusterTopology& topo) {
    for (std::size_t i = 0; i < stage.tasks.size(); ++i) {
        int dc = target_dcs[i % target_dcs.size()];
        const auto& dc_nodes = topo.datacenters[static_cast<std::size_t>(dc)].nodes;
        int node = dc_nodes[(i / target_dcs.size()) % dc_nodes.size()];
        stage.tasks[i].inputs = {{node, bytes_per_task}};
        stage.tasks[i].refresh_preferred();
    }
}

}  // namespace detail

// Builds one job of the given family/size shape. Root input partitions land
// on concrete nodes; non-root stages carry input_bytes_per_task and get their
// sources resolved at release time from predecessor outputs.
inline model::DagJob make_job(int id, JobFamily family, JobSize size, const GeneratorSpec& gen,
                              const model::ClusterTopology& topo,
                              const model::SchedulerParams& params, Rng& rng) {
    model::DagJob job;
    job.id = id;
    job.name = std::string(to_string(family)) + "-" + std::to_string(id);

    const int width = detail::size_width(size, gen);
    const double root_bytes = detail::size_root_mb(size, gen) * 1e6;
    const double shuffle_bytes = root_bytes * gen.shuffle_fraction;
    const double r_lo = params.theta;
    const double r_hi = 1.0 - params.delta;
    auto stage_r = [&] { return rng.uniform(std::max(r_lo, 0.1), r_hi); };
    auto stage_p = [&](double lo, double hi) { return from_seconds(rng.uniform(lo, hi)); };

    auto add_stage = [&](int sid, std::vector<int> preds, int count, double r, Time p,
                         double in_bytes) -> model::Stage& {
        model::Stage s;
        s.id = sid;
        s.predecessors = std::move(preds);
        s.input_bytes_per_task = in_bytes;
        for (int i = 0; i < count; ++i) {
            model::Task t;
            t.id = {id, sid, i};
            t.r = r;
            t.p = p;
            s.tasks.push_back(t);
        }
        job.stages.push_back(std::move(s));
        return job.stages.back();
    };

    double p_lo = size == JobSize::Small ? 2.0 : size == JobSize::Medium ? 4.0 : 8.0;
    double p_hi = size == JobSize::Small ? 8.0 : size == JobSize::Medium ? 16.0 : 24.0;

    std::vector<int> all_dcs;
    for (const auto& dc : topo.datacenters) all_dcs.push_back(dc.id);

    switch (family) {
        case JobFamily::WordCount: {
            auto& map = add_stage(0, {}, width, stage_r(), stage_p(p_lo, p_hi), root_bytes);
            detail::place_root_inputs(map, all_dcs, root_bytes, topo);
            add_stage(1, {0}, std::max(1, width / 4), stage_r(), stage_p(p_lo, p_hi),
                      shuffle_bytes);
            break;
        }
        case JobFamily::TpchJoin: {
            // two tables per data center: scans split across the DC pairs
            auto& scan_a = add_stage(0, {}, width, stage_r(), stage_p(p_lo, p_hi), root_bytes);
            auto& scan_b = add_stage(1, {}, width, stage_r(), stage_p(p_lo, p_hi), root_bytes);
            detail::place_root_inputs(scan_a, all_dcs, root_bytes, topo);
            detail::place_root_inputs(scan_b, all_dcs, root_bytes, topo);
            add_stage(2, {0, 1}, std::max(2, width / 2), stage_r(), stage_p(p_lo, p_hi),
                      shuffle_bytes);
            add_stage(3, {2}, std::max(1, width / 8), stage_r(), stage_p(p_lo, p_hi),
                      shuffle_bytes);
            break;
        }
        case JobFamily::IterativeMl: {
            auto& init = add_stage(0, {}, width, stage_r(), stage_p(p_lo, p_hi), root_bytes);
            detail::place_root_inputs(init, all_dcs, root_bytes, topo);
            for (int it = 1; it <= 3; ++it)
                add_stage(it, {it - 1}, std::max(2, width / 2), stage_r(), stage_p(p_lo, p_hi),
                          shuffle_bytes);
            break;
        }
        case JobFamily::PageRank: {
            auto& init = add_stage(0, {}, width, stage_r(), stage_p(p_lo, p_hi), root_bytes);
            detail::place_root_inputs(init, all_dcs, root_bytes, topo);
            for (int it = 1; it <= 3; ++it)
                add_stage(it, {it - 1}, width, stage_r(), stage_p(p_lo, p_hi), shuffle_bytes);
            break;
        }
    }
    return job;
}

// Online workload: Poisson arrivals, the published 46/40/14 size mix, the
// four families drawn uniformly.
inline std::vector<model::DagJob> generate_workload(const GeneratorSpec& gen,
                                                    const model::ClusterTopology& topo,
                                                    const model::SchedulerParams& params,
                                                    Rng& rng) {
    std::vector<model::DagJob> jobs;
    double clock = 0.0;
    for (int i = 0; i < gen.job_count; ++i) {
        double u = rng.uniform01();
        JobSize size = u < gen.small_frac               ? JobSize::Small
                       : u < gen.small_frac + gen.medium_frac ? JobSize::Medium
                                                              : JobSize::Large;
        auto family = static_cast<JobFamily>(rng.below(4));
        auto job = make_job(i, family, size, gen, topo, params, rng);
        job.release_time = from_seconds(clock);
        clock += rng.exponential(gen.mean_interarrival_s);
        jobs.push_back(std::move(job));
    }
    return jobs;
}

}  // namespace houtu::sim

#endif
