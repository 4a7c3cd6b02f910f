#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "houtu/builders.hpp"
#include "houtu/workload.hpp"

using namespace houtu;

TEST_CASE("size mix and arrival gaps match the configured distributions") {
    auto topo = sim::make_uniform_topology(4, 2, 2);
    model::SchedulerParams params;
    sim::GeneratorSpec gen;
    gen.job_count = 10000;
    Rng rng(11);
    auto jobs = sim::generate_workload(gen, topo, params, rng);
    REQUIRE(jobs.size() == 10000);

    int small = 0, medium = 0, large = 0;
    for (const auto& j : jobs) {
        std::size_t widest = 0;
        for (const auto& s : j.stages) widest = std::max(widest, s.tasks.size());
        if (widest == static_cast<std::size_t>(gen.large_tasks)) ++large;
        else if (widest >= static_cast<std::size_t>(gen.large_tasks) / 3) ++medium;
        else ++small;
    }
    double n = static_cast<double>(jobs.size());
    CHECK(small / n == doctest::Approx(0.46).epsilon(0.05));
    CHECK(medium / n == doctest::Approx(0.40).epsilon(0.05));
    CHECK(large / n == doctest::Approx(0.14).epsilon(0.15));

    double gap_sum = 0.0;
    for (std::size_t i = 1; i < jobs.size(); ++i)
        gap_sum += to_seconds(jobs[i].release_time - jobs[i - 1].release_time);
    double mean_gap = gap_sum / static_cast<double>(jobs.size() - 1);
    CHECK(mean_gap >= 58.0);
    CHECK(mean_gap <= 62.0);
}

TEST_CASE("generated jobs are admissible and deterministic per seed") {
    auto topo = sim::make_uniform_topology(3, 2, 2);
    model::SchedulerParams params;
    sim::GeneratorSpec gen;
    gen.job_count = 200;

    Rng r1(5), r2(5);
    auto a = sim::generate_workload(gen, topo, params, r1);
    auto b = sim::generate_workload(gen, topo, params, r2);
    REQUIRE(a.size() == b.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
        CHECK(a[i].name == b[i].name);
        CHECK(a[i].release_time == b[i].release_time);
        REQUIRE(a[i].stages.size() == b[i].stages.size());
        for (std::size_t s = 0; s < a[i].stages.size(); ++s) {
            REQUIRE(a[i].stages[s].tasks.size() == b[i].stages[s].tasks.size());
            CHECK(a[i].stages[s].tasks[0].r == b[i].stages[s].tasks[0].r);
            CHECK(a[i].stages[s].tasks[0].p == b[i].stages[s].tasks[0].p);
        }
        CHECK_NOTHROW(model::admit_job(a[i], params));
    }
}

TEST_CASE("root stages carry placed input partitions, non-root stages carry byte sizes") {
    auto topo = sim::make_uniform_topology(4, 2, 1);
    model::SchedulerParams params;
    sim::GeneratorSpec gen;
    Rng rng(1);
    for (auto family : {sim::JobFamily::WordCount, sim::JobFamily::TpchJoin,
                        sim::JobFamily::IterativeMl, sim::JobFamily::PageRank}) {
        auto job = sim::make_job(0, family, sim::JobSize::Medium, gen, topo, params, rng);
        for (const auto& s : job.stages) {
            if (s.predecessors.empty()) {
                for (const auto& t : s.tasks) {
                    REQUIRE(t.inputs.size() == 1);
                    CHECK(t.inputs[0].bytes > 0.0);
                    CHECK(t.preferred_nodes.count(t.inputs[0].node_id) == 1);
                }
                // partitions spread across all data centers
                std::set<int> dcs;
                for (const auto& t : s.tasks)
                    dcs.insert(topo.nodes[static_cast<std::size_t>(t.inputs[0].node_id)].dc_id);
                CHECK(dcs.size() == topo.datacenters.size());
            } else {
                CHECK(s.input_bytes_per_task > 0.0);
                for (const auto& t : s.tasks) CHECK(t.inputs.empty());
            }
        }
    }
}
