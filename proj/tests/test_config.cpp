#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "houtu/config.hpp"

using namespace houtu;
using json = nlohmann::json;

namespace {

json small_topology() {
    return json::parse(R"({
      "datacenters": [
        {"id": "east", "racks": [{"id": "r0", "nodes": [
          {"id": "n0", "reliability": "spot", "containers": 2},
          {"id": "n1", "reliability": "reliable", "containers": 1}
        ]}]},
        {"id": "west", "racks": [{"id": "r1", "nodes": [
          {"id": "n2", "containers": 2}
        ]}]}
      ],
      "wan_links": [{"src": "east", "dst": "west", "mean_mbps": 100, "stddev_mbps": 30, "floor_mbps": 10}]
    })");
}

}  // namespace

TEST_CASE("parse_topology builds ids, containers, and links") {
    sim::TopologyNames names;
    auto topo = sim::parse_topology(small_topology(), &names);
    CHECK(topo.datacenters.size() == 2);
    CHECK(topo.nodes.size() == 3);
    CHECK(topo.total_containers() == 5);
    CHECK(names.dc_ids.at("west") == 1);
    CHECK(names.node_ids.at("n2") == 2);
    CHECK(topo.nodes[1].reliability == model::Reliability::Reliable);
    CHECK(topo.link_between(0, 1).mean_mbps == 100.0);
    CHECK(topo.link_between(0, 0).mean_mbps == 820.0);  // default LAN
    CHECK(topo.same_rack(0, 1));
    CHECK_FALSE(topo.same_rack(0, 2));
}

TEST_CASE("parse_job places root inputs per distribution") {
    sim::TopologyNames names;
    auto topo = sim::parse_topology(small_topology(), &names);
    auto jj = json::parse(R"({
      "name": "j",
      "stages": [
        {"id": 0, "count": 10, "r": 0.4, "p_s": 5, "input_bytes": 1e6,
         "input_distribution": {"east": 0.8, "west": 0.2}},
        {"id": 1, "predecessors": [0], "count": 2, "r": 0.3, "p_s": 2, "input_bytes": 1e5}
      ]
    })");
    auto job = sim::parse_job(jj, 0, topo, names);
    REQUIRE(job.stages.size() == 2);
    int east = 0, west = 0;
    for (const auto& t : job.stages[0].tasks) {
        REQUIRE(t.inputs.size() == 1);
        (topo.nodes[static_cast<std::size_t>(t.inputs[0].node_id)].dc_id == 0 ? east : west)++;
    }
    CHECK(east == 8);
    CHECK(west == 2);
    CHECK(job.stages[1].tasks[0].inputs.empty());
    CHECK(job.stages[1].input_bytes_per_task == doctest::Approx(1e5));
}

TEST_CASE("parse_scenario end to end") {
    json j;
    j["topology"] = small_topology();
    j["seed"] = 9;
    j["deployment"] = "decent-stat";
    j["stealing"] = false;
    j["params"] = {{"delta", 0.4}, {"period_s", 5}};
    j["workload"] = {{"jobs", json::array({json::parse(
        R"({"stages": [{"id": 0, "count": 2, "r": 0.4, "p_s": 3}]})")})}};
    j["failures"] = {{"kills", json::array({{{"target", "node"}, {"node", "n2"}, {"at_s", 50}}})}};
    j["inject"] = {{"at_s", 30}, {"duration_s", 60}, {"dcs", json::array({"west"})}};
    j["delays"] = {{"detection_s", 2}, {"spawn_s", 4}};

    auto cfg = sim::parse_scenario(j, ".");
    CHECK(cfg.seed == 9);
    CHECK(cfg.deployment == sim::Deployment::DecentStat);
    CHECK_FALSE(cfg.stealing);
    CHECK(cfg.params.delta == 0.4);
    CHECK(cfg.params.period == 5 * kMicrosPerSecond);
    CHECK(cfg.jobs.size() == 1);
    REQUIRE(cfg.failures.kills.size() == 1);
    CHECK(cfg.failures.kills[0].node == 2);
    CHECK(cfg.failures.kills[0].at == from_seconds(50));
    CHECK(cfg.inject.at == from_seconds(30));
    CHECK(cfg.inject.duration == from_seconds(60));
    CHECK(cfg.inject.dcs == std::vector<int>{1});
    CHECK(cfg.delays.detection == from_seconds(2));
}

TEST_CASE("invalid configs are rejected") {
    json j;
    j["topology"] = small_topology();
    j["workload"] = {{"jobs", json::array()}};
    CHECK_THROWS(sim::parse_scenario(j, "."));  // seed missing

    j["seed"] = 1;
    j["deployment"] = "unknown";
    CHECK_THROWS(sim::parse_scenario(j, "."));

    auto bad_link = small_topology();
    bad_link["wan_links"][0]["mean_mbps"] = -1;
    CHECK_THROWS(sim::parse_topology(bad_link));
}
