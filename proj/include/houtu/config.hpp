#ifndef HOUTU_CONFIG_HPP
#define HOUTU_CONFIG_HPP

#include <filesystem>
#include <fstream>
#include <map>
#include <stdexcept>
#include <string>

#include <json.hpp>

#include "houtu/model.hpp"
#include "houtu/parades.hpp"
#include "houtu/scenario.hpp"

namespace houtu::sim {

using json = nlohmann::json;

inline json load_json_file(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path.string());
    json j;
    in >> j;
    return j;
}

// --- topology.schema --------------------------------------------------------

inline model::LinkModel parse_link(const json& j) {
    model::LinkModel l;
    l.mean_mbps = j.at("mean_mbps").get<double>();
    l.stddev_mbps = j.value("stddev_mbps", 0.0);
    l.floor_mbps = j.value("floor_mbps", std::max(1.0, l.mean_mbps * 0.1));
    l.validate();
    return l;
}

inline model::Reliability parse_reliability(const std::string& s) {
    if (s == "spot") return model::Reliability::Spot;
    if (s == "reliable" || s == "on_demand" || s == "reserved") return model::Reliability::Reliable;
    throw std::invalid_argument("unknown reliability class: " + s);
}

struct TopologyNames {
    std::map<std::string, int> dc_ids;
    std::map<std::string, int> node_ids;
};

inline model::ClusterTopology parse_topology(const json& j, TopologyNames* names = nullptr) {
    model::ClusterTopology topo;
    int node_id = 0, cont_id = 0, rack_id = 0;
    for (const auto& jdc : j.at("datacenters")) {
        model::DataCenter dc;
        dc.id = static_cast<int>(topo.datacenters.size());
        dc.name = jdc.at("id").get<std::string>();
        dc.lan = jdc.contains("lan") ? parse_link(jdc["lan"]) : model::LinkModel{820.0, 40.0, 100.0};
        if (names) names->dc_ids[dc.name] = dc.id;
        for (const auto& jrack : jdc.at("racks")) {
            model::Rack rack;
            rack.id = rack_id++;
            rack.name = jrack.at("id").get<std::string>();
            rack.dc_id = dc.id;
            for (const auto& jnode : jrack.at("nodes")) {
                model::Node node;
                node.id = node_id++;
                node.name = jnode.at("id").get<std::string>();
                node.rack_id = rack.id;
                node.dc_id = dc.id;
                node.reliability = parse_reliability(jnode.value("reliability", "spot"));
                if (names) names->node_ids[node.name] = node.id;
                int ncont = jnode.value("containers", 1);
                for (int c = 0; c < ncont; ++c) {
                    model::Container con;
                    con.id = cont_id++;
                    con.node_id = node.id;
                    con.rack_id = rack.id;
                    con.dc_id = dc.id;
                    con.reliability = node.reliability;
                    node.containers.push_back(con.id);
                    dc.containers.push_back(con.id);
                    topo.containers.push_back(con);
                }
                rack.nodes.push_back(node.id);
                dc.nodes.push_back(node.id);
                topo.nodes.push_back(node);
            }
            dc.racks.push_back(rack.id);
            topo.racks.push_back(rack);
        }
        topo.datacenters.push_back(dc);
    }
    if (j.contains("wan_links")) {
        for (const auto& jl : j["wan_links"]) {
            int a = names ? names->dc_ids.at(jl.at("src").get<std::string>()) : jl.at("src").get<int>();
            int b = names ? names->dc_ids.at(jl.at("dst").get<std::string>()) : jl.at("dst").get<int>();
            topo.wan_links[{std::min(a, b), std::max(a, b)}] = parse_link(jl);
        }
    } else if (j.contains("wan_default")) {
        auto link = parse_link(j["wan_default"]);
        for (std::size_t a = 0; a < topo.datacenters.size(); ++a)
            for (std::size_t b = a + 1; b < topo.datacenters.size(); ++b)
                topo.wan_links[{static_cast<int>(a), static_cast<int>(b)}] = link;
    }
    topo.validate();
    return topo;
}

// --- job.schema ---------------------------------------------------------------

inline model::DagJob parse_job(const json& j, int id, const model::ClusterTopology& topo,
                               const TopologyNames& names) {
    model::DagJob job;
    job.id = id;
    job.name = j.value("name", "job-" + std::to_string(id));
    job.release_time = from_seconds(j.value("release_s", 0.0));
    for (const auto& js : j.at("stages")) {
        model::Stage s;
        s.id = js.at("id").get<int>();
        if (js.contains("predecessors"))
            for (const auto& p : js["predecessors"]) s.predecessors.push_back(p.get<int>());
        int count = js.at("count").get<int>();
        double r = js.at("r").get<double>();
        Time p = from_seconds(js.at("p_s").get<double>());
        double bytes = js.value("input_bytes", 0.0);
        s.input_bytes_per_task = bytes;
        for (int i = 0; i < count; ++i) {
            model::Task t;
            t.id = {id, s.id, i};
            t.r = r;
            t.p = p;
            s.tasks.push_back(t);
        }
        if (s.predecessors.empty() && bytes > 0.0) {
            // spread root input partitions over the declared distribution
            std::map<int, double> weights;
            if (js.contains("input_distribution")) {
                for (const auto& [dc_name, w] : js["input_distribution"].items())
                    weights[names.dc_ids.at(dc_name)] = w.get<double>();
            } else {
                for (const auto& dc : topo.datacenters) weights[dc.id] = 1.0;
            }
            auto counts = parades::initial_assignment(count, weights, 0);
            int i = 0;
            for (const auto& [dc, n] : counts) {
                const auto& dc_nodes = topo.datacenters[static_cast<std::size_t>(dc)].nodes;
                for (int k = 0; k < n; ++k, ++i) {
                    int node = dc_nodes[static_cast<std::size_t>(k) % dc_nodes.size()];
                    s.tasks[static_cast<std::size_t>(i)].inputs = {{node, bytes}};
                    s.tasks[static_cast<std::size_t>(i)].refresh_preferred();
                }
            }
        }
        job.stages.push_back(std::move(s));
    }
    return job;
}

// --- scenario config ------------------------------------------------------------

inline GeneratorSpec parse_generator(const json& j) {
    GeneratorSpec g;
    g.job_count = j.value("job_count", g.job_count);
    g.mean_interarrival_s = j.value("mean_interarrival_s", g.mean_interarrival_s);
    g.small_frac = j.value("small_frac", g.small_frac);
    g.medium_frac = j.value("medium_frac", g.medium_frac);
    g.large_tasks = j.value("large_tasks", g.large_tasks);
    g.root_mb_small = j.value("root_mb_small", g.root_mb_small);
    g.root_mb_medium = j.value("root_mb_medium", g.root_mb_medium);
    g.root_mb_large = j.value("root_mb_large", g.root_mb_large);
    g.shuffle_fraction = j.value("shuffle_fraction", g.shuffle_fraction);
    return g;
}

inline ScenarioConfig parse_scenario(const json& j, const std::filesystem::path& base_dir) {
    ScenarioConfig cfg;
    TopologyNames names;
    if (j.at("topology").is_string())
        cfg.topology = parse_topology(load_json_file(base_dir / j["topology"].get<std::string>()),
                                      &names);
    else
        cfg.topology = parse_topology(j["topology"], &names);

    if (j.contains("params")) {
        const auto& jp = j["params"];
        cfg.params.delta = jp.value("delta", cfg.params.delta);
        cfg.params.rho = jp.value("rho", cfg.params.rho);
        cfg.params.tau = jp.value("tau", cfg.params.tau);
        cfg.params.theta = jp.value("theta", cfg.params.theta);
        if (jp.contains("period_s")) cfg.params.period = from_seconds(jp["period_s"].get<double>());
    }
    cfg.params.validate();

    cfg.deployment = deployment_from_string(j.value("deployment", "houtu"));
    cfg.stealing = j.value("stealing", true);
    cfg.static_desire = j.value("static_desire", 0);
    if (!j.contains("seed")) throw std::invalid_argument("scenario requires a seed");
    cfg.seed = j["seed"].get<std::uint64_t>();
    if (j.contains("max_sim_time_s")) cfg.max_sim_time = from_seconds(j["max_sim_time_s"].get<double>());

    const auto& jw = j.at("workload");
    if (jw.contains("jobs")) {
        int id = 0;
        for (const auto& jj : jw["jobs"]) {
            if (jj.is_string())
                cfg.jobs.push_back(
                    parse_job(load_json_file(base_dir / jj.get<std::string>()), id, cfg.topology, names));
            else
                cfg.jobs.push_back(parse_job(jj, id, cfg.topology, names));
            ++id;
        }
    }
    if (jw.contains("generator")) cfg.generator = parse_generator(jw["generator"]);

    if (j.contains("failures")) {
        const auto& jf = j["failures"];
        cfg.failures.spot_rate_per_hour = jf.value("spot_rate_per_hour", 0.0);
        if (jf.contains("kills")) {
            for (const auto& jk : jf["kills"]) {
                KillEvent k;
                std::string target = jk.at("target").get<std::string>();
                if (target == "pjm") k.target = KillEvent::Target::PrimaryJm;
                else if (target == "sjm") k.target = KillEvent::Target::SemiActiveJm;
                else if (target == "node") k.target = KillEvent::Target::Node;
                else throw std::invalid_argument("unknown kill target: " + target);
                k.job = jk.value("job", 0);
                if (jk.contains("dc")) k.dc = names.dc_ids.at(jk["dc"].get<std::string>());
                if (jk.contains("node")) k.node = names.node_ids.at(jk["node"].get<std::string>());
                k.at = from_seconds(jk.at("at_s").get<double>());
                cfg.failures.kills.push_back(k);
            }
        }
    }
    if (j.contains("inject")) {
        cfg.inject.at = from_seconds(j["inject"].at("at_s").get<double>());
        if (j["inject"].contains("duration_s"))
            cfg.inject.duration = from_seconds(j["inject"]["duration_s"].get<double>());
        for (const auto& d : j["inject"].at("dcs"))
            cfg.inject.dcs.push_back(names.dc_ids.at(d.get<std::string>()));
    }
    if (j.contains("prices")) {
        const auto& jp = j["prices"];
        cfg.prices.on_demand_hourly = jp.value("on_demand_hourly", cfg.prices.on_demand_hourly);
        cfg.prices.reserved_hourly = jp.value("reserved_hourly", cfg.prices.reserved_hourly);
        cfg.prices.spot_hourly = jp.value("spot_hourly", cfg.prices.spot_hourly);
        cfg.prices.transfer_per_gb = jp.value("transfer_per_gb", cfg.prices.transfer_per_gb);
        cfg.prices.validate();
    }
    if (j.contains("delays")) {
        const auto& jd = j["delays"];
        if (jd.contains("detection_s")) cfg.delays.detection = from_seconds(jd["detection_s"].get<double>());
        if (jd.contains("spawn_s")) cfg.delays.spawn = from_seconds(jd["spawn_s"].get<double>());
        cfg.delays.store_mean_s = jd.value("store_mean_s", cfg.delays.store_mean_s);
        cfg.delays.steal_mean_s = jd.value("steal_mean_s", cfg.delays.steal_mean_s);
    }
    return cfg;
}

}  // namespace houtu::sim

#endif
