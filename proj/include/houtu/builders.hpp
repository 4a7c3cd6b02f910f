#ifndef HOUTU_BUILDERS_HPP
#define HOUTU_BUILDERS_HPP

#include <string>
#include <vector>

#include "houtu/model.hpp"

namespace houtu::sim {

// Symmetric desk-scale topology: `ndc` data centers, each with one rack of
// `nodes_per_dc` nodes carrying `containers_per_node` containers. WAN links
// share one model; LAN defaults follow the measured averages (~820 Mbps LAN,
// ~100 Mbps WAN with deviation up to 30%).
inline model::ClusterTopology make_uniform_topology(
    int ndc, int nodes_per_dc, int containers_per_node,
    model::LinkModel wan = {100.0, 30.0, 10.0}, model::LinkModel lan = {820.0, 40.0, 100.0},
    model::Reliability reliability = model::Reliability::Spot) {
    model::ClusterTopology topo;
    int node_id = 0, cont_id = 0;
    for (int d = 0; d < ndc; ++d) {
        model::DataCenter dc;
        dc.id = d;
        dc.name = "dc" + std::to_string(d);
        dc.lan = lan;
        model::Rack rack;
        rack.id = d;
        rack.name = dc.name + "-r0";
        rack.dc_id = d;
        for (int n = 0; n < nodes_per_dc; ++n) {
            model::Node node;
            node.id = node_id++;
            node.name = dc.name + "-n" + std::to_string(n);
            node.rack_id = rack.id;
            node.dc_id = d;
            node.reliability = reliability;
            for (int c = 0; c < containers_per_node; ++c) {
                model::Container con;
                con.id = cont_id++;
                con.node_id = node.id;
                con.rack_id = rack.id;
                con.dc_id = d;
                con.reliability = reliability;
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
        topo.datacenters.push_back(dc);
    }
    for (int a = 0; a < ndc; ++a)
        for (int b = a + 1; b < ndc; ++b) topo.wan_links[{a, b}] = wan;
    topo.validate();
    return topo;
}

// Single-stage job with `count` identical tasks, inputs placed round-robin
// over all nodes. Handy for tests and bound scenarios.
inline model::DagJob make_flat_job(int id, int count, double r, double p_seconds,
                                   const model::ClusterTopology& topo, double bytes = 0.0,
                                   Time release = 0) {
    model::DagJob job;
    job.id = id;
    job.name = "flat-" + std::to_string(id);
    job.release_time = release;
    model::Stage s;
    s.id = 0;
    for (int i = 0; i < count; ++i) {
        model::Task t;
        t.id = {id, 0, i};
        t.r = r;
        t.p = from_seconds(p_seconds);
        int node = topo.nodes[static_cast<std::size_t>(i) % topo.nodes.size()].id;
        if (bytes > 0.0) {
            t.inputs = {{node, bytes}};
            t.refresh_preferred();
        }
        s.tasks.push_back(t);
    }
    job.stages.push_back(std::move(s));
    return job;
}

}  // namespace houtu::sim

#endif
