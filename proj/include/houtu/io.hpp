#ifndef HOUTU_IO_HPP
#define HOUTU_IO_HPP

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <string>

#include <json.hpp>

#include "houtu/engine.hpp"

namespace houtu::sim {

// Fixed-width decimal formatting keeps the output byte-identical across
// platforms; default ostream double formatting is not.
inline std::string fmt(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.6f", v);
    return buf;
}

inline std::string fmt(Time t) { return fmt(to_seconds(t)); }

inline nlohmann::ordered_json metrics_to_json(const MetricsReport& r) {
    nlohmann::ordered_json j;
    j["ok"] = r.ok;
    if (!r.error.empty()) j["error"] = r.error;
    j["makespan_s"] = r.makespan ? nlohmann::ordered_json(fmt(*r.makespan)) : nullptr;
    j["avg_response_s"] = r.avg_response_s ? nlohmann::ordered_json(fmt(*r.avg_response_s)) : nullptr;
    j["machine_cost"] = fmt(r.machine_cost);
    j["transfer_cost"] = fmt(r.transfer_cost);
    j["cross_dc_gb"] = fmt(r.cross_dc_bytes / 1e9);
    j["bound_s"] = r.bound_s ? nlohmann::ordered_json(fmt(*r.bound_s)) : nullptr;
    j["bound_ok"] = r.bound_ok ? nlohmann::ordered_json(*r.bound_ok) : nullptr;

    nlohmann::ordered_json steals;
    steals["requests"] = r.steals.requests;
    steals["grants"] = r.steals.grants;
    steals["tasks_stolen"] = r.steals.tasks_stolen;
    steals["messages"] = r.steals.messages;
    steals["avg_message_delay_s"] =
        fmt(r.steals.messages ? r.steals.total_message_delay_s / static_cast<double>(r.steals.messages)
                              : 0.0);
    j["steals"] = steals;

    j["jobs"] = nlohmann::ordered_json::array();
    for (const auto& jm : r.jobs) {
        nlohmann::ordered_json o;
        o["id"] = jm.id;
        o["name"] = jm.name;
        o["release_s"] = fmt(jm.release);
        o["completion_s"] = jm.completion ? nlohmann::ordered_json(fmt(*jm.completion)) : nullptr;
        o["response_s"] = jm.completion ? nlohmann::ordered_json(fmt(*jm.completion - jm.release)) : nullptr;
        o["aborted"] = jm.aborted;
        j["jobs"].push_back(o);
    }

    j["recoveries"] = nlohmann::ordered_json::array();
    for (const auto& rec : r.recoveries) {
        nlohmann::ordered_json o;
        o["job"] = rec.job;
        o["jm"] = rec.jm;
        o["dc"] = rec.dc;
        o["was_primary"] = rec.was_primary;
        o["killed_s"] = fmt(rec.killed_at);
        o["detected_s"] = fmt(rec.detected_at);
        o["replaced_s"] = rec.replaced_at >= 0 ? nlohmann::ordered_json(fmt(rec.replaced_at)) : nullptr;
        o["reexecuted_tasks"] = rec.reexecuted.size();
        j["recoveries"].push_back(o);
    }

    if (!r.post_inject_wait_s.empty()) {
        nlohmann::ordered_json w;
        for (const auto& [dc, s] : r.post_inject_wait_s) w[std::to_string(dc)] = fmt(s);
        j["post_inject_wait_s"] = w;
    }
    return j;
}

inline void write_metrics(const std::filesystem::path& path, const MetricsReport& r) {
    std::ofstream out(path, std::ios::binary);
    out << metrics_to_json(r).dump(2) << "\n";
}

inline void write_trace(const std::filesystem::path& path, const Simulator& sim) {
    std::ofstream out(path, std::ios::binary);
    out << "time_s,job,task,jm,dc,container,tier,wait_s,r,p_s,pre_free\n";
    for (const auto& row : sim.placements()) {
        out << fmt(row.t) << "," << row.job << "," << row.task.str() << "," << row.jm << ","
            << row.dc << "," << row.container << "," << parades::to_string(row.tier) << ","
            << fmt(row.wait) << "," << fmt(row.r) << "," << fmt(row.p) << "," << fmt(row.pre_free)
            << "\n";
    }
}

inline void write_periods(const std::filesystem::path& path, const Simulator& sim) {
    std::ofstream out(path, std::ios::binary);
    out << "time_s,dc,job,jm,q,desire,allocation,utilization,class,granted,reclaimed\n";
    for (const auto& row : sim.periods()) {
        out << fmt(row.t) << "," << row.dc << "," << row.job << "," << row.jm << "," << row.q
            << "," << row.desire << "," << row.allocation << "," << fmt(row.utilization) << ","
            << af::to_string(row.cls) << "," << row.granted << "," << row.reclaimed << "\n";
    }
}

inline void write_protocol(const std::filesystem::path& path, const Simulator& sim) {
    std::ofstream out(path, std::ios::binary);
    for (const auto& row : sim.protocol()) {
        out << "{\"t_s\":" << fmt(row.t) << ",\"job\":" << row.job << ",\"event\":\"" << row.event
            << "\",\"actor\":\"" << row.actor << "\",\"detail\":" << row.payload << "}\n";
    }
}

inline void write_run_outputs(const std::filesystem::path& dir, const Simulator& sim,
                              const MetricsReport& report) {
    std::filesystem::create_directories(dir);
    write_metrics(dir / "metrics.json", report);
    write_trace(dir / "trace.csv", sim);
    write_periods(dir / "periods.csv", sim);
    write_protocol(dir / "protocol.jsonl", sim);
}

}  // namespace houtu::sim

#endif
