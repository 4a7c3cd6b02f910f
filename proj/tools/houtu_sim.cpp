#include <cstdlib>
#include <filesystem>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "houtu/houtu.hpp"

namespace fs = std::filesystem;
using namespace houtu;

namespace {

int log_level() {
    const char* v = std::getenv("HOUTU_LOG");
    if (!v) return 0;
    std::string s(v);
    if (s == "debug") return 2;
    if (s == "info") return 1;
    return 0;
}

void info(const std::string& msg) {
    if (log_level() >= 1) std::cerr << "[houtu] " << msg << "\n";
}

sim::ScenarioConfig load_scenario(const std::string& path, std::optional<std::uint64_t> seed) {
    auto j = sim::load_json_file(path);
    if (seed) j["seed"] = *seed;
    return sim::parse_scenario(j, fs::path(path).parent_path());
}

sim::MetricsReport run_one(sim::ScenarioConfig cfg, const std::optional<fs::path>& out) {
    sim::Simulator simulator(std::move(cfg));
    auto report = simulator.run();
    if (out) sim::write_run_outputs(*out, simulator, report);
    return report;
}

void print_summary(const sim::MetricsReport& r) {
    std::cout << "ok: " << (r.ok ? "yes" : "no") << "\n";
    if (!r.error.empty()) std::cout << "error: " << r.error << "\n";
    if (r.makespan) std::cout << "makespan_s: " << sim::fmt(*r.makespan) << "\n";
    if (r.avg_response_s) std::cout << "avg_response_s: " << sim::fmt(*r.avg_response_s) << "\n";
    std::cout << "machine_cost: " << sim::fmt(r.machine_cost) << "\n";
    std::cout << "transfer_cost: " << sim::fmt(r.transfer_cost) << "\n";
    if (r.bound_s) {
        std::cout << "bound_s: " << sim::fmt(*r.bound_s) << "\n";
        std::cout << "bound_ok: " << (*r.bound_ok ? "yes" : "no") << "\n";
    }
}

std::pair<std::uint64_t, std::uint64_t> parse_seed_range(const std::string& s) {
    auto dots = s.find("..");
    if (dots == std::string::npos) {
        auto v = std::stoull(s);
        return {v, v};
    }
    return {std::stoull(s.substr(0, dots)), std::stoull(s.substr(dots + 2))};
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"geo-distributed DAG scheduling simulator"};
    app.require_subcommand(1);

    std::string config_path, out_dir, seeds_range = "0", deployments = "houtu,decent-stat";
    std::vector<std::string> config_paths;
    std::optional<std::uint64_t> seed;

    auto* run = app.add_subcommand("run", "run one scenario");
    run->add_option("--config", config_path, "scenario JSON")->required();
    run->add_option("--seed", seed, "override the config seed");
    run->add_option("--out", out_dir, "output directory for metrics/trace files");

    auto* sweep = app.add_subcommand("sweep", "run a scenario over a seed range");
    sweep->add_option("--configs", config_paths, "scenario JSON files")->required();
    sweep->add_option("--seeds", seeds_range, "seed range a..b");
    sweep->add_option("--out", out_dir, "output root (one subdir per run)");

    auto* check = app.add_subcommand("check-bound", "run and verify the makespan bound");
    check->add_option("--config", config_path, "scenario JSON")->required();
    check->add_option("--seed", seed, "override the config seed");

    auto* compare = app.add_subcommand("compare", "run a scenario under several deployments");
    compare->add_option("--config", config_path, "scenario JSON")->required();
    compare->add_option("--deployments", deployments, "comma-separated deployment list");
    compare->add_option("--seed", seed, "override the config seed");
    compare->add_option("--out", out_dir, "output root (one subdir per deployment)");

    CLI11_PARSE(app, argc, argv);

    try {
        if (run->parsed()) {
            auto cfg = load_scenario(config_path, seed);
            info("running " + config_path);
            auto report = run_one(std::move(cfg),
                                  out_dir.empty() ? std::nullopt : std::optional<fs::path>(out_dir));
            print_summary(report);
            return report.ok ? 0 : 1;
        }
        if (sweep->parsed()) {
            auto [lo, hi] = parse_seed_range(seeds_range);
            bool all_ok = true;
            for (const auto& cp : config_paths) {
                for (std::uint64_t s = lo; s <= hi; ++s) {
                    auto cfg = load_scenario(cp, s);
                    std::optional<fs::path> out;
                    if (!out_dir.empty())
                        out = fs::path(out_dir) / (fs::path(cp).stem().string() + "-seed" + std::to_string(s));
                    auto report = run_one(std::move(cfg), out);
                    std::cout << cp << " seed=" << s << " ok=" << (report.ok ? "yes" : "no");
                    if (report.makespan) std::cout << " makespan_s=" << sim::fmt(*report.makespan);
                    std::cout << "\n";
                    all_ok = all_ok && report.ok;
                }
            }
            return all_ok ? 0 : 1;
        }
        if (check->parsed()) {
            auto cfg = load_scenario(config_path, seed);
            if (cfg.deployment != sim::Deployment::Houtu) {
                std::cerr << "check-bound requires the houtu deployment\n";
                return 2;
            }
            auto report = run_one(std::move(cfg), std::nullopt);
            print_summary(report);
            if (!report.ok) return 2;
            if (!report.bound_s) {
                std::cerr << "workload violates the bound preconditions\n";
                return 2;
            }
            return *report.bound_ok ? 0 : 1;
        }
        if (compare->parsed()) {
            std::vector<std::string> names;
            std::string cur;
            for (char c : deployments) {
                if (c == ',') {
                    if (!cur.empty()) names.push_back(cur);
                    cur.clear();
                } else {
                    cur += c;
                }
            }
            if (!cur.empty()) names.push_back(cur);
            for (const auto& name : names) {
                auto cfg = load_scenario(config_path, seed);
                cfg.deployment = sim::deployment_from_string(name);
                info("comparing deployment " + name);
                std::optional<fs::path> out;
                if (!out_dir.empty()) out = fs::path(out_dir) / name;
                auto report = run_one(std::move(cfg), out);
                std::cout << name << ": ok=" << (report.ok ? "yes" : "no");
                if (report.makespan) std::cout << " makespan_s=" << sim::fmt(*report.makespan);
                if (report.avg_response_s)
                    std::cout << " avg_response_s=" << sim::fmt(*report.avg_response_s);
                std::cout << " transfer_cost=" << sim::fmt(report.transfer_cost) << "\n";
            }
            return 0;
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
