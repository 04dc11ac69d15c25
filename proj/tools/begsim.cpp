// Command-line driver: simulate, continuum, compare, oracle-check.

#include "beg/config.hpp"
#include "beg/continuum.hpp"
#include "beg/errors.hpp"
#include "beg/fixtures.hpp"
#include "beg/flow.hpp"
#include "beg/io.hpp"

#include <CLI11.hpp>

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <future>
#include <iostream>
#include <optional>
#include <sstream>

namespace {

constexpr int kExitOk = 0;
constexpr int kExitRuntime = 1;
constexpr int kExitValidation = 2;
constexpr int kExitOracle = 3;

struct CommonFlags {
    std::string config;
    std::string out = ".";
    std::optional<std::uint64_t> seed;
    std::string branch;
    bool audit = false;
};

void add_common(CLI::App* cmd, CommonFlags& f, bool config_required) {
    auto* opt = cmd->add_option("--config", f.config, "key = value run configuration");
    if (config_required) opt->required();
    cmd->add_option("--out", f.out, "output directory")->capture_default_str();
    cmd->add_option("--seed", f.seed, "seed for shuffled surfactant placement");
    cmd->add_option("--branch", f.branch, "resonance branch")->check(CLI::IsMember({"floor", "ceil"}));
    cmd->add_flag("--audit-candidates", f.audit, "write every evaluated candidate of each step");
}

beg::RunConfig resolve(const CommonFlags& f) {
    beg::RunConfig cfg = f.config.empty() ? beg::parse_config("") : beg::load_config(f.config);
    if (f.seed) cfg.flow.seed = f.seed;
    if (f.branch == "floor") cfg.branch = beg::Branch::Floor;
    if (f.branch == "ceil") cfg.branch = beg::Branch::Ceil;
    cfg.flow.audit = f.audit;
    beg::validate_config(cfg);
    for (const auto& w : cfg.warnings) std::cerr << "warning: " << w << '\n';
    return cfg;
}

std::string out_path(const CommonFlags& f, const std::string& name) {
    std::filesystem::create_directories(f.out);
    return (std::filesystem::path(f.out) / name).string();
}

int cmd_simulate(const CommonFlags& f) {
    beg::RunConfig cfg = resolve(f);
    const beg::FlowTrace trace = beg::run_flow(cfg.initial, cfg.params, cfg.flow);

    std::ostringstream jsonl;
    beg::write_trace_jsonl(jsonl, trace, {{"config", beg::config_to_json(cfg)}});
    beg::write_text_file(out_path(f, "trace.jsonl"), jsonl.str());
    std::ostringstream csv;
    beg::write_side_csv(csv, beg::extract_side_series(trace));
    beg::write_text_file(out_path(f, "sides.csv"), csv.str());
    if (cfg.flow.audit) {
        std::ostringstream audit;
        beg::write_audit_csv(audit, trace.audit);
        beg::write_text_file(out_path(f, "audit.csv"), audit.str());
    }
    std::cout << "steps: " << trace.last_step() << '\n';
    std::cout << "stop_reason: " << beg::to_string(trace.stop);
    if (!trace.stop_detail.empty()) std::cout << " (" << trace.stop_detail << ')';
    std::cout << '\n';
    return kExitOk;
}

int cmd_continuum(const CommonFlags& f) {
    beg::RunConfig cfg = resolve(f);
    const beg::ContinuumTrace tr = beg::integrate_flow(cfg.initial.octagon, cfg.params, cfg.horizon, cfg.branch);
    std::ostringstream csv;
    beg::write_continuum_csv(csv, tr);
    beg::write_text_file(out_path(f, "continuum.csv"), csv.str());
    std::cout << "end_time: " << beg::format_double(tr.end_time) << '\n';
    std::cout << "events: " << tr.events.size() << '\n';
    return kExitOk;
}

int cmd_compare(const CommonFlags& f) {
    beg::RunConfig cfg = resolve(f);
    const beg::ContinuumTrace cont = beg::integrate_flow(cfg.initial.octagon, cfg.params, cfg.horizon, cfg.branch);

    std::vector<std::future<beg::FlowTrace>> jobs;
    for (double eps : cfg.compare_epsilons) {
        jobs.push_back(std::async(std::launch::async, [&cfg, &cont, eps] {
            beg::ModelParams p = cfg.params;
            p.epsilon = eps;
            beg::FlowOptions opts = cfg.flow;
            opts.max_steps = int(std::ceil(cont.end_time / p.tau() + 1e-9));
            return beg::run_flow(cfg.initial, p, opts);
        }));
    }
    std::vector<beg::FlowTrace> traces;
    for (auto& j : jobs) traces.push_back(j.get());
    const auto rows = beg::compare_discrete_continuum(traces, cont);

    std::ostringstream csv;
    beg::write_compare_csv(csv, rows);
    beg::write_text_file(out_path(f, "compare.csv"), csv.str());
    std::cout << csv.str();
    return kExitOk;
}

int cmd_oracle_check(const CommonFlags&) {
    double worst = 0.0;
    bool ok = true;
    for (const auto& fx : beg::oracle_fixtures()) {
        const beg::OracleOutcome o = beg::run_oracle_fixture(fx);
        std::printf("%-24s structured=%.17g brute=%.17g diff=%.3g%s\n", o.name.c_str(), o.structured, o.brute,
                    o.discrepancy, o.structured_in_window ? "" : " (left the search window)");
        worst = std::max(worst, o.discrepancy);
        ok = ok && o.structured_in_window;
    }
    std::printf("max discrepancy: %.3g\n", worst);
    return ok && worst <= 1e-12 ? kExitOk : kExitOracle;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Minimizing-movement simulator for the three-phase lattice model"};
    app.require_subcommand(1);
    CommonFlags sim, cont, cmp, orc;
    add_common(app.add_subcommand("simulate", "run the discrete flow"), sim, true);
    add_common(app.add_subcommand("continuum", "integrate the limit flow"), cont, true);
    add_common(app.add_subcommand("compare", "discrete versus continuum over the configured spacings"), cmp, true);
    add_common(app.add_subcommand("oracle-check", "structured versus exhaustive minimizer on fixtures"), orc, false);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? kExitOk : kExitValidation;
    }

    try {
        if (app.got_subcommand("simulate")) return cmd_simulate(sim);
        if (app.got_subcommand("continuum")) return cmd_continuum(cont);
        if (app.got_subcommand("compare")) return cmd_compare(cmp);
        if (app.got_subcommand("oracle-check")) return cmd_oracle_check(orc);
    } catch (const beg::ValidationError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitValidation;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitRuntime;
    }
    return kExitRuntime;
}
