// SPDX-License-Identifier: Apache-2.0
#include "denseplan/cli.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include <CLI11.hpp>
#include <json.hpp>

#include "denseplan/errors.hpp"
#include "denseplan/geometry.hpp"
#include "denseplan/montecarlo.hpp"
#include "denseplan/optimizer.hpp"
#include "denseplan/power.hpp"
#include "denseplan/rate.hpp"
#include "denseplan/scenario_io.hpp"

namespace denseplan::cli {
namespace {

std::string fmt(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.10g", v);
    return buf;
}

struct Table {
    std::vector<std::string> header;
    std::vector<std::vector<std::string>> rows;
    std::vector<std::pair<std::string, std::string>> summary;
};

void render_table(const Table& t, std::ostream& out) {
    std::vector<size_t> width(t.header.size(), 0);
    for (size_t c = 0; c < t.header.size(); ++c) width[c] = t.header[c].size();
    for (const auto& r : t.rows)
        for (size_t c = 0; c < r.size(); ++c) width[c] = std::max(width[c], r[c].size());
    auto line = [&](const std::vector<std::string>& cells) {
        for (size_t c = 0; c < cells.size(); ++c) {
            out << cells[c];
            if (c + 1 < cells.size())
                out << std::string(width[c] - cells[c].size() + 2, ' ');
        }
        out << "\n";
    };
    line(t.header);
    for (const auto& r : t.rows) line(r);
    for (const auto& [k, v] : t.summary) out << k << ": " << v << "\n";
}

void render_csv(const Table& t, std::ostream& out) {
    auto line = [&](const std::vector<std::string>& cells) {
        for (size_t c = 0; c < cells.size(); ++c) {
            out << cells[c];
            if (c + 1 < cells.size()) out << ',';
        }
        out << "\n";
    };
    line(t.header);
    for (const auto& r : t.rows) line(r);
    // summary entries become trailing comment-style rows to keep one schema
    for (const auto& [k, v] : t.summary) out << "# " << k << "," << v << "\n";
}

void render_json(const Table& t, const std::string& command, std::ostream& out) {
    nlohmann::json j;
    j["schema_version"] = kSchemaVersion;
    j["command"] = command;
    j["columns"] = t.header;
    j["rows"] = nlohmann::json::array();
    for (const auto& r : t.rows) j["rows"].push_back(r);
    nlohmann::json s = nlohmann::json::object();
    for (const auto& [k, v] : t.summary) s[k] = v;
    j["summary"] = s;
    out << j.dump(2) << "\n";
}

void render(const Table& t, const std::string& format, const std::string& command,
            std::ostream& out) {
    if (format == "csv")
        render_csv(t, out);
    else if (format == "json")
        render_json(t, command, out);
    else
        render_table(t, out);
}

struct Sweep {
    std::string param;
    std::vector<double> values;
};

Sweep parse_sweep(const std::string& text) {
    Sweep s;
    std::istringstream in(text);
    std::string start, stop, points, scale;
    if (!std::getline(in, s.param, ':') || !std::getline(in, start, ':') ||
        !std::getline(in, stop, ':') || !std::getline(in, points, ':') ||
        !std::getline(in, scale))
        throw std::domain_error("sweep: expected PARAM:start:stop:points:lin|log");
    const double a = std::stod(start), b = std::stod(stop);
    const int n = std::stoi(points);
    if (n < 1) throw std::domain_error("sweep: points must be >= 1");
    if (scale != "lin" && scale != "log") throw std::domain_error("sweep: scale is lin or log");
    for (int i = 0; i < n; ++i) {
        const double f = n == 1 ? 0.0 : static_cast<double>(i) / (n - 1);
        s.values.push_back(scale == "log" ? a * std::pow(b / a, f) : a + (b - a) * f);
    }
    return s;
}

void apply_sweep_value(NetworkScenario& scn, const std::string& param, double v) {
    if (param == "ue_density") {
        scn.ue_density = v;
        return;
    }
    if (param.rfind("tier", 0) == 0) {
        const auto us = param.find("_density");
        if (us != std::string::npos) {
            const int idx = std::stoi(param.substr(4, us - 4));
            scn.tiers.at(idx).density = v;
            return;
        }
    }
    throw std::domain_error("sweep: unknown parameter " + param);
}

bool closed_bounds_applicable(const NetworkScenario& s) {
    return s.tiers.size() == 1 && s.tiers[0].nakagami_m == 1.0 && s.tiers[0].pathloss == 4.0 &&
           s.noise_w == 0.0;
}

int cmd_rate(const NetworkScenario& scenario, const std::string& sweep_text,
             bool closed_bounds, bool full_load, const std::string& format, std::ostream& out,
             std::ostream& err) {
    Table t;
    t.header = {"ue_density_per_km2", "rate_bps_hz"};
    bool bounds = closed_bounds && closed_bounds_applicable(scenario);
    if (closed_bounds && !bounds)
        err << "note: closed-form bounds need a single Rayleigh pathloss-4 tier with zero "
               "noise; columns omitted\n";
    if (bounds) {
        t.header.push_back("closed_lower_bps_hz");
        t.header.push_back("closed_upper_bps_hz");
    }
    std::vector<std::pair<double, NetworkScenario>> points;
    if (sweep_text.empty()) {
        points.emplace_back(scenario.ue_density, scenario);
    } else {
        const Sweep s = parse_sweep(sweep_text);
        t.header[0] = s.param;
        for (double v : s.values) {
            NetworkScenario scn = scenario;
            apply_sweep_value(scn, s.param, v);
            points.emplace_back(v, scn);
        }
    }
    RateOptions ropt;
    ropt.force_full_load = full_load;
    for (const auto& [v, scn] : points) {
        RateResult r = average_rate(scn, ropt);
        std::vector<std::string> row{fmt(v), fmt(r.rate)};
        if (bounds) {
            const double phi = full_load ? 1.0 : activity_prob(scn, 0);
            if (phi > 0.0) {
                RateBounds b = closed_form_rate_bounds(phi);
                row.push_back(fmt(b.lower));
                row.push_back(fmt(b.upper));
            } else {
                row.push_back("inf");
                row.push_back("inf");
            }
        }
        t.rows.push_back(row);
    }
    render(t, format, "rate", out);
    return kExitOk;
}

int cmd_optimize(const NetworkScenario& scenario, double r0, const std::string& sweep_text,
                 bool closed_bounds, const std::string& format, std::uint64_t seed,
                 std::ostream& out, std::ostream& err) {
    Table t;
    t.header = {"r0_bps_hz"};
    for (size_t i = 0; i < scenario.tiers.size(); ++i)
        t.header.push_back("density" + std::to_string(i) + "_per_km2");
    t.header.push_back("objective_w_km2");
    t.header.push_back("achieved_rate_bps_hz");
    t.header.push_back("solver");
    const bool bounds = closed_bounds && closed_bounds_applicable(scenario);
    if (closed_bounds && !bounds)
        err << "note: closed-form density bounds need a single Rayleigh pathloss-4 tier "
               "with zero noise; columns omitted\n";
    if (bounds) {
        t.header.push_back("closed_lower_per_km2");
        t.header.push_back("closed_upper_per_km2");
    }

    std::vector<double> targets;
    if (sweep_text.empty()) {
        targets.push_back(r0);
    } else {
        const Sweep s = parse_sweep(sweep_text);
        if (s.param != "r0") throw std::domain_error("optimize: only r0 sweeps are supported");
        targets = s.values;
    }
    OptimizeOptions opt;
    opt.seed = seed;
    bool any_infeasible = false;
    for (double target : targets) {
        DeploymentSolution sol;
        try {
            sol = scenario.tiers.size() == 1 ? optimize_single_tier(scenario, target, opt)
                                             : optimize_multi_tier(scenario, target, opt);
        } catch (const infeasible_error& e) {
            err << "infeasible at r0=" << fmt(target) << ": " << e.what() << "\n";
            any_infeasible = true;
            continue;
        }
        if (!sol.feasible) any_infeasible = true;
        std::vector<std::string> row{fmt(target)};
        for (double d : sol.densities) row.push_back(fmt(d));
        row.push_back(fmt(sol.objective));
        row.push_back(fmt(sol.achieved_rate));
        row.push_back(sol.solver == SolverKind::brent ? "brent" : "simplex");
        if (bounds) {
            const TierConfig& tier = scenario.tiers[0];
            DensityBounds b = closed_form_density_bounds(scenario.ue_density,
                                                         shadow_fractional_moment(tier), target);
            row.push_back(fmt(b.lower));
            row.push_back(fmt(b.upper));
        }
        t.rows.push_back(row);
    }
    render(t, format, "optimize", out);
    return any_infeasible ? kExitInfeasible : kExitOk;
}

int cmd_savings(const NetworkScenario& scenario, const TrafficProfile& profile, double r0,
                const std::string& format, std::uint64_t seed, std::ostream& out) {
    Table t;
    t.header = {"hours", "load_percent"};
    for (size_t i = 0; i < scenario.tiers.size(); ++i)
        t.header.push_back("active" + std::to_string(i) + "_per_km2");
    t.header.insert(t.header.end(), {"power_sleep_w_km2", "power_full_w_km2",
                                     "savings_w_km2", "relative_saving"});
    OptimizeOptions opt;
    opt.seed = seed;
    SavingsReport rep = daily_savings(scenario, profile, r0, opt);
    for (const SavingsHour& h : rep.hours) {
        std::vector<std::string> row{h.label, fmt(100.0 * h.relative_load)};
        for (double d : h.active_densities) row.push_back(fmt(d));
        row.push_back(fmt(h.consumption_with_sleep));
        row.push_back(fmt(h.consumption_full));
        row.push_back(fmt(h.savings));
        row.push_back(fmt(h.relative_saving));
        t.rows.push_back(row);
    }
    std::string deployed;
    for (size_t i = 0; i < rep.deployed_densities.size(); ++i)
        deployed += (i ? " " : "") + fmt(rep.deployed_densities[i]);
    t.summary.emplace_back("deployed_densities_per_km2", deployed);
    t.summary.emplace_back("daily_relative_saving", fmt(rep.daily_relative_saving));
    render(t, format, "savings", out);
    return rep.all_hours_feasible ? kExitOk : kExitInfeasible;
}

int cmd_simulate(const NetworkScenario& scenario, long trials, std::uint64_t seed,
                 bool full_load, bool emit_trials, const std::string& format, std::ostream& out) {
    SimulationConfig cfg;
    cfg.scenario = scenario;
    cfg.trials = trials;
    cfg.seed = seed;
    cfg.full_load_override = full_load;
    if (emit_trials) {
        write_trials_csv(out, cfg, trials);
        return kExitOk;
    }
    RateEstimate est = estimate_rate(cfg);
    ActivityEstimate act = activity_statistics(cfg);
    Table t;
    t.header = {"metric", "value"};
    t.rows.push_back({"trials", fmt(static_cast<double>(est.trials))});
    t.rows.push_back({"mean_rate_bps_hz", fmt(est.mean)});
    t.rows.push_back({"ci95_halfwidth_bps_hz", fmt(est.ci_halfwidth)});
    for (size_t i = 0; i < act.fraction.size(); ++i)
        t.rows.push_back({"active_fraction_tier" + std::to_string(i), fmt(act.fraction[i])});
    render(t, format, "simulate", out);
    return kExitOk;
}

int cmd_validate(const NetworkScenario& scenario, long trials, std::uint64_t seed,
                 bool full_load, const std::string& format, std::ostream& out) {
    RateOptions ropt;
    ropt.force_full_load = full_load;
    RateResult analytic = average_rate(scenario, ropt);

    SimulationConfig cfg;
    cfg.scenario = scenario;
    cfg.trials = trials;
    cfg.seed = seed;
    cfg.full_load_override = full_load;

    Table t;
    t.header = {"metric", "analytic", "simulated", "note"};
    bool lower_bound_ok = true;
    if (analytic.interference_free) {
        t.rows.push_back({"rate_bps_hz", "no-interference", "no-interference", "sentinel"});
    } else {
        RateEstimate est = estimate_rate(cfg);
        const bool ok = analytic.rate <= est.mean + est.ci_halfwidth;
        lower_bound_ok = ok;
        t.rows.push_back({"rate_bps_hz", fmt(analytic.rate),
                          fmt(est.mean) + "+-" + fmt(est.ci_halfwidth),
                          ok ? "lower-bound holds" : "lower-bound violated"});
    }
    AssociationStats stats = association_stats(scenario);
    AssociationSample assoc = association_statistics(cfg);
    for (size_t i = 0; i < scenario.tiers.size(); ++i) {
        const double emp = static_cast<double>(assoc.tier_counts[i]) / cfg.trials;
        t.rows.push_back({"connect_prob_tier" + std::to_string(i), fmt(stats.connect_prob[i]),
                          fmt(emp), ""});
    }
    if (scenario.ue_density > 0.0 && !full_load) {
        ActivityEstimate act = activity_statistics(cfg);
        for (size_t i = 0; i < scenario.tiers.size(); ++i)
            t.rows.push_back({"activity_prob_tier" + std::to_string(i),
                              fmt(stats.activity_prob[i]), fmt(act.fraction[i]), ""});
    }
    t.summary.emplace_back("lower_bound_property", lower_bound_ok ? "holds" : "violated");
    render(t, format, "validate", out);
    return lower_bound_ok ? kExitOk : kExitValidation;
}

}  // namespace

int run_command(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"load-aware cellular deployment planner"};
    app.require_subcommand(1);

    std::string scenario_path, profile_path, format = "table", sweep;
    double r0 = 0.0;
    long trials = 10000;
    std::uint64_t seed = 1;
    bool closed_bounds = false, full_load = false, emit_trials = false;

    auto add_common = [&](CLI::App* sub, bool needs_r0) {
        sub->add_option("--scenario", scenario_path, "scenario JSON file")->required();
        sub->add_option("--format", format, "table|csv|json")
            ->check(CLI::IsMember({"table", "csv", "json"}));
        if (needs_r0) sub->add_option("--r0", r0, "minimum rate requirement, b/s/Hz");
    };
    CLI::App* c_rate = app.add_subcommand("rate", "average rate of the typical UE");
    add_common(c_rate, false);
    c_rate->add_option("--sweep", sweep, "PARAM:start:stop:points:lin|log");
    c_rate->add_flag("--closed-bounds", closed_bounds, "closed-form bound columns");
    c_rate->add_flag("--full-load-override", full_load, "every BS transmits");

    CLI::App* c_opt = app.add_subcommand("optimize", "minimum-power deployment densities");
    add_common(c_opt, true);
    c_opt->add_option("--sweep", sweep, "r0:start:stop:points:lin|log");
    c_opt->add_flag("--closed-bounds", closed_bounds, "closed-form density bound columns");
    c_opt->add_option("--seed", seed, "solver restart seed");

    CLI::App* c_sav = app.add_subcommand("savings", "sleep-mode savings over a daily profile");
    add_common(c_sav, true);
    c_sav->add_option("--profile", profile_path, "traffic profile CSV");
    c_sav->add_option("--seed", seed, "solver restart seed");

    CLI::App* c_sim = app.add_subcommand("simulate", "Monte-Carlo rate estimate");
    add_common(c_sim, false);
    c_sim->add_option("--trials", trials, "number of trials");
    c_sim->add_option("--seed", seed, "master RNG seed");
    c_sim->add_flag("--full-load-override", full_load, "every BS transmits");
    c_sim->add_flag("--emit-trials", emit_trials, "raw per-trial CSV records");

    CLI::App* c_val = app.add_subcommand("validate", "analytic model vs Monte-Carlo");
    add_common(c_val, false);
    c_val->add_option("--trials", trials, "number of trials");
    c_val->add_option("--seed", seed, "master RNG seed");
    c_val->add_flag("--full-load-override", full_load, "every BS transmits");

    std::vector<std::string> rev(args.rbegin(), args.rend());
    try {
        app.parse(rev);
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        err << e.what() << "\n";
        return kExitParse;
    }

    try {
        ScenarioFile file = load_scenario(scenario_path);
        const NetworkScenario& scn = file.scenario;
        if (app.got_subcommand(c_rate))
            return cmd_rate(scn, sweep, closed_bounds, full_load, format, out, err);
        if (app.got_subcommand(c_opt)) {
            if (r0 <= 0.0 && sweep.empty())
                throw std::domain_error("optimize: --r0 (or an r0 sweep) is required");
            return cmd_optimize(scn, r0, sweep, closed_bounds, format, seed, out, err);
        }
        if (app.got_subcommand(c_sav)) {
            if (r0 <= 0.0) throw std::domain_error("savings: --r0 is required");
            TrafficProfile profile;
            if (!profile_path.empty())
                profile = load_profile_csv(profile_path);
            else if (file.profile)
                profile = *file.profile;
            else
                profile = default_traffic_profile();
            return cmd_savings(scn, profile, r0, format, seed, out);
        }
        if (app.got_subcommand(c_sim)) {
            if (trials < 100) throw std::domain_error("simulate: needs at least 100 trials");
            return cmd_simulate(scn, trials, seed, full_load, emit_trials, format, out);
        }
        if (app.got_subcommand(c_val)) {
            if (trials < 100) throw std::domain_error("validate: needs at least 100 trials");
            return cmd_validate(scn, trials, seed, full_load, format, out);
        }
        err << "unknown subcommand\n";
        return kExitParse;
    } catch (const infeasible_error& e) {
        err << "infeasible: " << e.what() << "\n";
        return kExitInfeasible;
    } catch (const numerical_error& e) {
        err << "numerical failure: " << e.what() << "\n";
        return kExitNumeric;
    } catch (const std::domain_error& e) {
        err << "error: " << e.what() << "\n";
        return kExitParse;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return kExitNumeric;
    }
}

}  // namespace denseplan::cli
