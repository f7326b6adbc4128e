#include "rodwave/cli.hpp"

#include <algorithm>
#include <atomic>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <thread>

#include <CLI11.hpp>
#include <json.hpp>

#include "rodwave/config.hpp"
#include "rodwave/criteria.hpp"
#include "rodwave/dynamics.hpp"
#include "rodwave/io.hpp"
#include "rodwave/kernel.hpp"

namespace rodwave::cli {

namespace fs = std::filesystem;
using json = nlohmann::ordered_json;

namespace {

struct LoadedExperiment {
    ExperimentConfig config;
    ModelSpec model;
    Field u0;
    std::string out_dir;
};

LoadedExperiment load_experiment(const Options& opts) {
    LoadedExperiment exp;
    exp.config = load_config(opts.config_path);
    if (!opts.out_dir.empty()) exp.config.out = opts.out_dir;
    if (exp.config.out.empty()) throw ConfigError("out", "required (config key `out` or --out)");
    validate(exp.config);
    exp.model = build_model(exp.config);
    exp.u0 = build_initial_field(exp.config);
    exp.out_dir = exp.config.out;
    fs::create_directories(exp.out_dir);
    return exp;
}

json model_json(const ExperimentConfig& cfg, const ModelSpec& model) {
    json j;
    j["preset"] = to_string(model.preset);
    if (model.preset == Preset::camassa_holm || model.preset == Preset::power) j["kappa"] = cfg.kappa;
    if (model.preset == Preset::rod) j["gamma"] = cfg.gamma;
    if (model.preset == Preset::power) j["Q"] = cfg.q;
    j["gamma_floor"] = model.gamma;
    j["range"] = {model.range_lo, model.range_hi};
    return j;
}

json params_json(const CriterionParams& params) {
    json j;
    j["case"] = to_string(params.kind);
    if (params.kind == CriterionCase::none) {
        j["diagnostic"] = params.diagnostic;
    } else {
        j["c"] = params.c;
        j["extremum"] = params.extremum;
        j["K"] = params.lipschitz_k;
        j["alpha"] = params.alpha;
        j["beta"] = params.beta;
    }
    return j;
}

json certificate_json(const CriterionReport& report, const CriterionParams& params) {
    json j;
    j["kind"] = to_string(report.kind);
    j["satisfied"] = report.satisfied;
    if (report.witness) {
        j["x0"] = report.witness->x0;
        j["u0_at_x0"] = report.witness->u0_at_x0;
        j["slope_at_x0"] = report.witness->slope_at_x0;
    } else {
        j["x0"] = nullptr;
        j["u0_at_x0"] = nullptr;
        j["slope_at_x0"] = nullptr;
    }
    if (params.kind != CriterionCase::none && report.kind != CriterionKind::tyz) {
        j["beta"] = params.beta;
        j["c"] = params.c;
        j["K"] = params.lipschitz_k;
    } else {
        j["beta"] = nullptr;
        j["c"] = nullptr;
        j["K"] = nullptr;
    }
    if (report.t_star_bound) j["t_star_bound"] = *report.t_star_bound;
    else j["t_star_bound"] = nullptr;
    j["detail"] = report.detail;
    return j;
}

json observation_json(const BlowupObservation& obs) {
    json j;
    j["blew_up"] = obs.blew_up;
    j["t_last"] = obs.t_last;
    if (obs.t_estimate) j["T_est"] = *obs.t_estimate;
    else j["T_est"] = nullptr;
    j["fit_quality"] = obs.fit_quality;
    j["rate_slope"] = obs.rate_slope;
    j["stop_reason"] = obs.stop_reason;
    return j;
}

void write_json(const std::string& path, const json& j) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open for writing: " + path);
    out << j.dump(2) << '\n';
}

int guard(const std::function<int()>& body) {
    try {
        return body();
    } catch (const ConfigError& e) {
        std::cerr << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 3;
    }
}

struct SweepRow {
    std::vector<double> values;
    std::string csv;
};

}  // namespace

int cmd_simulate(const Options& opts) {
    return guard([&] {
        LoadedExperiment exp = load_experiment(opts);
        const CriterionParams params = derive_criterion_params(exp.model);

        int snapshot_index = 0;
        auto on_record = [&](const State& state) {
            char name[32];
            std::snprintf(name, sizeof(name), "snapshot_%06d.bin", snapshot_index++);
            write_snapshot((fs::path(exp.out_dir) / name).string(), state);
        };

        std::optional<CriterionParams> maybe_params;
        if (params.kind != CriterionCase::none) maybe_params = params;
        IntegrationResult result =
            integrate(exp.u0, exp.model, exp.config.solver, exp.config.seeds, maybe_params, on_record);

        write_diagnostics_csv((fs::path(exp.out_dir) / "diagnostics.csv").string(), result.trajectory);
        write_traces_csv((fs::path(exp.out_dir) / "traces.csv").string(), result.traces);

        json summary;
        summary["command"] = "simulate";
        summary["seed"] = opts.seed;
        summary["model"] = model_json(exp.config, exp.model);
        summary["grid"] = {{"L", exp.config.length}, {"n", exp.config.n}};
        summary["criterion_params"] = params_json(params);
        summary["observation"] = observation_json(result.observation);
        summary["energy_initial"] = result.trajectory.empty() ? 0.0 : result.trajectory.front().energy;
        summary["energy_final"] = result.trajectory.empty() ? 0.0 : result.trajectory.back().energy;
        summary["snapshots"] = snapshot_index;
        write_json((fs::path(exp.out_dir) / "summary.json").string(), summary);
        return 0;
    });
}

int cmd_analyze(const Options& opts) {
    return guard([&] {
        LoadedExperiment exp = load_experiment(opts);
        Certificates certs = certify(exp.u0, exp.model);

        json j;
        j["command"] = "analyze";
        j["seed"] = opts.seed;
        j["model"] = model_json(exp.config, exp.model);
        j["grid"] = {{"L", exp.config.length}, {"n", exp.config.n}};
        j["criterion_params"] = params_json(certs.params);
        json list = json::array();
        for (const CriterionReport& report : certs.reports)
            list.push_back(certificate_json(report, certs.params));
        j["certificates"] = list;
        write_json((fs::path(exp.out_dir) / "certificates.json").string(), j);
        return 0;
    });
}

int cmd_sweep(const Options& opts) {
    return guard([&] {
        LoadedExperiment exp = load_experiment(opts);
        if (exp.config.sweep.empty()) throw ConfigError("sweep", "no sweep axes given (sweep_<param> keys)");
        for (const auto& [key, values] : exp.config.sweep) {
            if (values.empty()) throw ConfigError("sweep_" + key, "empty value list");
            (void)with_override(exp.config, key, values.front());  // axis name must be sweepable
        }

        std::vector<std::string> axes;
        for (const auto& [key, values] : exp.config.sweep) axes.push_back(key);

        // cartesian product, deterministic order by axis name then value index
        std::vector<std::vector<double>> cells;
        std::vector<double> cursor;
        std::function<void(size_t)> expand = [&](size_t axis) {
            if (axis == axes.size()) {
                cells.push_back(cursor);
                return;
            }
            for (double v : exp.config.sweep.at(axes[axis])) {
                cursor.push_back(v);
                expand(axis + 1);
                cursor.pop_back();
            }
        };
        expand(0);

        std::vector<std::string> rows(cells.size());
        std::atomic<size_t> next{0};
        auto worker = [&] {
            for (;;) {
                const size_t i = next.fetch_add(1);
                if (i >= cells.size()) return;
                ExperimentConfig cell_cfg = exp.config;
                for (size_t a = 0; a < axes.size(); ++a)
                    cell_cfg = with_override(cell_cfg, axes[a], cells[i][a]);

                std::ostringstream row;
                for (double v : cells[i]) row << format_double(v) << ',';
                try {
                    const ModelSpec model = build_model(cell_cfg);
                    const Field u0 = build_initial_field(cell_cfg);
                    const CriterionParams params = derive_criterion_params(model);
                    row << to_string(params.kind) << ',';
                    if (params.kind != CriterionCase::none)
                        row << format_double(params.c) << ',' << format_double(params.lipschitz_k) << ','
                            << format_double(params.alpha) << ',' << format_double(params.beta) << ',';
                    else
                        row << ",,,,";

                    CriterionReport local;
                    bool have_local = false;
                    if (params.kind != CriterionCase::none) {
                        local = check_local(u0, params, model.gamma);
                        have_local = true;
                    }
                    const CriterionReport tyz = check_tyz(u0, model);
                    row << (have_local && local.satisfied ? "true" : "false") << ',';
                    row << (have_local && local.t_star_bound ? format_double(*local.t_star_bound) : "") << ',';
                    row << (tyz.satisfied ? "true" : "false") << ',';
                    row << (tyz.t_star_bound ? format_double(*tyz.t_star_bound) : "") << ',';

                    std::optional<CriterionParams> maybe_params;
                    if (params.kind != CriterionCase::none) maybe_params = params;
                    IntegrationResult result = integrate(u0, model, cell_cfg.solver, {}, maybe_params);
                    const BlowupObservation& obs = result.observation;
                    row << (obs.blew_up ? "true" : "false") << ',' << format_double(obs.t_last) << ','
                        << (obs.t_estimate ? format_double(*obs.t_estimate) : "") << ','
                        << format_double(obs.fit_quality);
                } catch (const std::exception& e) {
                    std::string msg = e.what();
                    std::replace(msg.begin(), msg.end(), ',', ';');
                    row << "error: " << msg;
                }
                rows[i] = row.str();
            }
        };

        int jobs = opts.jobs > 0 ? opts.jobs : static_cast<int>(std::thread::hardware_concurrency());
        jobs = std::max(1, std::min<int>(jobs, static_cast<int>(cells.size())));
        std::vector<std::thread> pool;
        for (int j = 1; j < jobs; ++j) pool.emplace_back(worker);
        worker();
        for (std::thread& th : pool) th.join();

        std::ofstream out(fs::path(exp.out_dir) / "sweep.csv", std::ios::binary);
        if (!out) throw std::runtime_error("cannot open sweep.csv for writing");
        for (const std::string& a : axes) out << a << ',';
        out << "case,c,K,alpha,beta,local_satisfied,local_t_star_bound,"
               "tyz_satisfied,tyz_t_star_bound,blew_up,t_last,T_est,fit_quality\n";
        for (const std::string& row : rows) out << row << '\n';
        return 0;
    });
}

int run_cli(const std::vector<std::string>& args) {
    CLI::App app{"Simulator and blowup analyzer for generalized hyperelastic-rod wave equations"};
    app.require_subcommand(1);
    app.footer(R"(Config keys (flat `key = value`, '#' comments, lists comma-separated):
  model              camassa_holm | rod | power | custom        (required)
  kappa              dispersion parameter                       (default 0)
  gamma              rod-model parameter                        (default 1)
  Q                  power-model exponent, >= 1                 (default 1)
  f_coeffs,g_coeffs  custom polynomials, ascending coefficients
  range_lo,range_hi  certification range for f'', g             (default -8, 8)
  L                  domain length, domain is [0, L) periodic   (required)
  n                  grid points, power of two >= 16            (required)
  cfl                time-step safety factor in (0, 1]          (default 0.3)
  dt_min             smallest admissible step                   (default 1e-9)
  slope_floor        min u_x level declaring breakdown          (default -1e4)
  t_end              integration horizon                        (required)
  record_every       diagnostics/snapshot cadence               (default t_end/100)
  energy_drift_stop  relative energy drift declaring breakdown  (default 1e-4, 0 disables)
  dealias            2/3-rule on nonlinear terms                (default false)
  trig_char_interp   trig sampling along characteristics        (default false)
  profile            sine | gaussian_bump | derivative_bump | smoothed_peakon | samples
  amplitude          profile amplitude                          (default 1)
  phase              sine phase                                 (default 0)
  width              bump width                                 (default 1)
  center             bump/peakon center                         (default L/2)
  offset_c           profile baseline                           (default 0)
  mollification      peakon crest smoothing                     (default 0.05)
  samples_path       CSV (x,value) with exactly n rows          (profile = samples)
  seeds              characteristic seed positions              (default none)
  out                output directory                           (or --out)
  sweep_<param>      sweep axis over kappa|gamma|amplitude|width|center|offset_c|phase|
                     mollification|cfl|t_end; cells run concurrently, rows ordered)");

    Options opts;
    auto add_common = [&](CLI::App* sub) {
        sub->add_option("--config", opts.config_path, "experiment config path")->required();
        sub->add_option("--out", opts.out_dir, "output directory (overrides config `out`)");
        sub->add_option("--jobs", opts.jobs, "worker threads for sweeps (default: hardware)");
        sub->add_option("--seed", opts.seed, "seed recorded in outputs (reserved for randomized profiles)");
    };
    CLI::App* simulate = app.add_subcommand("simulate", "integrate the PDE and write diagnostics");
    CLI::App* analyze = app.add_subcommand("analyze", "evaluate blowup criteria on the initial datum");
    CLI::App* sweep = app.add_subcommand("sweep", "cartesian parameter sweep");
    add_common(simulate);
    add_common(analyze);
    add_common(sweep);

    std::vector<std::string> argv_rev(args.rbegin(), args.rend());
    try {
        app.parse(argv_rev);
    } catch (const CLI::ParseError& e) {
        // CLI11 prints help itself; map its exit semantics onto ours
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    if (simulate->parsed()) return cmd_simulate(opts);
    if (analyze->parsed()) return cmd_analyze(opts);
    return cmd_sweep(opts);
}

}  // namespace rodwave::cli
