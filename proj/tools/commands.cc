// Copyright 2026 The Coinwalk Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "commands.h"

#include <algorithm>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <iomanip>
#include <map>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "coinwalk/analysis.h"
#include "coinwalk/calibration.h"
#include "coinwalk/experiment.h"
#include "coinwalk/records.h"
#include "coinwalk/simulator.h"
#include "coinwalk/transpiler.h"
#include "coinwalk/walk.h"
#include "svg_plot.h"

namespace coinwalk::cli {

namespace fs = std::filesystem;

namespace {

const std::map<std::string, CoinInit> kCoinInits{
    {"zero", CoinInit::Zero}, {"one", CoinInit::One}, {"symmetric", CoinInit::Symmetric}};

struct BuildArgs {
    std::size_t nodes = 8;
    std::size_t steps = 1;
    CoinInit coin_init = CoinInit::Zero;
    bool optimized = false;
    std::string out;
};

struct TranspileArgs {
    std::string in;
    std::string out;
    bool report = false;
    std::string report_out;
    std::size_t steps = 0;
};

struct NoiseArgs {
    std::string noise = "none";
    double strength = 1.0;
    bool native = false;
};

struct SamplingArgs {
    std::string mode = "exact";
    std::uint64_t shots = 4096;
    std::size_t repeats = 10;
    std::optional<std::uint64_t> seed;
};

struct RunArgs {
    std::size_t nodes = 8;
    std::size_t steps = 8;
    CoinInit coin_init = CoinInit::Zero;
    bool optimized = false;
    NoiseArgs noise;
    SamplingArgs sampling;
    std::string out;
    bool svg = false;
    std::size_t jobs = 1;
};

struct SweepArgs {
    std::size_t nodes = 16;
    std::size_t steps = 16;
    std::vector<double> strengths;
    NoiseArgs noise{"table2", 1.0, false};
    SamplingArgs sampling;
    std::string out;
    std::string svg;
    std::size_t jobs = 1;
};

struct FidelityArgs {
    std::string a;
    std::string b;
};

struct CompareArgs {
    std::string reference;
    std::string candidate;
    std::string out;
    std::string svg;
};

struct CalibrateArgs {
    std::string reference;
    std::size_t nodes = 16;
    std::size_t steps = 16;
    std::string grid;
    bool native = false;
    std::string out;
    std::size_t jobs = 1;
};

std::uint64_t resolve_seed(const std::optional<std::uint64_t> &flag) {
    if (flag) {
        return *flag;
    }
    if (const char *env = std::getenv("COINWALK_SEED"); env != nullptr && *env != '\0') {
        try {
            std::size_t used = 0;
            const auto v = std::stoull(env, &used);
            if (used == std::string(env).size()) {
                return v;
            }
        } catch (const std::exception &) {
        }
        throw ValidationError(std::string("COINWALK_SEED is not an unsigned integer: ") + env);
    }
    return 0;
}

std::optional<NoiseModel> resolve_noise(const NoiseArgs &args) {
    if (args.noise == "none") {
        return std::nullopt;
    }
    NoiseModel model = args.noise == "table2" ? default_model() : deserialize_noise_model(read_file(args.noise));
    model = scaled(model, args.strength);
    if (args.native) {
        model.mode = NoiseMode::Native;
    }
    return model;
}

std::optional<SamplingOptions> resolve_sampling(const SamplingArgs &args) {
    if (args.mode == "exact") {
        return std::nullopt;
    }
    if (args.shots < 1 || args.repeats < 1) {
        throw ValidationError("--shots and --repeats must be >= 1");
    }
    return SamplingOptions{args.shots, args.repeats, resolve_seed(args.seed)};
}

std::string step_name(std::size_t step) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "step_%02zu", step);
    return buf;
}

std::string repeat_name(std::size_t step, std::size_t repeat) {
    char buf[48];
    std::snprintf(buf, sizeof buf, "step_%02zu_rep_%02zu", step, repeat);
    return buf;
}

void add_noise_options(CLI::App *app, NoiseArgs &args) {
    app->add_option("--noise", args.noise, "none, table2, or a noise/v1 file")->capture_default_str();
    app->add_option("--strength", args.strength, "Noise strength in [0, 1]")
        ->check(CLI::Range(0.0, 1.0))
        ->capture_default_str();
    app->add_flag("--native-noise", args.native, "Lower to native gates before attaching 1q/2q noise");
}

void add_sampling_options(CLI::App *app, SamplingArgs &args) {
    app->add_option("--mode", args.mode, "exact or sampled")
        ->check(CLI::IsMember({"exact", "sampled"}))
        ->capture_default_str();
    app->add_option("--shots", args.shots, "Shots per sampled repeat")->capture_default_str();
    app->add_option("--repeats", args.repeats, "Sampled repeats per step")->capture_default_str();
    app->add_option("--seed", args.seed, "RNG seed (falls back to COINWALK_SEED, then 0)");
}

int cmd_build(const BuildArgs &args) {
    WalkSpec spec;
    spec.num_position_qubits = position_qubits_for(args.nodes);
    spec.steps = args.steps;
    spec.coin_init = args.coin_init;
    spec.use_optimized_4node = args.optimized;
    if (args.optimized && args.nodes != 4) {
        throw ValidationError("--optimized requires --nodes 4");
    }
    write_file(args.out, serialize(walk_circuit(spec)));
    return kExitOk;
}

int cmd_transpile(const TranspileArgs &args, std::ostream &out) {
    const Circuit source = deserialize(read_file(args.in));
    const Circuit native = transpile(source);
    write_file(args.out, serialize(native));
    const std::string report = census_report(source, native, args.steps);
    if (args.report) {
        out << report;
    }
    if (!args.report_out.empty()) {
        write_file(args.report_out, report);
    }
    return kExitOk;
}

int cmd_run(const RunArgs &args) {
    WalkSpec spec;
    spec.num_position_qubits = position_qubits_for(args.nodes);
    spec.steps = args.steps;
    spec.coin_init = args.coin_init;
    spec.use_optimized_4node = args.optimized;
    spec.validate();
    const auto noise = resolve_noise(args.noise);
    const auto sampling = resolve_sampling(args.sampling);
    const auto series = simulate_walk_series(spec, noise, args.jobs);
    const fs::path dir(args.out);

    for (const auto &[t, dist] : series) {
        if (!sampling) {
            const std::string backend = noise ? "exact-noisy" : "exact";
            write_file(dir / (step_name(t) + ".json"),
                       serialize(make_distribution_record(backend, args.nodes, t, dist)));
        } else {
            for (std::size_t r = 0; r < sampling->repeats; ++r) {
                const auto seed = derive_seed(sampling->seed, 0, t, r);
                write_file(dir / (repeat_name(t, r) + ".json"),
                           serialize(make_counts_record(noise ? "sampled-noisy" : "sampled", args.nodes, t,
                                                        sample_counts(dist, sampling->shots, seed))));
            }
        }
        if (args.svg) {
            write_file(dir / (step_name(t) + ".svg"),
                       distribution_bar_svg(std::to_string(args.nodes) + "-node walk, step " + std::to_string(t),
                                            dist));
        }
    }
    return kExitOk;
}

std::vector<PlotSeries> sweep_plot_series(const std::vector<SweepRow> &rows) {
    std::vector<PlotSeries> out;
    for (const auto &r : rows) {
        const std::string label = format_6g(r.strength * 100) + "%";
        if (out.empty() || out.back().label != label) {
            out.push_back({label, {}});
        }
        out.back().points.push_back({static_cast<double>(r.step), r.fidelity, r.std_error});
    }
    return out;
}

int cmd_sweep(const SweepArgs &args) {
    SweepConfig config;
    config.nodes = args.nodes;
    config.max_steps = args.steps;
    config.strengths = args.strengths.empty() ? default_sweep_strengths() : args.strengths;
    config.sampling = resolve_sampling(args.sampling);
    NoiseArgs full = args.noise;
    full.strength = 1.0;
    if (full.noise == "none") {
        throw ValidationError("sweep needs a noise model (table2 or a noise/v1 file)");
    }
    config.model = *resolve_noise(full);
    config.jobs = args.jobs;
    const auto rows = run_sweep(config);
    write_file(args.out, sweep_csv(rows));
    if (!args.svg.empty()) {
        write_file(args.svg, fidelity_plot_svg(std::to_string(args.nodes) + "-node walk, noise-strength sweep",
                                               sweep_plot_series(rows)));
    }
    return kExitOk;
}

int cmd_fidelity(const FidelityArgs &args, std::ostream &out) {
    const StepRecord a = deserialize_step_record(read_file(args.a));
    const StepRecord b = deserialize_step_record(read_file(args.b));
    out << std::fixed << std::setprecision(6) << hellinger_fidelity(a.distribution, b.distribution) << "\n";
    return kExitOk;
}

// Every *.json record in `dir`, grouped by walk length.
std::map<std::size_t, std::vector<StepRecord>> load_records(const fs::path &dir) {
    if (!fs::is_directory(dir)) {
        throw IoError("not a directory: " + dir.string());
    }
    std::vector<fs::path> files;
    for (const auto &entry : fs::directory_iterator(dir)) {
        if (entry.is_regular_file() && entry.path().extension() == ".json") {
            files.push_back(entry.path());
        }
    }
    std::sort(files.begin(), files.end());
    std::map<std::size_t, std::vector<StepRecord>> out;
    for (const auto &f : files) {
        StepRecord r = deserialize_step_record(read_file(f));
        out[r.steps].push_back(std::move(r));
    }
    if (out.empty()) {
        throw ValidationError("no records in " + dir.string());
    }
    return out;
}

// Reference records at one step are pooled: counts are summed, a lone
// distribution is taken as is.
std::map<std::size_t, Distribution> pooled_reference(const std::map<std::size_t, std::vector<StepRecord>> &records) {
    std::map<std::size_t, Distribution> out;
    for (const auto &[t, rs] : records) {
        if (rs.size() == 1) {
            out[t] = rs.front().distribution;
            continue;
        }
        Counts pooled;
        for (const auto &r : rs) {
            if (!r.counts) {
                throw ValidationError("cannot pool several distribution records at step " + std::to_string(t));
            }
            for (const auto &[k, n] : r.counts->counts) pooled.counts[k] += n;
            pooled.shots += r.counts->shots;
        }
        out[t] = normalize_counts(pooled);
    }
    return out;
}

std::map<std::size_t, std::vector<Distribution>> candidate_repeats(
    const std::map<std::size_t, std::vector<StepRecord>> &records) {
    std::map<std::size_t, std::vector<Distribution>> out;
    for (const auto &[t, rs] : records) {
        for (const auto &r : rs) out[t].push_back(r.distribution);
    }
    return out;
}

int cmd_compare(const CompareArgs &args) {
    const auto reference = pooled_reference(load_records(args.reference));
    const auto candidate = candidate_repeats(load_records(args.candidate));
    std::vector<std::size_t> ref_steps, cand_steps;
    for (const auto &[t, _] : reference) ref_steps.push_back(t);
    for (const auto &[t, _] : candidate) cand_steps.push_back(t);
    if (ref_steps != cand_steps) {
        throw ValidationError("reference and candidate directories cover different steps");
    }
    const auto series = fidelity_series(reference, candidate);
    write_file(args.out, to_csv(series));
    if (!args.svg.empty()) {
        PlotSeries ps{"candidate", {}};
        for (const auto &p : series) {
            ps.points.push_back({static_cast<double>(p.step), p.fidelity_mean, p.std_error});
        }
        write_file(args.svg, fidelity_plot_svg("Fidelity against reference", {ps}));
    }
    return kExitOk;
}

int cmd_calibrate(const CalibrateArgs &args, std::ostream &out) {
    WalkSpec walk;
    walk.num_position_qubits = position_qubits_for(args.nodes);
    walk.steps = args.steps;
    walk.validate();

    FidelitySeries reference;
    const fs::path ref_path(args.reference);
    if (fs::is_regular_file(ref_path) && ref_path.extension() == ".csv") {
        reference = parse_fidelity_csv(read_file(ref_path));
    } else {
        const auto noiseless = simulate_walk_series(walk, std::nullopt, args.jobs);
        reference = fidelity_series(noiseless, candidate_repeats(load_records(ref_path)));
    }
    CalibrationGrid grid = CalibrationGrid::parse(args.grid);
    grid.mode = args.native ? NoiseMode::Native : NoiseMode::Abstract;
    const auto result = calibrate(reference, walk, grid, args.jobs);
    write_file(args.out, serialize(result.model));
    out << "candidates " << result.evaluated << "\n";
    out << "mse " << format_6g(result.mse) << "\n";
    return kExitOk;
}

}  // namespace

int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err) {
    CLI::App app{"Coined quantum walks on cycles: build, transpile, simulate, compare", "coinwalk"};
    app.require_subcommand(1);

    BuildArgs build;
    auto *build_cmd = app.add_subcommand("build", "Write a walk circuit (circuit/v1)");
    build_cmd->add_option("--nodes", build.nodes, "Cycle size, a power of two")->required();
    build_cmd->add_option("--steps", build.steps, "Walk length")->required();
    build_cmd->add_option("--coin-init", build.coin_init, "zero, one or symmetric")
        ->transform(CLI::CheckedTransformer(kCoinInits, CLI::ignore_case));
    build_cmd->add_flag("--optimized", build.optimized, "Use the combined 4-node STEP");
    build_cmd->add_option("--out", build.out, "Output circuit file")->required();

    TranspileArgs tr;
    auto *tr_cmd = app.add_subcommand("transpile", "Lower a circuit to {CNOT, ID, RZ, SX, X}");
    tr_cmd->add_option("--in", tr.in, "Input circuit file")->required();
    tr_cmd->add_option("--out", tr.out, "Output circuit file")->required();
    tr_cmd->add_flag("--report", tr.report, "Print the census report");
    tr_cmd->add_option("--report-out", tr.report_out, "Write the census report to a file");
    tr_cmd->add_option("--steps", tr.steps, "Walk length, for per-step totals");

    RunArgs run_args;
    auto *run_cmd = app.add_subcommand("run", "Simulate every walk length 0..T");
    run_cmd->add_option("--nodes", run_args.nodes, "Cycle size, a power of two")->required();
    run_cmd->add_option("--steps", run_args.steps, "Largest walk length")->required();
    run_cmd->add_option("--coin-init", run_args.coin_init, "zero, one or symmetric")
        ->transform(CLI::CheckedTransformer(kCoinInits, CLI::ignore_case));
    run_cmd->add_flag("--optimized", run_args.optimized, "Use the combined 4-node STEP");
    add_noise_options(run_cmd, run_args.noise);
    add_sampling_options(run_cmd, run_args.sampling);
    run_cmd->add_option("--out", run_args.out, "Output directory")->required();
    run_cmd->add_flag("--svg", run_args.svg, "Also write a bar chart per step");
    run_cmd->add_option("--jobs", run_args.jobs, "Worker threads")->check(CLI::PositiveNumber);

    SweepArgs sweep;
    auto *sweep_cmd = app.add_subcommand("sweep", "Fidelity per step across noise strengths");
    sweep_cmd->add_option("--nodes", sweep.nodes, "Cycle size, a power of two")->capture_default_str();
    sweep_cmd->add_option("--steps", sweep.steps, "Largest walk length")->capture_default_str();
    sweep_cmd->add_option("--strengths", sweep.strengths, "Ascending strengths (default 0,0.02,0.06,0.1..1)")
        ->delimiter(',');
    sweep_cmd->add_option("--noise", sweep.noise.noise, "table2 or a noise/v1 file")->capture_default_str();
    sweep_cmd->add_flag("--native-noise", sweep.noise.native, "Lower to native gates before attaching noise");
    add_sampling_options(sweep_cmd, sweep.sampling);
    sweep_cmd->add_option("--out", sweep.out, "Output CSV")->required();
    sweep_cmd->add_option("--svg", sweep.svg, "Also write fidelity curves");
    sweep_cmd->add_option("--jobs", sweep.jobs, "Worker threads")->check(CLI::PositiveNumber);

    FidelityArgs fid;
    auto *fid_cmd = app.add_subcommand("fidelity", "Hellinger fidelity of two result files");
    fid_cmd->add_option("--a", fid.a, "counts/v1 or distribution/v1 file")->required();
    fid_cmd->add_option("--b", fid.b, "counts/v1 or distribution/v1 file")->required();

    CompareArgs cmp;
    auto *cmp_cmd = app.add_subcommand("compare", "Per-step fidelity of a candidate directory");
    cmp_cmd->add_option("--reference", cmp.reference, "Directory of reference records")->required();
    cmp_cmd->add_option("--candidate", cmp.candidate, "Directory of candidate records")->required();
    cmp_cmd->add_option("--out", cmp.out, "Output CSV")->required();
    cmp_cmd->add_option("--svg", cmp.svg, "Also write the fidelity curve");

    CalibrateArgs cal;
    auto *cal_cmd = app.add_subcommand("calibrate", "Grid-search a noise model against reference data");
    cal_cmd->add_option("--reference", cal.reference, "Directory of device records, or a fidelity CSV")
        ->required();
    cal_cmd->add_option("--nodes", cal.nodes, "Cycle size, a power of two")->capture_default_str();
    cal_cmd->add_option("--steps", cal.steps, "Largest walk length")->capture_default_str();
    cal_cmd->add_option("--grid", cal.grid, "l1=..;l2=..;l3=..;lm=..;s=.. (lists or lo:hi:points)")->required();
    cal_cmd->add_flag("--native-noise", cal.native, "Fit the native-gate noise path");
    cal_cmd->add_option("--out", cal.out, "Output noise/v1 file")->required();
    cal_cmd->add_option("--jobs", cal.jobs, "Worker threads")->check(CLI::PositiveNumber);

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError &e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kExitOk : kExitValidation;
    }

    try {
        if (build_cmd->parsed()) return cmd_build(build);
        if (tr_cmd->parsed()) return cmd_transpile(tr, out);
        if (run_cmd->parsed()) return cmd_run(run_args);
        if (sweep_cmd->parsed()) return cmd_sweep(sweep);
        if (fid_cmd->parsed()) return cmd_fidelity(fid, out);
        if (cmp_cmd->parsed()) return cmd_compare(cmp);
        if (cal_cmd->parsed()) return cmd_calibrate(cal, out);
    } catch (const IoError &e) {
        err << "error: " << e.what() << "\n";
        return kExitIo;
    } catch (const std::exception &e) {
        err << "error: " << e.what() << "\n";
        return kExitValidation;
    }
    return kExitValidation;
}

}  // namespace coinwalk::cli
