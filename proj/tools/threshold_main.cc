// Copyright 2026 The surfsim Authors
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

#include <fstream>
#include <iostream>
#include <map>

#include "CLI11.hpp"
#include "surfsim/threshold.h"

using namespace surfsim;

namespace {

const std::map<std::string, IdleNoise> kIdleModes{{"all", IdleNoise::All}, {"data-only", IdleNoise::DataOnly}};

SweepSummary load_summary(const std::string &path) {
    std::ifstream in(path);
    if (!in) {
        throw std::runtime_error("cannot open " + path);
    }
    return read_csv(in);
}

std::ofstream open_out(const std::string &path, std::ios::openmode mode = std::ios::out) {
    std::ofstream out(path, mode);
    if (!out) {
        throw std::runtime_error("cannot write " + path);
    }
    return out;
}

}  // namespace

int main(int argc, char **argv) {
    CLI::App app{"Planar surface code memory experiment: mean cycles until logical failure."};
    app.set_config("--config", "", "INI/TOML file with option values");

    SweepConfig cfg;
    double p_min = 3e-3, p_max = 1.2e-2;
    size_t p_steps = 8;
    std::string out_path;
    bool estimate = false;
    app.add_option("--distances", cfg.distances, "Code distances")->delimiter(',');
    app.add_option("--p-min", p_min, "Smallest physical error rate");
    app.add_option("--p-max", p_max, "Largest physical error rate");
    app.add_option("--p-steps", p_steps, "Log-spaced error rates");
    app.add_option("--trials", cfg.trials, "Trials per (d, p) cell");
    app.add_option("--max-cycles", cfg.max_cycles, "Cycle cap; longer trials are censored");
    app.add_option("--seed", cfg.seed, "Master seed");
    app.add_option("--out", out_path, "CSV output (stdout if omitted)");
    app.add_option("--t-freeze", cfg.t_freeze, "Decoder freeze horizon in cycles");
    app.add_option("--idle-noise", cfg.idle, "Memory noise on idle qubits: all or data-only")
        ->transform(CLI::CheckedTransformer(kIdleModes, CLI::ignore_case).description(""))
        ->type_name("all|data-only");
    app.add_option("--threads", cfg.threads, "Worker threads (0 = all cores)");
    app.add_flag("--estimate", estimate, "Print the threshold estimate to stderr");
    bool no_baseline = false;
    app.add_flag("--no-baseline", no_baseline, "Skip the single-qubit reference series");

    auto *plot = app.add_subcommand("plotdata", "Gnuplot columns from a sweep CSV");
    std::string plot_in, plot_out;
    plot->add_option("csv", plot_in, "Sweep CSV")->required();
    plot->add_option("--out", plot_out, "Output file (stdout if omitted)");

    auto *est = app.add_subcommand("estimate", "Threshold estimate from a sweep CSV");
    std::string est_in;
    size_t bootstrap = 1000;
    est->add_option("csv", est_in, "Sweep CSV")->required();
    est->add_option("--bootstrap", bootstrap, "Bootstrap resamples");

    auto *trace = app.add_subcommand("trace", "Record noisy syndrome cycles to a binary trace");
    size_t trace_d = 5, trace_cycles = 100;
    double trace_p = 5e-3;
    std::string trace_out;
    trace->add_option("--distance", trace_d, "Code distance");
    trace->add_option("--p", trace_p, "Physical error rate");
    trace->add_option("--cycles", trace_cycles, "Cycles to record");
    trace->add_option("--out", trace_out, "Trace file")->required();

    auto *replay = app.add_subcommand("replay", "Decode a binary trace and print per-cycle matching summaries");
    std::string replay_in;
    replay->add_option("trace", replay_in, "Trace file")->required();

    CLI11_PARSE(app, argc, argv);
    cfg.baseline = !no_baseline;

    try {
        if (*plot) {
            auto summary = load_summary(plot_in);
            if (plot_out.empty()) {
                write_plotdata(summary, std::cout);
            } else {
                auto out = open_out(plot_out);
                write_plotdata(summary, out);
            }
            return 0;
        }
        if (*est) {
            auto e = estimate_threshold(load_summary(est_in), bootstrap);
            std::cout << "p_th " << e.p_th << " ci " << e.ci_low << ' ' << e.ci_high << " crossings " << e.crossings
                      << '\n';
            return 0;
        }
        if (*trace) {
            auto lattice = PlanarLattice::with_distance(trace_d);
            FrameSimulator sim(lattice, cfg.idle);
            auto noise = NoiseParams::uniform(trace_p);
            noise.validate();
            Rng rng(cfg.seed);
            auto frame = sim.clean_frame();
            std::vector<SyndromeRecord> recs;
            for (size_t t = 0; t < trace_cycles; t++) {
                recs.push_back(sim.run_cycle(frame, noise, rng));
            }
            auto out = open_out(trace_out, std::ios::binary);
            write_trace(out, {TraceHeader::kVersion, uint32_t(trace_d), noise, cfg.seed, cfg.idle}, recs);
            return 0;
        }
        if (*replay) {
            std::ifstream in(replay_in, std::ios::binary);
            if (!in) {
                throw std::runtime_error("cannot open " + replay_in);
            }
            auto [header, recs] = read_trace(in);
            auto lattice = PlanarLattice::with_distance(header.distance);
            DecoderOptions opt;
            opt.t_freeze = cfg.t_freeze;
            replay_trace(lattice, recs, std::cout, opt);
            return 0;
        }

        cfg.ps = log_grid(p_min, p_max, p_steps);
        auto summary = sweep(cfg);
        if (out_path.empty()) {
            write_csv(summary, std::cout);
        } else {
            auto out = open_out(out_path);
            write_csv(summary, out);
        }
        if (estimate) {
            try {
                auto e = estimate_threshold(summary);
                std::cerr << "p_th " << e.p_th << " ci " << e.ci_low << ' ' << e.ci_high << '\n';
            } catch (const std::runtime_error &err) {
                std::cerr << err.what() << '\n';
            }
        }
    } catch (const std::exception &err) {
        std::cerr << "error: " << err.what() << '\n';
        return 1;
    }
    return 0;
}
