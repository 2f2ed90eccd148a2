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

#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "surfsim/decoder.h"
#include "surfsim/frame.h"
#include "surfsim/noise.h"

namespace surfsim {

enum class FailureType : uint8_t { None, LogicalX, LogicalZ };

struct TrialOptions {
    uint64_t max_cycles = 100000;
    DecoderOptions decoder;
    IdleNoise idle = IdleNoise::All;
    /// Data-qubit errors present before the first cycle.
    std::vector<std::pair<size_t, Pauli>> initial_errors;
};

struct TrialResult {
    size_t distance = 0;
    double p = 0;
    uint64_t seed = 0;
    /// Cycle at which a logical error was first seen, or max_cycles when censored.
    uint64_t cycles_to_failure = 0;
    FailureType failure_type = FailureType::None;
    bool censored = false;
    uint64_t divergences = 0;
};

/// Noisy cycles with a perfect-readout logical check after every cycle. `p` is only recorded.
TrialResult run_trial(size_t distance, const NoiseParams &noise, uint64_t seed, const TrialOptions &options = {},
                      double p = 0);

/// Unprotected qubit under memory noise p on each of the six steps of a cycle.
TrialResult run_baseline_trial(double p, uint64_t seed, uint64_t max_cycles);

struct SweepConfig {
    std::vector<size_t> distances{3, 5, 7};
    std::vector<double> ps;
    uint64_t trials = 2000;
    uint64_t max_cycles = 100000;
    uint64_t seed = 1;
    uint64_t t_freeze = 20;
    IdleNoise idle = IdleNoise::All;
    bool baseline = true;
    unsigned threads = 0;  // 0 = hardware concurrency

    /// Throws std::invalid_argument on an empty or out-of-range field.
    void validate() const;
};

/// `steps` log-spaced values from lo to hi inclusive.
std::vector<double> log_grid(double lo, double hi, size_t steps);

/// Distance 1 rows are the single-qubit baseline.
struct CellSummary {
    size_t distance = 0;
    double p = 0;
    uint64_t trials = 0;
    double mean = 0;
    double stderr_mean = 0;
    uint64_t censored = 0;
};

struct SweepSummary {
    std::vector<CellSummary> cells;
    uint64_t divergences = 0;
};

/// Censored trials count as max_cycles, so their cells' means are lower bounds.
CellSummary summarize(size_t distance, double p, const std::vector<TrialResult> &trials);

SweepSummary sweep(const SweepConfig &config);

/// Per-trial seed for cell (distance, p_index).
uint64_t trial_seed(uint64_t master, uint64_t distance, uint64_t p_index, uint64_t trial);

void write_csv(const SweepSummary &summary, std::ostream &out);
/// Throws std::runtime_error on malformed input.
SweepSummary read_csv(std::istream &in);

/// One gnuplot index block per distance: p, mean, stderr.
void write_plotdata(const SweepSummary &summary, std::ostream &out);

struct ThresholdEstimate {
    double p_th = 0;
    double ci_low = 0;
    double ci_high = 0;
    size_t crossings = 0;
};

/// Median of pairwise crossings of log-log line fits, refitted on the points nearest the crossing,
/// with a parametric bootstrap CI.
/// Throws std::invalid_argument with fewer than 2 distances or 4 p values, and
/// std::runtime_error when no pair of fitted curves crosses inside the sampled range.
ThresholdEstimate estimate_threshold(const SweepSummary &summary, size_t bootstrap = 1000, uint64_t seed = 7,
                                     double confidence = 0.95);

}  // namespace surfsim
