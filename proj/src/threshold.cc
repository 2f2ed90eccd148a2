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

#include "surfsim/threshold.h"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <iomanip>
#include <istream>
#include <map>
#include <ostream>
#include <set>
#include <sstream>
#include <stdexcept>
#include <thread>

namespace surfsim {

namespace {

void xor_into(std::vector<uint8_t> &dst, const std::vector<uint8_t> &src) {
    for (size_t q = 0; q < src.size(); q++) {
        dst[q] ^= src[q];
    }
}

struct LineFit {
    double a = 0;
    double b = 0;
    double lo = 0;
    double hi = 0;
};

// Least squares of log(mean) against log(p).
LineFit fit(const std::vector<std::pair<double, double>> &pts) {
    double n = double(pts.size());
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    LineFit f{0, 0, INFINITY, -INFINITY};
    for (auto [x, y] : pts) {
        sx += x;
        sy += y;
        sxx += x * x;
        sxy += x * y;
        f.lo = std::min(f.lo, x);
        f.hi = std::max(f.hi, x);
    }
    f.b = (n * sxy - sx * sy) / (n * sxx - sx * sx);
    f.a = (sy - f.b * sx) / n;
    return f;
}

double median(std::vector<double> v) {
    std::sort(v.begin(), v.end());
    size_t m = v.size() / 2;
    return v.size() % 2 ? v[m] : 0.5 * (v[m - 1] + v[m]);
}

using Curves = std::map<size_t, std::vector<std::pair<double, double>>>;

constexpr size_t kFitWindow = 4;

// Pairwise crossings in log p; empty when no pair crosses inside the shared range. With a
// center, each curve is fitted only on its kFitWindow points closest to it.
std::vector<double> crossings(const Curves &curves, std::optional<double> center = std::nullopt) {
    std::vector<LineFit> fits;
    for (auto [d, pts] : curves) {
        if (center && pts.size() > kFitWindow) {
            std::stable_sort(pts.begin(), pts.end(), [c = *center](const auto &a, const auto &b) {
                return std::abs(a.first - c) < std::abs(b.first - c);
            });
            pts.resize(kFitWindow);
        }
        fits.push_back(fit(pts));
    }
    std::vector<double> out;
    for (size_t i = 0; i < fits.size(); i++) {
        for (size_t j = i + 1; j < fits.size(); j++) {
            double db = fits[i].b - fits[j].b;
            if (db == 0) {
                continue;
            }
            double x = (fits[j].a - fits[i].a) / db;
            double lo = std::max(fits[i].lo, fits[j].lo);
            double hi = std::min(fits[i].hi, fits[j].hi);
            if (x >= lo && x <= hi) {
                out.push_back(x);
            }
        }
    }
    return out;
}

struct Located {
    double x;
    size_t count;
};

// Global fit first, then refits around the current median crossing until it settles.
std::optional<Located> locate(const Curves &curves) {
    auto xs = crossings(curves);
    if (xs.empty()) {
        return std::nullopt;
    }
    Located at{median(xs), xs.size()};
    for (int iter = 0; iter < 8; iter++) {
        auto local = crossings(curves, at.x);
        if (local.empty()) {
            break;
        }
        double x = median(local);
        bool settled = std::abs(x - at.x) < 1e-9;
        at = {x, local.size()};
        if (settled) {
            break;
        }
    }
    return at;
}

}  // namespace

TrialResult run_trial(size_t distance, const NoiseParams &noise, uint64_t seed, const TrialOptions &options, double p) {
    noise.validate();
    if (options.max_cycles == 0) {
        throw std::invalid_argument("max_cycles must be positive");
    }
    auto lattice = PlanarLattice::with_distance(distance);
    FrameSimulator sim(lattice, options.idle);
    StreamingDecoder dz(lattice, StabKind::Z, options.decoder);
    StreamingDecoder dx(lattice, StabKind::X, options.decoder);
    Rng rng(seed);

    TrialResult result;
    result.distance = distance;
    result.p = p;
    result.seed = seed;
    auto frame = sim.clean_frame();
    for (auto [q, pauli] : options.initial_errors) {
        inject_pauli(frame, q, pauli);
    }
    SyndromeRecord prev;
    std::vector<uint8_t> x_data(lattice.num_data());
    std::vector<uint8_t> z_data(lattice.num_data());
    for (uint64_t t = 1; t <= options.max_cycles; t++) {
        SyndromeRecord rec = sim.run_cycle(frame, noise, rng);
        auto events = detection_events(t == 1 ? nullptr : &prev, rec);
        dz.push(events, t);
        dx.push(events, t);
        auto extra = detection_events(&rec, sim.perfect_syndrome(frame));
        x_data.assign(frame.x.begin(), frame.x.begin() + long(lattice.num_data()));
        z_data.assign(frame.z.begin(), frame.z.begin() + long(lattice.num_data()));
        xor_into(x_data, dz.correction_with(extra));
        xor_into(z_data, dx.correction_with(extra));
        bool x_fail = sim.logical_x_error(x_data);
        bool z_fail = sim.logical_z_error(z_data);
        if (x_fail || z_fail) {
            result.cycles_to_failure = t;
            result.failure_type = x_fail ? FailureType::LogicalX : FailureType::LogicalZ;
            result.divergences = dz.divergences() + dx.divergences();
            return result;
        }
        prev = std::move(rec);
    }
    result.cycles_to_failure = options.max_cycles;
    result.censored = true;
    result.divergences = dz.divergences() + dx.divergences();
    return result;
}

TrialResult run_baseline_trial(double p, uint64_t seed, uint64_t max_cycles) {
    if (!(p >= 0 && p <= 1)) {
        throw std::invalid_argument("error rate must be in [0, 1]");
    }
    TrialResult result;
    result.distance = 1;
    result.p = p;
    result.seed = seed;
    Rng rng(seed);
    GeometricSkipper skip(p);
    uint64_t gap = skip.next_gap(rng);
    uint64_t steps = max_cycles * 6;
    if (gap >= steps) {
        result.cycles_to_failure = max_cycles;
        result.censored = true;
        return result;
    }
    result.cycles_to_failure = gap / 6 + 1;
    Pauli e = sample_memory(1.0, rng);
    result.failure_type = e == Pauli::Z ? FailureType::LogicalZ : FailureType::LogicalX;
    return result;
}

void SweepConfig::validate() const {
    if (distances.empty() || ps.empty()) {
        throw std::invalid_argument("sweep needs at least one distance and one error rate");
    }
    for (size_t d : distances) {
        if (d < 2) {
            throw std::invalid_argument("distance must be at least 2");
        }
    }
    for (double p : ps) {
        if (!(p >= 0 && p <= 1)) {
            throw std::invalid_argument("error rate must be in [0, 1]");
        }
    }
    if (trials == 0 || max_cycles == 0 || t_freeze == 0) {
        throw std::invalid_argument("trials, max_cycles and t_freeze must be positive");
    }
}

std::vector<double> log_grid(double lo, double hi, size_t steps) {
    if (!(lo > 0 && hi >= lo) || steps == 0) {
        throw std::invalid_argument("bad log grid");
    }
    if (steps == 1) {
        return {lo};
    }
    std::vector<double> out;
    for (size_t i = 0; i < steps; i++) {
        out.push_back(std::exp(std::log(lo) + (std::log(hi) - std::log(lo)) * double(i) / double(steps - 1)));
    }
    out.front() = lo;
    out.back() = hi;
    return out;
}

uint64_t trial_seed(uint64_t master, uint64_t distance, uint64_t p_index, uint64_t trial) {
    return trial_rng(master, distance, p_index, trial)();
}

CellSummary summarize(size_t distance, double p, const std::vector<TrialResult> &trials) {
    CellSummary c;
    c.distance = distance;
    c.p = p;
    c.trials = trials.size();
    double sum = 0;
    for (const auto &t : trials) {
        sum += double(t.cycles_to_failure);
        c.censored += t.censored;
    }
    if (trials.empty()) {
        return c;
    }
    c.mean = sum / double(trials.size());
    if (trials.size() > 1) {
        double ss = 0;
        for (const auto &t : trials) {
            ss += (double(t.cycles_to_failure) - c.mean) * (double(t.cycles_to_failure) - c.mean);
        }
        c.stderr_mean = std::sqrt(ss / double(trials.size() - 1) / double(trials.size()));
    }
    return c;
}

SweepSummary sweep(const SweepConfig &config) {
    config.validate();
    struct Job {
        size_t distance;
        size_t p_index;
    };
    std::vector<Job> cells;
    if (config.baseline) {
        for (size_t i = 0; i < config.ps.size(); i++) {
            cells.push_back({1, i});
        }
    }
    for (size_t d : config.distances) {
        for (size_t i = 0; i < config.ps.size(); i++) {
            cells.push_back({d, i});
        }
    }
    size_t total = cells.size() * config.trials;
    std::vector<TrialResult> results(total);
    std::atomic<size_t> next{0};
    auto worker = [&]() {
        for (size_t job = next++; job < total; job = next++) {
            const Job &cell = cells[job / config.trials];
            uint64_t trial = job % config.trials;
            double p = config.ps[cell.p_index];
            uint64_t seed = trial_seed(config.seed, cell.distance, cell.p_index, trial);
            if (cell.distance == 1) {
                results[job] = run_baseline_trial(p, seed, config.max_cycles);
            } else {
                TrialOptions opt;
                opt.max_cycles = config.max_cycles;
                opt.decoder.t_freeze = config.t_freeze;
                opt.idle = config.idle;
                results[job] = run_trial(cell.distance, NoiseParams::uniform(p), seed, opt, p);
            }
        }
    };
    unsigned threads = config.threads ? config.threads : std::max(1u, std::thread::hardware_concurrency());
    std::vector<std::jthread> pool;
    for (unsigned i = 1; i < threads; i++) {
        pool.emplace_back(worker);
    }
    worker();
    pool.clear();

    SweepSummary summary;
    for (size_t c = 0; c < cells.size(); c++) {
        std::vector<TrialResult> slice(results.begin() + long(c * config.trials),
                                       results.begin() + long((c + 1) * config.trials));
        summary.cells.push_back(summarize(cells[c].distance, config.ps[cells[c].p_index], slice));
        for (const auto &r : slice) {
            summary.divergences += r.divergences;
        }
    }
    return summary;
}

void write_csv(const SweepSummary &summary, std::ostream &out) {
    out << "d,p,trials,mean,stderr,censored_count\n";
    std::ostringstream line;
    for (const auto &c : summary.cells) {
        line.str("");
        line << c.distance << ',' << std::setprecision(6) << c.p << ',' << c.trials << ',' << std::setprecision(10)
             << c.mean << ',' << c.stderr_mean << ',' << c.censored << '\n';
        out << line.str();
    }
}

SweepSummary read_csv(std::istream &in) {
    SweepSummary summary;
    std::string line;
    if (!std::getline(in, line) || line.rfind("d,p,trials,mean,stderr,censored_count", 0) != 0) {
        throw std::runtime_error("missing sweep CSV header");
    }
    while (std::getline(in, line)) {
        if (line.empty()) {
            continue;
        }
        std::istringstream row(line);
        CellSummary c;
        char c1, c2, c3, c4, c5;
        row >> c.distance >> c1 >> c.p >> c2 >> c.trials >> c3 >> c.mean >> c4 >> c.stderr_mean >> c5 >> c.censored;
        if (!row || c1 != ',' || c2 != ',' || c3 != ',' || c4 != ',' || c5 != ',') {
            throw std::runtime_error("malformed sweep CSV row: " + line);
        }
        summary.cells.push_back(c);
    }
    return summary;
}

void write_plotdata(const SweepSummary &summary, std::ostream &out) {
    std::set<size_t> distances;
    for (const auto &c : summary.cells) {
        distances.insert(c.distance);
    }
    bool first = true;
    for (size_t d : distances) {
        if (!first) {
            out << "\n\n";
        }
        first = false;
        out << "# " << (d == 1 ? std::string("single qubit") : "d=" + std::to_string(d)) << "\n# p mean stderr\n";
        std::vector<CellSummary> rows;
        for (const auto &c : summary.cells) {
            if (c.distance == d) {
                rows.push_back(c);
            }
        }
        std::sort(rows.begin(), rows.end(), [](const auto &a, const auto &b) { return a.p < b.p; });
        for (const auto &c : rows) {
            out << std::setprecision(6) << c.p << ' ' << std::setprecision(10) << c.mean << ' ' << c.stderr_mean
                << '\n';
        }
    }
}

ThresholdEstimate estimate_threshold(const SweepSummary &summary, size_t bootstrap, uint64_t seed,
                                     double confidence) {
    Curves curves;
    std::set<double> ps;
    for (const auto &c : summary.cells) {
        if (c.distance < 2 || c.p <= 0 || c.mean <= 0) {
            continue;
        }
        curves[c.distance].push_back({std::log(c.p), std::log(c.mean)});
        ps.insert(c.p);
    }
    if (curves.size() < 2 || ps.size() < 4) {
        throw std::invalid_argument("threshold estimate needs at least 2 distances and 4 error rates");
    }
    for (const auto &[d, pts] : curves) {
        if (pts.size() < 2) {
            throw std::invalid_argument("each distance needs at least 2 error rates");
        }
    }
    auto located = locate(curves);
    if (!located) {
        throw std::runtime_error("no crossing in the sampled range");
    }
    ThresholdEstimate est;
    est.p_th = std::exp(located->x);
    est.crossings = located->count;

    Rng rng(seed);
    std::normal_distribution<double> normal;
    std::vector<double> samples;
    for (size_t b = 0; b < bootstrap; b++) {
        Curves resampled;
        for (const auto &c : summary.cells) {
            if (c.distance < 2 || c.p <= 0 || c.mean <= 0) {
                continue;
            }
            double m = std::max(c.mean + c.stderr_mean * normal(rng), 1e-300);
            resampled[c.distance].push_back({std::log(c.p), std::log(m)});
        }
        if (auto bx = locate(resampled)) {
            samples.push_back(bx->x);
        }
    }
    if (samples.empty()) {
        est.ci_low = est.ci_high = est.p_th;
        return est;
    }
    std::sort(samples.begin(), samples.end());
    double tail = (1 - confidence) / 2;
    auto at = [&](double q) {
        size_t i = std::min(samples.size() - 1, size_t(q * double(samples.size())));
        return std::exp(samples[i]);
    };
    est.ci_low = std::min(at(tail), est.p_th);
    est.ci_high = std::max(at(1 - tail), est.p_th);
    return est;
}

}  // namespace surfsim
