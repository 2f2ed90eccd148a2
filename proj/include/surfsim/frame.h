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

#include <array>
#include <cstdint>
#include <iosfwd>
#include <span>
#include <vector>

#include "surfsim/lattice.h"
#include "surfsim/noise.h"

namespace surfsim {

/// Pauli error relative to the ideal code state. Qubits [0, num_data) are data qubits, then
/// one syndrome qubit per Z stabilizer, then one per X stabilizer.
struct ErrorFrame {
    size_t num_data = 0;
    std::vector<uint8_t> x;
    std::vector<uint8_t> z;
    uint64_t cycle = 0;

    bool operator==(const ErrorFrame &) const = default;
};

/// XORs a Pauli onto a data qubit of the frame.
void inject_pauli(ErrorFrame &frame, size_t qubit, Pauli p);

/// Reported stabilizer values of one cycle (0 = +1, 1 = -1).
struct SyndromeRecord {
    uint64_t cycle = 0;
    std::vector<uint8_t> z_reports;
    std::vector<uint8_t> x_reports;

    const std::vector<uint8_t> &reports(StabKind k) const { return k == StabKind::Z ? z_reports : x_reports; }
    bool operator==(const SyndromeRecord &) const = default;
};

struct DetectionEvent {
    StabKind kind;
    uint32_t stabilizer;
    uint64_t cycle;
    bool operator==(const DetectionEvent &) const = default;
};

/// Stabilizers whose report changed. With no previous record the reference is all +1.
/// Throws std::invalid_argument unless cur.cycle == prev.cycle + 1 (or cur.cycle == 1 without prev).
std::vector<DetectionEvent> detection_events(const SyndromeRecord *prev, const SyndromeRecord &cur);

enum class IdleNoise : uint8_t { All, DataOnly };

enum class FaultKind : uint8_t { InitFlip, ReadoutFlip, Memory, Gate };

/// A place in one extraction cycle where a fault can occur.
struct FaultLocation {
    FaultKind kind;
    uint8_t step;  // 0..5
    uint32_t q0;   // qubit, or control for gates
    uint32_t q1;   // target for gates
};

/// A fault at a location. `pauli` is 1..3 for memory faults, 1..15 (see two_qubit_pauli) for
/// gate faults and ignored for flips.
struct Fault {
    uint32_t location;
    uint8_t pauli = 1;
};

/// Runs the six-step extraction circuit on a Pauli frame. Keeps scratch buffers, so use one
/// instance per thread.
class FrameSimulator {
   public:
    explicit FrameSimulator(const PlanarLattice &lattice, IdleNoise idle = IdleNoise::All);

    const PlanarLattice &lattice() const { return lattice_; }
    const ExtractionSchedule &schedule() const { return schedule_; }
    size_t num_qubits() const { return num_qubits_; }
    size_t z_ancilla(size_t i) const { return lattice_.num_data() + i; }
    size_t x_ancilla(size_t i) const { return lattice_.num_data() + lattice_.stabilizers(StabKind::Z).size() + i; }
    const std::vector<FaultLocation> &locations() const { return locations_; }

    ErrorFrame clean_frame() const;

    /// One cycle with faults sampled from `noise`.
    SyndromeRecord run_cycle(ErrorFrame &frame, const NoiseParams &noise, Rng &rng);
    /// One cycle with exactly the given faults.
    SyndromeRecord run_cycle(ErrorFrame &frame, std::span<const Fault> faults);
    /// Reports of a noiseless cycle, computed directly from the data errors (frame untouched).
    SyndromeRecord perfect_syndrome(const ErrorFrame &frame) const;

    /// Parity of Z errors along the vertical X_L line (a logical Z error).
    bool logical_z_error(const std::vector<uint8_t> &z) const;
    /// Parity of X errors along the horizontal Z_L line (a logical X error).
    bool logical_x_error(const std::vector<uint8_t> &x) const;

   private:
    void apply_fault(ErrorFrame &frame, const Fault &f, std::vector<uint8_t> &z_rep, std::vector<uint8_t> &x_rep) const;
    SyndromeRecord execute(ErrorFrame &frame);
    void check(const ErrorFrame &frame) const;

    PlanarLattice lattice_;
    ExtractionSchedule schedule_;
    size_t num_qubits_;
    std::vector<FaultLocation> locations_;
    std::array<std::vector<uint32_t>, 4> by_kind_;  // location ids per FaultKind
    std::array<std::vector<std::pair<uint32_t, uint32_t>>, 4> gates_;  // (control, target) per layer
    std::vector<uint32_t> x_line_;
    std::vector<uint32_t> z_line_;
    std::array<std::vector<Fault>, 6> pending_;
};

/// Binary trace of syndrome records with a versioned header.
struct TraceHeader {
    static constexpr uint32_t kVersion = 1;
    uint32_t version = kVersion;
    uint32_t distance = 0;
    NoiseParams noise;
    uint64_t seed = 0;
    IdleNoise idle = IdleNoise::All;
};

void write_trace(std::ostream &out, const TraceHeader &header, const std::vector<SyndromeRecord> &records);
/// Throws std::runtime_error on a bad magic, version or truncated stream.
std::pair<TraceHeader, std::vector<SyndromeRecord>> read_trace(std::istream &in);

}  // namespace surfsim
