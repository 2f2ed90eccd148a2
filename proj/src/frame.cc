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

#include "surfsim/frame.h"

#include <algorithm>
#include <cstring>
#include <istream>
#include <ostream>
#include <stdexcept>

namespace surfsim {

void inject_pauli(ErrorFrame &frame, size_t qubit, Pauli p) {
    if (qubit >= frame.num_data) {
        throw std::out_of_range("data qubit index out of range");
    }
    frame.x[qubit] ^= uint8_t(p) & 1;
    frame.z[qubit] ^= uint8_t(p) >> 1;
}

std::vector<DetectionEvent> detection_events(const SyndromeRecord *prev, const SyndromeRecord &cur) {
    if (prev ? cur.cycle != prev->cycle + 1 : cur.cycle != 1) {
        throw std::invalid_argument("syndrome records are not consecutive");
    }
    if (prev && (prev->z_reports.size() != cur.z_reports.size() || prev->x_reports.size() != cur.x_reports.size())) {
        throw std::invalid_argument("syndrome record size mismatch");
    }
    std::vector<DetectionEvent> out;
    for (StabKind k : {StabKind::Z, StabKind::X}) {
        const auto &now = cur.reports(k);
        for (size_t i = 0; i < now.size(); i++) {
            uint8_t before = prev ? prev->reports(k)[i] : 0;
            if (now[i] != before) {
                out.push_back({k, uint32_t(i), cur.cycle});
            }
        }
    }
    return out;
}

FrameSimulator::FrameSimulator(const PlanarLattice &lattice, IdleNoise idle)
    : lattice_(lattice), schedule_(build_schedule(lattice)) {
    size_t nd = lattice_.num_data();
    size_t nz = lattice_.stabilizers(StabKind::Z).size();
    size_t nx = lattice_.stabilizers(StabKind::X).size();
    num_qubits_ = nd + nz + nx;
    auto add = [&](FaultKind k, uint8_t step, size_t q0, size_t q1) {
        by_kind_[size_t(k)].push_back(uint32_t(locations_.size()));
        locations_.push_back({k, step, uint32_t(q0), uint32_t(q1)});
    };

    for (size_t i = 0; i < nz + nx; i++) {
        add(FaultKind::InitFlip, 0, nd + i, 0);
    }
    for (size_t q = 0; q < nd; q++) {
        add(FaultKind::Memory, 0, q, 0);
    }
    for (size_t layer = 0; layer < 4; layer++) {
        uint8_t step = uint8_t(layer + 1);
        std::vector<uint8_t> busy(num_qubits_, 0);
        for (const auto &g : schedule_.layers[layer]) {
            size_t a = g.kind == StabKind::Z ? z_ancilla(g.stabilizer) : x_ancilla(g.stabilizer);
            size_t control = g.kind == StabKind::Z ? g.data : a;
            size_t target = g.kind == StabKind::Z ? a : g.data;
            gates_[layer].push_back({uint32_t(control), uint32_t(target)});
            busy[control] = busy[target] = 1;
            add(FaultKind::Gate, step, control, target);
        }
        size_t idle_limit = idle == IdleNoise::All ? num_qubits_ : nd;
        for (size_t q = 0; q < idle_limit; q++) {
            if (!busy[q]) {
                add(FaultKind::Memory, step, q, 0);
            }
        }
    }
    for (size_t i = 0; i < nz + nx; i++) {
        add(FaultKind::ReadoutFlip, 5, nd + i, 0);
    }
    for (size_t q = 0; q < nd; q++) {
        add(FaultKind::Memory, 5, q, 0);
    }

    for (size_t q : lattice_.logical_x_support()) {
        x_line_.push_back(uint32_t(q));
    }
    for (size_t q : lattice_.logical_z_support()) {
        z_line_.push_back(uint32_t(q));
    }
}

ErrorFrame FrameSimulator::clean_frame() const {
    ErrorFrame f;
    f.num_data = lattice_.num_data();
    f.x.assign(num_qubits_, 0);
    f.z.assign(num_qubits_, 0);
    return f;
}

void FrameSimulator::check(const ErrorFrame &frame) const {
    if (frame.num_data != lattice_.num_data() || frame.x.size() != num_qubits_ || frame.z.size() != num_qubits_) {
        throw std::invalid_argument("frame does not match the lattice");
    }
}

void FrameSimulator::apply_fault(ErrorFrame &frame, const Fault &f, std::vector<uint8_t> &z_rep,
                                 std::vector<uint8_t> &x_rep) const {
    const FaultLocation &loc = locations_[f.location];
    size_t nd = lattice_.num_data();
    size_t nz = z_rep.size();
    switch (loc.kind) {
        case FaultKind::InitFlip:
            // |1> for a Z syndrome qubit, |-> for an X syndrome qubit.
            if (loc.q0 < nd + nz) {
                frame.x[loc.q0] ^= 1;
            } else {
                frame.z[loc.q0] ^= 1;
            }
            break;
        case FaultKind::ReadoutFlip:
            if (loc.q0 < nd + nz) {
                z_rep[loc.q0 - nd] ^= 1;
            } else {
                x_rep[loc.q0 - nd - nz] ^= 1;
            }
            break;
        case FaultKind::Memory:
            frame.x[loc.q0] ^= f.pauli & 1;
            frame.z[loc.q0] ^= (f.pauli >> 1) & 1;
            break;
        case FaultKind::Gate: {
            auto [a, b] = two_qubit_pauli(f.pauli);
            frame.x[loc.q0] ^= uint8_t(a) & 1;
            frame.z[loc.q0] ^= uint8_t(a) >> 1;
            frame.x[loc.q1] ^= uint8_t(b) & 1;
            frame.z[loc.q1] ^= uint8_t(b) >> 1;
            break;
        }
    }
}

SyndromeRecord FrameSimulator::execute(ErrorFrame &frame) {
    size_t nd = lattice_.num_data();
    size_t nz = lattice_.stabilizers(StabKind::Z).size();
    size_t nx = lattice_.stabilizers(StabKind::X).size();
    SyndromeRecord rec;
    rec.z_reports.assign(nz, 0);
    rec.x_reports.assign(nx, 0);
    uint8_t *x = frame.x.data();
    uint8_t *z = frame.z.data();

    std::memset(x + nd, 0, nz + nx);
    std::memset(z + nd, 0, nz + nx);
    for (const Fault &f : pending_[0]) {
        apply_fault(frame, f, rec.z_reports, rec.x_reports);
    }
    for (size_t layer = 0; layer < 4; layer++) {
        for (auto [c, t] : gates_[layer]) {
            x[t] ^= x[c];
            z[c] ^= z[t];
        }
        for (const Fault &f : pending_[layer + 1]) {
            apply_fault(frame, f, rec.z_reports, rec.x_reports);
        }
    }
    for (size_t i = 0; i < nz; i++) {
        rec.z_reports[i] ^= x[nd + i];
    }
    for (size_t i = 0; i < nx; i++) {
        rec.x_reports[i] ^= z[nd + nz + i];
    }
    for (const Fault &f : pending_[5]) {
        apply_fault(frame, f, rec.z_reports, rec.x_reports);
    }
    rec.cycle = ++frame.cycle;
    for (auto &p : pending_) {
        p.clear();
    }
    return rec;
}

SyndromeRecord FrameSimulator::run_cycle(ErrorFrame &frame, const NoiseParams &noise, Rng &rng) {
    check(frame);
    const double rates[4] = {noise.p_i, noise.p_r, noise.p_m, noise.p_g};
    for (size_t k = 0; k < 4; k++) {
        const auto &ids = by_kind_[k];
        if (rates[k] <= 0 || ids.empty()) {
            continue;
        }
        GeometricSkipper skip(rates[k]);
        uint64_t pos = skip.next_gap(rng);
        while (pos < ids.size()) {
            Fault f{ids[pos], 1};
            if (k == size_t(FaultKind::Memory)) {
                f.pauli = uint8_t(1 + std::uniform_int_distribution<int>(0, 2)(rng));
            } else if (k == size_t(FaultKind::Gate)) {
                f.pauli = uint8_t(std::uniform_int_distribution<int>(1, 15)(rng));
            }
            pending_[locations_[f.location].step].push_back(f);
            uint64_t gap = skip.next_gap(rng);
            if (gap >= ids.size()) {
                break;
            }
            pos += 1 + gap;
        }
    }
    return execute(frame);
}

SyndromeRecord FrameSimulator::run_cycle(ErrorFrame &frame, std::span<const Fault> faults) {
    check(frame);
    for (const Fault &f : faults) {
        if (f.location >= locations_.size()) {
            throw std::out_of_range("fault location out of range");
        }
        pending_[locations_[f.location].step].push_back(f);
    }
    return execute(frame);
}

SyndromeRecord FrameSimulator::perfect_syndrome(const ErrorFrame &frame) const {
    check(frame);
    SyndromeRecord rec;
    rec.cycle = frame.cycle + 1;
    for (StabKind k : {StabKind::Z, StabKind::X}) {
        const auto &bits = k == StabKind::Z ? frame.x : frame.z;
        auto &out = k == StabKind::Z ? rec.z_reports : rec.x_reports;
        for (const auto &s : lattice_.stabilizers(k)) {
            uint8_t parity = 0;
            for (size_t q : s.support) {
                parity ^= bits[q];
            }
            out.push_back(parity);
        }
    }
    return rec;
}

bool FrameSimulator::logical_z_error(const std::vector<uint8_t> &z) const {
    uint8_t parity = 0;
    for (uint32_t q : x_line_) {
        parity ^= z[q];
    }
    return parity;
}

bool FrameSimulator::logical_x_error(const std::vector<uint8_t> &x) const {
    uint8_t parity = 0;
    for (uint32_t q : z_line_) {
        parity ^= x[q];
    }
    return parity;
}

namespace {

constexpr char kMagic[4] = {'S', 'S', 'T', 'R'};

template <typename T>
void put(std::ostream &out, const T &v) {
    out.write(reinterpret_cast<const char *>(&v), sizeof(T));
}

template <typename T>
T get(std::istream &in) {
    T v{};
    if (!in.read(reinterpret_cast<char *>(&v), sizeof(T))) {
        throw std::runtime_error("truncated trace");
    }
    return v;
}

void put_bits(std::ostream &out, const std::vector<uint8_t> &bits) {
    put(out, uint32_t(bits.size()));
    out.write(reinterpret_cast<const char *>(bits.data()), std::streamsize(bits.size()));
}

std::vector<uint8_t> get_bits(std::istream &in) {
    auto n = get<uint32_t>(in);
    std::vector<uint8_t> bits(n);
    if (!in.read(reinterpret_cast<char *>(bits.data()), n)) {
        throw std::runtime_error("truncated trace");
    }
    return bits;
}

}  // namespace

void write_trace(std::ostream &out, const TraceHeader &header, const std::vector<SyndromeRecord> &records) {
    out.write(kMagic, 4);
    put(out, header.version);
    put(out, header.distance);
    put(out, header.noise.p_i);
    put(out, header.noise.p_r);
    put(out, header.noise.p_m);
    put(out, header.noise.p_g);
    put(out, header.seed);
    put(out, uint8_t(header.idle));
    put(out, uint64_t(records.size()));
    for (const auto &r : records) {
        put(out, r.cycle);
        put_bits(out, r.z_reports);
        put_bits(out, r.x_reports);
    }
}

std::pair<TraceHeader, std::vector<SyndromeRecord>> read_trace(std::istream &in) {
    char magic[4];
    if (!in.read(magic, 4) || !std::equal(magic, magic + 4, kMagic)) {
        throw std::runtime_error("not a syndrome trace");
    }
    TraceHeader h;
    h.version = get<uint32_t>(in);
    if (h.version != TraceHeader::kVersion) {
        throw std::runtime_error("unsupported trace version");
    }
    h.distance = get<uint32_t>(in);
    h.noise.p_i = get<double>(in);
    h.noise.p_r = get<double>(in);
    h.noise.p_m = get<double>(in);
    h.noise.p_g = get<double>(in);
    h.seed = get<uint64_t>(in);
    h.idle = IdleNoise(get<uint8_t>(in));
    auto n = get<uint64_t>(in);
    std::vector<SyndromeRecord> records;
    for (uint64_t i = 0; i < n; i++) {
        SyndromeRecord r;
        r.cycle = get<uint64_t>(in);
        r.z_reports = get_bits(in);
        r.x_reports = get_bits(in);
        records.push_back(std::move(r));
    }
    return {h, std::move(records)};
}

}  // namespace surfsim
