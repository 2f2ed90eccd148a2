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


#include "surfsim/magic.h"

#include <algorithm>
#include <bit>
#include <cmath>
#include <functional>
#include <iomanip>
#include <mutex>
#include <numbers>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace surfsim {

namespace {

const double kR = std::numbers::sqrt2 / 2;

int chain(StateVector &s, size_t q, size_t scratch, int eighths, RotationAxis axis, Rng &rng, const Qubit1 &first,
          std::array<std::optional<int>, 2> forced);

Encoder build_encoder(DistillCode code, size_t m) {
    size_t n = (size_t{1} << m) - 1;
    Encoder e{code, n, 2, {}, {}, {}, {}};
    for (size_t k = 0; k < m; k++) {
        e.hadamards.push_back((size_t{1} << k) - 1);
    }
    for (size_t v = 1; v <= n; v++) {
        if (std::popcount(v) % 2 == 0 && v != e.input + 1) {
            e.cnots.push_back({e.input, v - 1});
        }
    }
    for (size_t c : e.hadamards) {
        for (size_t v = 1; v <= n; v++) {
            if ((v & (c + 1)) && v != c + 1) {
                e.cnots.push_back({c, v - 1});
            }
        }
    }
    e.mx = e.hadamards;
    for (size_t q = 0; q < n; q++) {
        if (q != e.input && std::find(e.mx.begin(), e.mx.end(), q) == e.mx.end()) {
            e.mz.push_back(q);
        }
    }
    return e;
}

PauliOperator support_op(size_t n, Pauli p, const std::function<bool(size_t)> &in) {
    PauliOperator out(n);
    for (size_t v = 1; v <= n; v++) {
        if (in(v)) {
            out.set(v - 1, p);
        }
    }
    return out;
}

Matrix2 preparation(const Qubit1 &a) { return {a[0], -std::conj(a[1]), a[1], std::conj(a[0])}; }

Matrix2 pauli_matrix(Pauli p) {
    switch (p) {
        case Pauli::I:
            return {1, 0, 0, 1};
        case Pauli::X:
            return {0, 1, 1, 0};
        case Pauli::Y:
            return {0, cplx(0, -1), cplx(0, 1), 0};
        case Pauli::Z:
            return {1, 0, 0, -1};
    }
    return {};
}

Qubit1 times(Pauli p, const Qubit1 &v) {
    Matrix2 m = pauli_matrix(p);
    return {m[0] * v[0] + m[1] * v[1], m[2] * v[0] + m[3] * v[1]};
}

double overlap(const Qubit1 &a, const Qubit1 &b) { return std::norm(std::conj(a[0]) * b[0] + std::conj(a[1]) * b[1]); }

StateVector product_state(const std::vector<Qubit1> &qubits) {
    std::vector<std::array<cplx, 2>> q(qubits.begin(), qubits.end());
    return StateVector::product(q);
}

// Output amplitudes per measurement pattern. Qubits beyond the code lines must be |0>.
std::vector<Qubit1> split_output(const StateVector &s, const Encoder &e) {
    std::vector<size_t> columns = e.mx;
    columns.insert(columns.end(), e.mz.begin(), e.mz.end());
    std::vector<Qubit1> out(size_t{1} << columns.size(), Qubit1{0, 0});
    size_t code_mask = (size_t{1} << e.num_qubits) - 1;
    for (size_t i = 0; i < s.amplitudes().size(); i++) {
        cplx a = s.amplitude(i);
        if (i & ~code_mask) {
            if (std::norm(a) > 1e-20) {
                throw std::logic_error("scratch qubit left excited");
            }
            continue;
        }
        Pattern bits = 0;
        for (size_t k = 0; k < columns.size(); k++) {
            bits |= Pattern((i >> columns[k]) & 1) << k;
        }
        out[bits][(i >> e.input) & 1] = a;
    }
    return out;
}

void check_inputs(const std::vector<Qubit1> &inputs, size_t n) {
    if (inputs.size() != n) {
        throw std::invalid_argument("expected " + std::to_string(n) + " input states");
    }
    for (const auto &q : inputs) {
        if (std::abs(std::norm(q[0]) + std::norm(q[1]) - 1) > 1e-9) {
            throw std::invalid_argument("input states must be normalized");
        }
    }
}

// Lines processed one by one: clean and Z-error inputs act as T (then Z) directly; X and Y
// errors run the teleported gadget along the given or every branch.
using Leaf = std::function<void(const StateVector &, double)>;

void teleport_lines(StateVector s, const Encoder &e, const ErrorPattern &errors, size_t line, double weight,
                    const std::vector<int> *choices, size_t next_choice, const Leaf &leaf) {
    for (; line < e.num_qubits; line++) {
        Pauli err = errors[line];
        if (err == Pauli::I || err == Pauli::Z) {
            s.apply(Gate::t(line));
            if (err == Pauli::Z) {
                s.apply(Gate::z(line));
            }
            continue;
        }
        Rng unused(0);
        Qubit1 anc = times(err, a_state());
        // 0: success, 1: failure then success, 2: two failures.
        const std::array<std::pair<std::array<std::optional<int>, 2>, double>, 3> branches{
            {{{+1, std::nullopt}, 0.5}, {{-1, +1}, 0.25}, {{-1, -1}, 0.25}}};
        for (int b = 0; b < 3; b++) {
            if (choices && (*choices)[next_choice] != b) {
                continue;
            }
            StateVector branch = s;
            chain(branch, line, e.num_qubits, 1, RotationAxis::Z, unused, anc, branches[b].first);
            teleport_lines(std::move(branch), e, errors, line + 1, choices ? weight : weight * branches[b].second,
                           choices, next_choice + 1, leaf);
        }
        return;
    }
    leaf(s, weight);
}

StateVector teleported_start(const Encoder &e) {
    std::vector<Qubit1> q(e.num_qubits + 1, Qubit1{1, 0});
    q[e.input] = {kR, kR};
    StateVector s = product_state(q);
    apply_encoder(s, e);
    return s;
}

OutcomeTable build_table(DistillCode code, DistillMode mode) {
    const Encoder &e = encoder(code);
    Qubit1 magic = magic_state(code);
    std::vector<Qubit1> amps;
    if (mode == DistillMode::Direct) {
        StateVector s = product_state(std::vector<Qubit1>(e.num_qubits, magic));
        apply_decoder(s, e);
        amps = split_output(s, e);
    } else {
        teleport_lines(teleported_start(e), e, ErrorPattern(e.num_qubits, Pauli::I), 0, 1, nullptr, 0,
                       [&](const StateVector &s, double) {
                           StateVector d = s;
                           apply_decoder(d, e);
                           amps = split_output(d, e);
                       });
    }
    OutcomeTable t{code, mode, {}};
    for (Pattern bits = 0; bits < amps.size(); bits++) {
        double prob = std::norm(amps[bits][0]) + std::norm(amps[bits][1]);
        if (prob < 1e-12) {
            continue;
        }
        Qubit1 out{amps[bits][0] / std::sqrt(prob), amps[bits][1] / std::sqrt(prob)};
        std::optional<Pauli> fix;
        // Z before X: on |Y> they agree up to phase.
        for (Pauli p : {Pauli::I, Pauli::Z, Pauli::X, Pauli::Y}) {
            if (overlap(magic, times(p, out)) > 1 - 1e-9) {
                fix = p;
                break;
            }
        }
        if (!fix) {
            throw std::logic_error("perfect-input output is not a Pauli image of the magic state");
        }
        t.rows.push_back({bits, prob, *fix});
    }
    return t;
}

// Accepted and wrong probability of a decoded state, weighted.
void tally(const StateVector &decoded, const Encoder &e, const OutcomeTable &t, double weight, PatternOutcome &acc) {
    Qubit1 magic = magic_state(e.code);
    std::vector<Qubit1> amps = split_output(decoded, e);
    for (Pattern bits = 0; bits < amps.size(); bits++) {
        double prob = std::norm(amps[bits][0]) + std::norm(amps[bits][1]);
        const OutcomeRow *row = prob > 1e-14 ? t.find(bits) : nullptr;
        if (!row) {
            continue;
        }
        acc.accepted += weight * prob;
        Qubit1 out{amps[bits][0] / std::sqrt(prob), amps[bits][1] / std::sqrt(prob)};
        if (1 - overlap(magic, times(row->correction, out)) > 1e-9) {
            acc.wrong += weight * prob;
        }
    }
}

PatternOutcome evaluate(DistillCode code, DistillMode mode, const ErrorPattern &errors,
                        const std::vector<int> *choices) {
    const Encoder &e = encoder(code);
    if (errors.size() != e.num_qubits) {
        throw std::invalid_argument("error pattern has the wrong length");
    }
    if (code == DistillCode::Steane7 && mode == DistillMode::Teleported) {
        throw std::invalid_argument("teleported mode needs the Reed-Muller code");
    }
    const OutcomeTable &t = outcome_table(code, mode);
    PatternOutcome out;
    if (mode == DistillMode::Direct) {
        std::vector<Qubit1> in;
        for (Pauli p : errors) {
            in.push_back(times(p, magic_state(code)));
        }
        StateVector s = product_state(in);
        apply_decoder(s, e);
        tally(s, e, t, 1, out);
        return out;
    }
    teleport_lines(teleported_start(e), e, errors, 0, 1, choices, 0, [&](const StateVector &s, double w) {
        StateVector d = s;
        apply_decoder(d, e);
        tally(d, e, t, w, out);
    });
    return out;
}

DistillResult sample(const StateVector &decoded, const Encoder &e, const OutcomeTable &t, Rng &rng) {
    std::vector<Qubit1> amps = split_output(decoded, e);
    std::vector<double> probs;
    for (const auto &a : amps) {
        probs.push_back(std::norm(a[0]) + std::norm(a[1]));
    }
    DistillResult r;
    r.bits = Pattern(std::discrete_distribution<size_t>(probs.begin(), probs.end())(rng));
    const OutcomeRow *row = t.find(r.bits);
    r.accepted = row != nullptr;
    double norm = std::sqrt(probs[r.bits]);
    Qubit1 out{amps[r.bits][0] / norm, amps[r.bits][1] / norm};
    if (row) {
        r.correction = row->correction;
        out = times(row->correction, out);
    }
    r.output = out;
    return r;
}

void for_each_subset(size_t n, size_t w, const std::function<void(const std::vector<size_t> &)> &f) {
    std::vector<size_t> idx(w);
    std::function<void(size_t, size_t)> rec = [&](size_t start, size_t depth) {
        if (depth == w) {
            f(idx);
            return;
        }
        for (size_t i = start; i < n; i++) {
            idx[depth] = i;
            rec(i + 1, depth + 1);
        }
    };
    rec(0, 0);
}

}  // namespace

std::vector<PauliOperator> Encoder::x_stabilizers() const {
    std::vector<PauliOperator> out;
    for (size_t c : hadamards) {
        out.push_back(support_op(num_qubits, Pauli::X, [c](size_t v) { return (v & (c + 1)) != 0; }));
    }
    return out;
}

std::vector<PauliOperator> Encoder::z_stabilizers() const {
    std::vector<PauliOperator> out;
    for (size_t c : hadamards) {
        out.push_back(support_op(num_qubits, Pauli::Z, [c](size_t v) { return (v & (c + 1)) != 0; }));
    }
    if (code == DistillCode::ReedMuller15) {
        for (size_t i = 0; i < hadamards.size(); i++) {
            for (size_t j = i + 1; j < hadamards.size(); j++) {
                size_t a = hadamards[i] + 1, b = hadamards[j] + 1;
                out.push_back(support_op(num_qubits, Pauli::Z, [a, b](size_t v) { return (v & a) && (v & b); }));
            }
        }
    }
    return out;
}

const Encoder &encoder(DistillCode code) {
    static const Encoder steane = build_encoder(DistillCode::Steane7, 3);
    static const Encoder rm = build_encoder(DistillCode::ReedMuller15, 4);
    return code == DistillCode::Steane7 ? steane : rm;
}

std::string describe(const Encoder &e) {
    std::ostringstream out;
    out << "code " << to_string(e.code) << " qubits " << e.num_qubits << " input " << e.input << '\n';
    out << 'h';
    for (size_t q : e.hadamards) {
        out << ' ' << q;
    }
    out << '\n';
    for (const auto &c : e.cnots) {
        out << "cnot " << c.control << ' ' << c.target << '\n';
    }
    for (const auto &[name, lines] : {std::pair{"mx", &e.mx}, std::pair{"mz", &e.mz}}) {
        out << name;
        for (size_t q : *lines) {
            out << ' ' << q;
        }
        out << '\n';
    }
    return out.str();
}

std::string checksum(const std::string &text) {
    uint64_t h = 14695981039346656037ull;
    for (unsigned char c : text) {
        h = (h ^ c) * 1099511628211ull;
    }
    std::ostringstream out;
    out << std::hex << std::setw(16) << std::setfill('0') << h;
    return out.str();
}

void apply_encoder(StateVector &s, const Encoder &e) {
    for (size_t q : e.hadamards) {
        s.apply(Gate::h(q));
    }
    for (const auto &c : e.cnots) {
        s.apply(Gate::cnot(c.control, c.target));
    }
}

void apply_decoder(StateVector &s, const Encoder &e) {
    for (auto it = e.cnots.rbegin(); it != e.cnots.rend(); ++it) {
        s.apply(Gate::cnot(it->control, it->target));
    }
    for (size_t q : e.hadamards) {
        s.apply(Gate::h(q));
    }
}

Qubit1 y_state() { return {kR, cplx(0, kR)}; }
Qubit1 a_state() { return {kR, std::polar(kR, std::numbers::pi / 4)}; }
Qubit1 magic_state(DistillCode code) { return code == DistillCode::Steane7 ? y_state() : a_state(); }

std::string pattern_string(Pattern p, size_t columns) {
    std::string s;
    for (size_t k = 0; k < columns; k++) {
        s += (p >> k) & 1 ? '1' : '0';
    }
    return s;
}

const OutcomeRow *OutcomeTable::find(Pattern p) const {
    auto it = std::lower_bound(rows.begin(), rows.end(), p, [](const OutcomeRow &r, Pattern b) { return r.bits < b; });
    return it != rows.end() && it->bits == p ? &*it : nullptr;
}

const OutcomeTable &outcome_table(DistillCode code, DistillMode mode) {
    static std::mutex lock;
    static std::map<std::pair<DistillCode, DistillMode>, OutcomeTable> cache;
    std::lock_guard guard(lock);
    auto key = std::pair{code, mode};
    auto it = cache.find(key);
    if (it == cache.end()) {
        if (code == DistillCode::Steane7 && mode == DistillMode::Teleported) {
            throw std::invalid_argument("teleported mode needs the Reed-Muller code");
        }
        it = cache.emplace(key, build_table(code, mode)).first;
    }
    return it->second;
}

void write_table(std::ostream &out, const OutcomeTable &t) {
    const Encoder &e = encoder(t.code);
    const char *name = t.code == DistillCode::Steane7 ? "|Y>" : "|A>";
    out << "# " << to_string(t.code) << ' ' << to_string(t.mode) << ": probability, " << e.mx.size() << " M_X and "
        << e.mz.size() << " M_Z bits, output before correction\n";
    std::vector<OutcomeRow> rows = t.rows;
    std::sort(rows.begin(), rows.end(), [&](const OutcomeRow &a, const OutcomeRow &b) {
        return pattern_string(a.bits, e.num_measured()) < pattern_string(b.bits, e.num_measured());
    });
    for (const auto &r : rows) {
        out << std::setprecision(6) << r.probability << ' ' << pattern_string(r.bits, e.num_measured()) << ' '
            << (r.correction == Pauli::I ? std::string() : std::string(1, "IXZY"[int(r.correction)])) << name << '\n';
    }
}

DistillResult distill_Y(const std::vector<Qubit1> &inputs, Rng &rng) {
    const Encoder &e = encoder(DistillCode::Steane7);
    check_inputs(inputs, e.num_qubits);
    StateVector s = product_state(inputs);
    apply_decoder(s, e);
    return sample(s, e, outcome_table(DistillCode::Steane7, DistillMode::Direct), rng);
}

DistillResult distill_A(const std::vector<Qubit1> &inputs, Rng &rng, DistillMode mode) {
    const Encoder &e = encoder(DistillCode::ReedMuller15);
    check_inputs(inputs, e.num_qubits);
    StateVector s = mode == DistillMode::Direct ? product_state(inputs) : teleported_start(e);
    if (mode == DistillMode::Teleported) {
        for (size_t q = 0; q < e.num_qubits; q++) {
            chain(s, q, e.num_qubits, 1, RotationAxis::Z, rng, inputs[q], {});
        }
    }
    apply_decoder(s, e);
    return sample(s, e, outcome_table(DistillCode::ReedMuller15, mode), rng);
}

namespace {

// The gadget itself; any normalized ancilla works physically.
RotationResult gadget(StateVector &s, size_t q, size_t scratch, const Qubit1 &ancilla, RotationAxis axis, Rng &rng,
                      std::optional<int> forced) {
    if (q == scratch) {
        throw std::invalid_argument("scratch qubit must differ from the target");
    }
    PauliOperator z_scratch = PauliOperator::single(s.num_qubits(), scratch, Pauli::Z);
    if (s.probability(z_scratch, -1) > 1e-12) {
        throw std::invalid_argument("scratch qubit is not |0>");
    }
    if (axis == RotationAxis::X) {
        s.apply(Gate::h(q));
    }
    s.apply(Gate::unitary(scratch, preparation(ancilla)));
    s.apply(Gate::cnot(scratch, q));
    RotationResult r;
    r.outcome = s.measure_pauli(PauliOperator::single(s.num_qubits(), q, Pauli::Z), rng, forced);
    r.byproduct = r.outcome < 0;
    if (r.byproduct) {
        s.apply(Gate::x(q));
    }
    // The result sits on the scratch qubit; move it back.
    s.apply(Gate::cnot(scratch, q));
    s.apply(Gate::cnot(q, scratch));
    if (axis == RotationAxis::X) {
        s.apply(Gate::h(q));
    }
    return r;
}

int chain(StateVector &s, size_t q, size_t scratch, int eighths, RotationAxis axis, Rng &rng, const Qubit1 &first,
          std::array<std::optional<int>, 2> forced) {
    Gate flip = axis == RotationAxis::Z ? Gate::x(q) : Gate::z(q);
    Gate half = axis == RotationAxis::Z ? Gate::z(q) : Gate::x(q);
    if (!gadget(s, q, scratch, first, axis, rng, forced[0]).byproduct) {
        return 1;
    }
    if (eighths == 2) {
        s.apply(flip);
        s.apply(half);
        return 1;
    }
    s.apply(flip);
    if (gadget(s, q, scratch, y_state(), axis, rng, forced[1]).byproduct) {
        s.apply(flip);
        s.apply(half);
    }
    return 2;
}

void check_ancilla(const Qubit1 &a) {
    if (std::abs(std::abs(a[0]) - kR) > 1e-9 || std::abs(std::abs(a[1]) - kR) > 1e-9) {
        throw std::invalid_argument("ancilla must be (|0> + e^{i theta}|1>)/sqrt2");
    }
}

}  // namespace

RotationResult teleported_rotation(StateVector &s, size_t q, size_t scratch, const Qubit1 &ancilla, RotationAxis axis,
                                   Rng &rng, std::optional<int> forced) {
    check_ancilla(ancilla);
    return gadget(s, q, scratch, ancilla, axis, rng, forced);
}

int rotate_with_fixup(StateVector &s, size_t q, size_t scratch, int eighths, RotationAxis axis, Rng &rng,
                      std::optional<Qubit1> first, std::array<std::optional<int>, 2> forced) {
    if (eighths != 1 && eighths != 2) {
        throw std::invalid_argument("only pi/4 and pi/2 rotations are supported");
    }
    Qubit1 anc = first.value_or(eighths == 1 ? a_state() : y_state());
    check_ancilla(anc);
    return chain(s, q, scratch, eighths, axis, rng, anc, forced);
}

PatternOutcome evaluate_errors(DistillCode code, DistillMode mode, const ErrorPattern &errors) {
    return evaluate(code, mode, errors, nullptr);
}

std::array<double, 4> error_coefficients(DistillCode code, DistillMode mode, InputNoise noise) {
    static std::mutex lock;
    static std::map<std::tuple<DistillCode, DistillMode, InputNoise>, std::array<double, 4>> cache;
    std::lock_guard guard(lock);
    auto key = std::tuple{code, mode, noise};
    if (auto it = cache.find(key); it != cache.end()) {
        return it->second;
    }
    size_t n = encoder(code).num_qubits;
    std::vector<Pauli> kinds = noise == InputNoise::Twirled ? std::vector{Pauli::Z}
                                                            : std::vector{Pauli::X, Pauli::Y, Pauli::Z};
    double share = noise == InputNoise::Twirled ? 1.0 : 1.0 / 3;
    std::array<double, 4> c{};
    c[0] = evaluate_errors(code, mode, ErrorPattern(n, Pauli::I)).wrong;
    for (size_t w = 1; w <= 3; w++) {
        for_each_subset(n, w, [&](const std::vector<size_t> &where) {
            size_t combos = 1;
            for (size_t i = 0; i < w; i++) {
                combos *= kinds.size();
            }
            for (size_t k = 0; k < combos; k++) {
                ErrorPattern errs(n, Pauli::I);
                size_t rest = k;
                for (size_t q : where) {
                    errs[q] = kinds[rest % kinds.size()];
                    rest /= kinds.size();
                }
                c[w] += evaluate_errors(code, mode, errs).wrong * std::pow(share, double(w));
            }
        });
    }
    cache.emplace(key, c);
    return c;
}

ScalingReport error_scaling(DistillCode code, DistillMode mode, InputNoise noise, double p, uint64_t trials,
                            uint64_t seed) {
    if (!(p > 0 && p <= 0.05)) {
        throw std::invalid_argument("p must be in (0, 0.05]");
    }
    size_t n = encoder(code).num_qubits;
    ScalingReport r{code, mode, noise, error_coefficients(code, mode, noise), p, trials, 0, 0, 0, 0, 0};
    for (size_t w = 0; w <= 3; w++) {
        r.predicted += r.coefficient[w] * std::pow(p, double(w)) * std::pow(1 - p, double(n - w));
    }
    r.predicted /= p * p * p;

    Rng rng(seed);
    std::bernoulli_distribution hit(p);
    std::uniform_int_distribution<int> which(1, 3);
    std::uniform_real_distribution<double> u01(0, 1);
    std::map<std::pair<ErrorPattern, std::vector<int>>, PatternOutcome> cache;
    for (uint64_t t = 0; t < trials; t++) {
        ErrorPattern errs(n, Pauli::I);
        std::vector<int> choices;
        for (size_t q = 0; q < n; q++) {
            if (hit(rng)) {
                errs[q] = noise == InputNoise::Twirled ? Pauli::Z : Pauli(which(rng));
            }
            if (mode == DistillMode::Teleported && (errs[q] == Pauli::X || errs[q] == Pauli::Y)) {
                // Each teleport outcome is +-1 with probability 1/2.
                double u = u01(rng);
                choices.push_back(u < 0.5 ? 0 : u < 0.75 ? 1 : 2);
            }
        }
        auto key = std::pair{errs, choices};
        auto it = cache.find(key);
        if (it == cache.end()) {
            it = cache.emplace(key, evaluate(code, mode, errs, &choices)).first;
        }
        double u = u01(rng);
        if (u < it->second.accepted) {
            r.accepted++;
            if (u < it->second.wrong) {
                r.wrong++;
            }
        }
    }
    double scale = double(trials) * p * p * p;
    double k = double(r.wrong);
    r.mc_estimate = k / scale;
    r.mc_sigma = std::sqrt(std::max(k * (1 - k / double(trials)), 1.0)) / scale;
    return r;
}

void write_scaling_csv_header(std::ostream &out) {
    out << "code,mode,noise,p,coefficient,mc_estimate,mc_sigma,acceptance_rate\n";
}

void write_scaling_csv_row(std::ostream &out, const ScalingReport &r) {
    out << to_string(r.code) << ',' << to_string(r.mode) << ',' << to_string(r.noise) << ',' << r.p << ','
        << std::setprecision(10) << r.coefficient[3] << ',' << r.mc_estimate << ',' << r.mc_sigma << ','
        << r.acceptance_rate() << '\n';
}

std::string to_string(DistillCode c) { return c == DistillCode::Steane7 ? "steane7" : "reed-muller15"; }
std::string to_string(DistillMode m) { return m == DistillMode::Direct ? "direct" : "teleported"; }
std::string to_string(InputNoise n) { return n == InputNoise::Twirled ? "twirled" : "depolarizing"; }

}  // namespace surfsim
