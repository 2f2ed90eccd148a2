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


#include <bit>
#include <cmath>
#include <fstream>
#include <functional>
#include <map>
#include <numbers>
#include <random>
#include <sstream>

#include "doctest.h"
#include "surfsim/magic.h"
#include "surfsim/tableau.h"

using namespace surfsim;

namespace {

const double kPi = std::numbers::pi;
const cplx kI{0, 1};

StateVector random_state(size_t n, Rng &rng) {
    std::normal_distribution<double> g;
    std::vector<cplx> a(size_t{1} << n);
    for (auto &v : a) {
        v = {g(rng), g(rng)};
    }
    auto s = StateVector::from_amplitudes(std::move(a));
    s.normalize();
    return s;
}

Qubit1 random_qubit(Rng &rng) {
    std::normal_distribution<double> g;
    cplx a{g(rng), g(rng)}, b{g(rng), g(rng)};
    double n = std::sqrt(std::norm(a) + std::norm(b));
    return {a / n, b / n};
}

double qubit_fidelity(const Qubit1 &a, const Qubit1 &b) {
    return std::norm(std::conj(a[0]) * b[0] + std::conj(a[1]) * b[1]);
}

// |psi> on the input line, |0> elsewhere (plus `extra` idle qubits).
StateVector with_input(const Encoder &e, const Qubit1 &psi, size_t extra = 0) {
    std::vector<std::array<cplx, 2>> q(e.num_qubits + extra, {1, 0});
    q[e.input] = psi;
    return StateVector::product(q);
}

PauliOperator all_of(size_t n, Pauli p) {
    PauliOperator out(n);
    for (size_t q = 0; q < n; q++) {
        out.set(q, p);
    }
    return out;
}

// Single-qubit state of `q` when every other qubit is in a product with it.
Qubit1 reduced(const StateVector &s, size_t q) {
    size_t mask = size_t{1} << q;
    for (size_t i = 0; i < s.amplitudes().size(); i++) {
        if (!(i & mask) && (std::norm(s.amplitude(i)) + std::norm(s.amplitude(i | mask))) > 1e-6) {
            cplx a = s.amplitude(i), b = s.amplitude(i | mask);
            double n = std::sqrt(std::norm(a) + std::norm(b));
            return {a / n, b / n};
        }
    }
    return {0, 0};
}

Qubit1 rz(const Qubit1 &v, double theta) { return {v[0], std::polar(1.0, theta) * v[1]}; }
Qubit1 rx(const Qubit1 &v, double theta) {
    const double r = std::numbers::sqrt2 / 2;
    Qubit1 h{r * (v[0] + v[1]), r * (v[0] - v[1])};
    h = rz(h, theta);
    return {r * (h[0] + h[1]), r * (h[0] - h[1])};
}

// Triples of distinct nonzero m-bit vectors summing to zero: the weight-3 words of the
// Hamming code, which are exactly the undetected logical Z errors.
int hamming_weight3_words(int m) {
    int n = (1 << m) - 1, count = 0;
    for (int a = 1; a <= n; a++) {
        for (int b = a + 1; b <= n; b++) {
            int c = a ^ b;
            count += c > b ? 1 : 0;
        }
    }
    return count;
}

}  // namespace

TEST_CASE("encoder fixture and checksum") {
    std::ifstream in(std::string(SURFSIM_TEST_DATA) + "/encoders.txt");
    REQUIRE(in);
    std::vector<std::string> blocks;
    std::string block, line;
    while (std::getline(in, line)) {
        if (line.starts_with("#")) {
            continue;
        }
        if (line.starts_with("checksum ")) {
            CHECK(line.substr(9) == checksum(block));
            blocks.push_back(block);
            block.clear();
        } else {
            block += line + "\n";
        }
    }
    REQUIRE(blocks.size() == 2);
    CHECK(blocks[0] == describe(encoder(DistillCode::Steane7)));
    CHECK(blocks[1] == describe(encoder(DistillCode::ReedMuller15)));
    CHECK(checksum("") == "cbf29ce484222325");
    CHECK(checksum("a") == "af63dc4c8601ec8c");
}

TEST_CASE("encoder then decoder is the identity") {
    Rng rng(3);
    for (DistillCode c : {DistillCode::Steane7, DistillCode::ReedMuller15}) {
        const Encoder &e = encoder(c);
        StateVector s = random_state(e.num_qubits, rng);
        StateVector t = s;
        apply_encoder(t, e);
        CHECK(StateVector::fidelity(s, t) < 0.5);
        apply_decoder(t, e);
        CHECK(StateVector::fidelity(s, t) > 1 - 1e-10);
    }
}

TEST_CASE("encoded states are codewords") {
    Rng rng(4);
    for (DistillCode c : {DistillCode::Steane7, DistillCode::ReedMuller15}) {
        const Encoder &e = encoder(c);
        CHECK(e.x_stabilizers().size() + e.z_stabilizers().size() == e.num_qubits - 1);
        for (const auto &x : e.x_stabilizers()) {
            for (const auto &z : e.z_stabilizers()) {
                CHECK(x.commutes_with(z));
            }
        }
        Qubit1 psi = random_qubit(rng);
        StateVector s = with_input(e, psi);
        apply_encoder(s, e);
        for (const auto &g : e.x_stabilizers()) {
            CHECK(s.expectation(g) == doctest::Approx(1));
        }
        for (const auto &g : e.z_stabilizers()) {
            CHECK(s.expectation(g) == doctest::Approx(1));
        }
        double zexp = std::norm(psi[0]) - std::norm(psi[1]);
        double xexp = 2 * std::real(std::conj(psi[0]) * psi[1]);
        CHECK(s.expectation(all_of(e.num_qubits, Pauli::Z)) == doctest::Approx(zexp));
        CHECK(s.expectation(all_of(e.num_qubits, Pauli::X)) == doctest::Approx(xexp));
    }
}

TEST_CASE("transversal phase gates act as logical gates") {
    Rng rng(5);
    Qubit1 psi = random_qubit(rng);
    SUBCASE("transversal S on the Steane code is logical S dagger") {
        const Encoder &e = encoder(DistillCode::Steane7);
        StateVector s = with_input(e, psi), ref = with_input(e, rz(psi, -kPi / 2));
        apply_encoder(s, e);
        apply_encoder(ref, e);
        for (size_t q = 0; q < e.num_qubits; q++) {
            s.apply(Gate::s(q));
        }
        CHECK(StateVector::fidelity(s, ref) > 1 - 1e-10);
    }
    SUBCASE("transversal T on the Reed-Muller code is logical T dagger") {
        const Encoder &e = encoder(DistillCode::ReedMuller15);
        StateVector s = with_input(e, psi), ref = with_input(e, rz(psi, -kPi / 4));
        apply_encoder(s, e);
        apply_encoder(ref, e);
        for (size_t q = 0; q < e.num_qubits; q++) {
            s.apply(Gate::t(q));
        }
        CHECK(StateVector::fidelity(s, ref) > 1 - 1e-10);
    }
}

TEST_CASE("Steane table matches the published table bit for bit") {
    // probability, M_X M_X M_X M_Z M_Z M_Z, output
    const std::vector<std::tuple<double, std::string, Pauli>> published = {
        {0.125, "000000", Pauli::Z}, {0.125, "001111", Pauli::Z}, {0.125, "010101", Pauli::I},
        {0.125, "011010", Pauli::I}, {0.125, "100011", Pauli::I}, {0.125, "101100", Pauli::I},
        {0.125, "110110", Pauli::Z}, {0.125, "111001", Pauli::Z},
    };
    const OutcomeTable &t = outcome_table(DistillCode::Steane7, DistillMode::Direct);
    REQUIRE(t.rows.size() == published.size());
    double total = 0;
    std::map<std::string, std::pair<double, Pauli>> got;
    for (const auto &r : t.rows) {
        got[pattern_string(r.bits, 6)] = {r.probability, r.correction};
        total += r.probability;
    }
    CHECK(total == doctest::Approx(1));
    for (const auto &[prob, bits, out] : published) {
        CAPTURE(bits);
        REQUIRE(got.count(bits));
        CHECK(got[bits].first == doctest::Approx(prob).epsilon(1e-12));
        CHECK(got[bits].second == out);
    }
    std::ostringstream text;
    write_table(text, t);
    CHECK(text.str().find("0.125 000000 Z|Y>\n0.125 001111 Z|Y>\n0.125 010101 |Y>\n") != std::string::npos);
}

TEST_CASE("Steane table from the stabilizer tableau") {
    // All-Clifford: |Y> is the +1 eigenstate of Y, so the whole circuit runs on the tableau.
    const Encoder &e = encoder(DistillCode::Steane7);
    StabilizerTableau t = StabilizerTableau::from_generators(
        7, [] {
            std::vector<PauliOperator> g;
            for (size_t q = 0; q < 7; q++) {
                g.push_back(PauliOperator::single(7, q, Pauli::Y));
            }
            return g;
        }());
    for (auto it = e.cnots.rbegin(); it != e.cnots.rend(); ++it) {
        t.apply(CliffordGate::cnot(it->control, it->target));
    }
    for (size_t q : e.hadamards) {
        t.apply(CliffordGate::h(q));
    }
    std::vector<size_t> columns = e.mx;
    columns.insert(columns.end(), e.mz.begin(), e.mz.end());
    std::map<std::string, std::pair<double, int>> leaves;  // bits -> probability, Y value of output
    Rng unused(0);
    std::function<void(StabilizerTableau, size_t, double, std::string)> walk = [&](StabilizerTableau s, size_t k,
                                                                                 double prob, std::string bits) {
        if (k == columns.size()) {
            auto y = s.peek(PauliOperator::single(7, e.input, Pauli::Y));
            REQUIRE(y.has_value());
            leaves[bits] = {prob, *y};
            return;
        }
        PauliOperator z = PauliOperator::single(7, columns[k], Pauli::Z);
        auto fixed = s.peek(z);
        for (int outcome : {+1, -1}) {
            if (fixed && *fixed != outcome) {
                continue;
            }
            StabilizerTableau next = s;
            next.measure(z, unused, fixed ? std::nullopt : std::optional<int>(outcome));
            walk(next, k + 1, fixed ? prob : prob / 2, bits + (outcome > 0 ? '0' : '1'));
        }
    };
    walk(t, 0, 1, "");
    const OutcomeTable &table = outcome_table(DistillCode::Steane7, DistillMode::Direct);
    REQUIRE(leaves.size() == table.rows.size());
    for (const auto &r : table.rows) {
        auto it = leaves.find(pattern_string(r.bits, 6));
        REQUIRE(it != leaves.end());
        CHECK(it->second.first == doctest::Approx(r.probability));
        // Z|Y> is the -1 eigenstate of Y.
        CHECK(it->second.second == (r.correction == Pauli::Z ? -1 : +1));
    }
}

TEST_CASE("distill_Y with perfect inputs") {
    Rng rng(2026);
    std::vector<Qubit1> in(7, y_state());
    std::map<Pattern, int> seen;
    const int trials = 10000;
    for (int i = 0; i < trials; i++) {
        DistillResult r = distill_Y(in, rng);
        REQUIRE(r.accepted);
        REQUIRE(qubit_fidelity(r.output, y_state()) > 1 - 1e-10);
        seen[r.bits]++;
    }
    CHECK(seen.size() == 8);
    for (const auto &[bits, count] : seen) {
        CHECK(double(count) / trials == doctest::Approx(0.125).epsilon(0.08));
    }
    CHECK_THROWS_AS(distill_Y(std::vector<Qubit1>(6, y_state()), rng), std::invalid_argument);
    CHECK_THROWS_AS(distill_Y(std::vector<Qubit1>(7, Qubit1{1, 1}), rng), std::invalid_argument);
}

TEST_CASE("distill_A with perfect inputs") {
    Rng rng(7);
    std::vector<Qubit1> in(15, a_state());
    for (DistillMode mode : {DistillMode::Direct, DistillMode::Teleported}) {
        CAPTURE(to_string(mode));
        for (int i = 0; i < 5; i++) {
            DistillResult r = distill_A(in, rng, mode);
            CHECK(r.accepted);
            CHECK(qubit_fidelity(r.output, a_state()) > 1 - 1e-10);
        }
        double total = 0;
        for (const auto &row : outcome_table(DistillCode::ReedMuller15, mode).rows) {
            total += row.probability;
        }
        CHECK(total == doctest::Approx(1));
    }
    const OutcomeTable &tele = outcome_table(DistillCode::ReedMuller15, DistillMode::Teleported);
    REQUIRE(tele.rows.size() == 1);
    CHECK(tele.rows[0].bits == 0);
    CHECK(tele.rows[0].correction == Pauli::X);
    const OutcomeTable &direct = outcome_table(DistillCode::ReedMuller15, DistillMode::Direct);
    CHECK(direct.rows.size() == 11119);
    bool non_trivial = false;
    for (const auto &row : direct.rows) {
        non_trivial = non_trivial || row.correction != Pauli::I;
    }
    CHECK(non_trivial);
    CHECK_THROWS_AS(outcome_table(DistillCode::Steane7, DistillMode::Teleported), std::invalid_argument);
}

TEST_CASE("single Z|A> input shifts the pattern") {
    for (size_t q = 0; q < 15; q++) {
        ErrorPattern errs(15, Pauli::I);
        errs[q] = Pauli::Z;
        PatternOutcome tele = evaluate_errors(DistillCode::ReedMuller15, DistillMode::Teleported, errs);
        CHECK(tele.accepted == doctest::Approx(0));
        PatternOutcome direct = evaluate_errors(DistillCode::ReedMuller15, DistillMode::Direct, errs);
        CHECK((direct.accepted < 1 - 1e-9 || direct.wrong > 1e-9));
    }
    PatternOutcome clean = evaluate_errors(DistillCode::ReedMuller15, DistillMode::Teleported, ErrorPattern(15));
    CHECK(clean.accepted == doctest::Approx(1));
    CHECK(clean.wrong == doctest::Approx(0));
}

TEST_CASE("all-zero inputs are almost always rejected") {
    // The decoder leaves |0...0> alone up to the Hadamards: M_X is uniform, M_Z is all zero,
    // and the output is |0>.
    const OutcomeTable &t = outcome_table(DistillCode::ReedMuller15, DistillMode::Direct);
    int allowed = 0;
    for (Pattern x = 0; x < 16; x++) {
        allowed += t.find(x) ? 1 : 0;
    }
    double expected_rejection = 1 - allowed / 16.0;
    CHECK(expected_rejection > 0.9);

    Rng rng(8);
    int rejected = 0;
    const int trials = 1000;
    for (int i = 0; i < trials; i++) {
        rejected += distill_A(std::vector<Qubit1>(15, Qubit1{1, 0}), rng, DistillMode::Direct).accepted ? 0 : 1;
    }
    double sigma = std::sqrt(expected_rejection * (1 - expected_rejection) / trials);
    CHECK(std::abs(double(rejected) / trials - expected_rejection) < 4 * sigma + 1e-9);
}

TEST_CASE("exhaustive error coefficients") {
    auto steane = error_coefficients(DistillCode::Steane7, DistillMode::Direct, InputNoise::Twirled);
    CHECK(steane[0] == 0);
    CHECK(steane[1] == doctest::Approx(0));
    CHECK(steane[2] == doctest::Approx(0));
    CHECK(steane[3] == doctest::Approx(hamming_weight3_words(3)));
    CHECK(hamming_weight3_words(3) == 7);

    // X and Z both map |Y> to its orthogonal state, Y leaves it alone.
    auto depol = error_coefficients(DistillCode::Steane7, DistillMode::Direct, InputNoise::Depolarizing);
    CHECK(depol[1] == doctest::Approx(0));
    CHECK(depol[2] == doctest::Approx(0));
    CHECK(depol[3] == doctest::Approx(7.0 * 8 / 27));

    auto rm = error_coefficients(DistillCode::ReedMuller15, DistillMode::Teleported, InputNoise::Twirled);
    CHECK(rm[1] == doctest::Approx(0));
    CHECK(rm[2] == doctest::Approx(0));
    CHECK(rm[3] == doctest::Approx(hamming_weight3_words(4)));
    CHECK(hamming_weight3_words(4) == 35);

    CHECK_THROWS_AS(error_scaling(DistillCode::Steane7, DistillMode::Direct, InputNoise::Twirled, 0, 10, 1),
                    std::invalid_argument);
    CHECK_THROWS_AS(error_scaling(DistillCode::Steane7, DistillMode::Direct, InputNoise::Twirled, 0.2, 10, 1),
                    std::invalid_argument);
}

TEST_CASE("Monte Carlo agrees with enumeration at high p") {
    // p = 0.05 keeps the run short; weights above 3 still matter little here.
    ScalingReport r = error_scaling(DistillCode::Steane7, DistillMode::Direct, InputNoise::Twirled, 0.05, 400000, 17);
    CHECK(r.coefficient[3] == doctest::Approx(7));
    CHECK(std::abs(r.mc_estimate - r.predicted) < 3 * r.mc_sigma);
    CHECK(r.acceptance_rate() > 0.6);
    std::ostringstream csv;
    write_scaling_csv_header(csv);
    write_scaling_csv_row(csv, r);
    CHECK(csv.str().starts_with("code,mode,noise,p,coefficient,mc_estimate,mc_sigma,acceptance_rate\n"
                                "steane7,direct,twirled,0.05,7,"));
    ScalingReport again =
        error_scaling(DistillCode::Steane7, DistillMode::Direct, InputNoise::Twirled, 0.05, 400000, 17);
    CHECK(again.wrong == r.wrong);
}

TEST_CASE("teleported rotation") {
    Rng rng(9);
    Qubit1 psi = random_qubit(rng);
    auto run = [&](double theta, RotationAxis axis, std::optional<int> forced) {
        StateVector s = StateVector::product({psi, {1, 0}});
        RotationResult r = teleported_rotation(s, 0, 1, {std::sqrt(0.5), std::polar(std::sqrt(0.5), theta)}, axis,
                                               rng, forced);
        CHECK(s.probability(PauliOperator::from_string("IZ"), -1) < 1e-12);
        return std::pair{reduced(s, 0), r};
    };
    SUBCASE("theta = 0 is the identity up to the byproduct") {
        for (int m : {+1, -1}) {
            auto [out, r] = run(0, RotationAxis::Z, m);
            CHECK(r.byproduct == (m < 0));
            Qubit1 want = m > 0 ? psi : Qubit1{psi[1], psi[0]};
            CHECK(qubit_fidelity(out, want) > 1 - 1e-10);
        }
    }
    SUBCASE("outcomes follow the circuit identity") {
        for (RotationAxis axis : {RotationAxis::Z, RotationAxis::X}) {
            for (int m : {+1, -1}) {
                double theta = 0.7;
                auto [out, r] = run(theta, axis, m);
                Qubit1 want;
                if (axis == RotationAxis::Z) {
                    want = m > 0 ? rz(psi, theta) : rz(rz(psi, -theta), 0);
                    if (m < 0) {
                        want = {want[1], want[0]};
                    }
                } else {
                    want = m > 0 ? rx(psi, theta) : rx(psi, -theta);
                    if (m < 0) {
                        want = {want[0], -want[1]};
                    }
                }
                CHECK(qubit_fidelity(out, want) > 1 - 1e-10);
            }
        }
    }
    SUBCASE("outcomes are fair coins") {
        StateVector s = StateVector::product({psi, {1, 0}});
        s.apply(Gate::unitary(1, {std::sqrt(0.5), -std::sqrt(0.5), std::sqrt(0.5), std::sqrt(0.5)}));
        s.apply(Gate::cnot(1, 0));
        CHECK(s.probability(PauliOperator::from_string("ZI"), +1) == doctest::Approx(0.5));
    }
    SUBCASE("pi/2 failure is fixed by X then Z") {
        for (RotationAxis axis : {RotationAxis::Z, RotationAxis::X}) {
            StateVector s = StateVector::product({psi, {1, 0}});
            CHECK(rotate_with_fixup(s, 0, 1, 2, axis, rng, std::nullopt, {-1, std::nullopt}) == 1);
            Qubit1 want = axis == RotationAxis::Z ? rz(psi, kPi / 2) : rx(psi, kPi / 2);
            CHECK(qubit_fidelity(reduced(s, 0), want) > 1 - 1e-10);
        }
    }
    SUBCASE("pi/4 chain is exact on every branch") {
        for (RotationAxis axis : {RotationAxis::Z, RotationAxis::X}) {
            for (auto forced : std::vector<std::array<std::optional<int>, 2>>{{+1, {}}, {-1, +1}, {-1, -1}}) {
                StateVector s = StateVector::product({psi, {1, 0}});
                int used = rotate_with_fixup(s, 0, 1, 1, axis, rng, std::nullopt, forced);
                CHECK(used == (*forced[0] > 0 ? 1 : 2));
                Qubit1 want = axis == RotationAxis::Z ? rz(psi, kPi / 4) : rx(psi, kPi / 4);
                CHECK(qubit_fidelity(reduced(s, 0), want) > 1 - 1e-10);
            }
        }
        int total = 0;
        for (int i = 0; i < 2000; i++) {
            StateVector s = StateVector::product({psi, {1, 0}});
            total += rotate_with_fixup(s, 0, 1, 1, RotationAxis::Z, rng);
        }
        CHECK(total / 2000.0 == doctest::Approx(1.5).epsilon(0.05));
    }
    SUBCASE("a Z error on the ancilla becomes a Z after the rotation on every branch") {
        Qubit1 za{a_state()[0], -a_state()[1]};
        for (auto forced : std::vector<std::array<std::optional<int>, 2>>{{+1, {}}, {-1, +1}, {-1, -1}}) {
            StateVector s = StateVector::product({psi, {1, 0}});
            rotate_with_fixup(s, 0, 1, 1, RotationAxis::Z, rng, za, forced);
            Qubit1 want = rz(rz(psi, kPi / 4), kPi);
            CHECK(qubit_fidelity(reduced(s, 0), want) > 1 - 1e-10);
        }
    }
    SUBCASE("errors") {
        StateVector s = StateVector::product({psi, {1, 0}});
        CHECK_THROWS_AS(teleported_rotation(s, 0, 1, {1, 0}, RotationAxis::Z, rng), std::invalid_argument);
        CHECK_THROWS_AS(teleported_rotation(s, 0, 0, a_state(), RotationAxis::Z, rng), std::invalid_argument);
        StateVector busy = StateVector::product({psi, {0, 1}});
        CHECK_THROWS_AS(teleported_rotation(busy, 0, 1, a_state(), RotationAxis::Z, rng), std::invalid_argument);
        CHECK_THROWS_AS(rotate_with_fixup(s, 0, 1, 3, RotationAxis::Z, rng), std::invalid_argument);
    }
}
