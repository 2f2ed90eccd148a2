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


#include <istream>
#include <map>
#include <memory>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>

#include "surfsim/defects.h"

namespace surfsim {

namespace {

struct ScriptError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

Coord parse_coord(const std::string &s) {
    auto comma = s.find(',');
    if (comma == std::string::npos) {
        throw ScriptError("bad coordinate '" + s + "'");
    }
    try {
        return {std::stoi(s.substr(0, comma)), std::stoi(s.substr(comma + 1))};
    } catch (const std::logic_error &) {
        throw ScriptError("bad coordinate '" + s + "'");
    }
}

Region parse_region(const std::string &s) {
    Region out;
    std::istringstream in(s);
    std::string item;
    while (std::getline(in, item, ';')) {
        out.push_back(parse_coord(item));
    }
    if (out.empty()) {
        throw ScriptError("empty region");
    }
    return out;
}

int parse_int(const std::string &s) {
    try {
        size_t used = 0;
        int v = std::stoi(s, &used);
        if (used == s.size()) {
            return v;
        }
    } catch (const std::logic_error &) {
    }
    throw ScriptError("expected an integer, got '" + s + "'");
}

LogicalBasis parse_basis(const std::string &s) {
    if (s == "X") {
        return LogicalBasis::X;
    }
    if (s == "Z") {
        return LogicalBasis::Z;
    }
    throw ScriptError("expected X or Z, got '" + s + "'");
}

class Runner {
   public:
    explicit Runner(std::ostream &out) : out_(out) {}

    void line(std::vector<std::string> w) {
        const std::string &cmd = w[0];
        if (cmd == "lattice") {
            arity(w, 3, 3);
            if (dl_) {
                throw ScriptError("lattice already set");
            }
            int width = parse_int(w[1]), height = parse_int(w[2]);
            if (width < 1 || height < 1) {
                throw ScriptError("lattice size must be positive");
            }
            dl_ = std::make_unique<DefectLattice>(PlanarLattice::all_smooth(size_t(width), size_t(height)), seed_);
        } else if (cmd == "seed") {
            arity(w, 2, 2);
            if (dl_) {
                throw ScriptError("seed must come before lattice");
            }
            seed_ = std::stoull(w[1]);
        } else if (cmd == "smooth" || cmd == "rough") {
            arity(w, 4, 5);
            if (names_.count(w[1])) {
                throw ScriptError("qubit '" + w[1] + "' already exists");
            }
            bool smooth = cmd == "smooth";
            LogicalBasis init = smooth ? LogicalBasis::Z : LogicalBasis::X;
            if (w.size() == 5) {
                if (w[4] != "zero" && w[4] != "plus") {
                    throw ScriptError("initial state must be zero or plus");
                }
                init = w[4] == "zero" ? LogicalBasis::Z : LogicalBasis::X;
            }
            Region a = parse_region(w[2]), b = parse_region(w[3]);
            names_[w[1]] = smooth ? lattice().create_smooth_qubit(a, b, init) : lattice().create_rough_qubit(a, b, init);
        } else if (cmd == "move") {
            arity(w, 3, 3);
            lattice().move_defect(defect(w[1]), parse_region(w[2]));
        } else if (cmd == "braid") {
            if (w.size() < 4) {
                throw ScriptError("braid needs a defect, a target and a path");
            }
            auto [control, which] = defect_of(w[1]);
            BraidSpec spec{which, {}};
            if (w[3] == "loop") {
                arity(w, 9, 9);
                spec.path = rectangle_loop(parse_int(w[4]), parse_int(w[5]), parse_int(w[6]), parse_int(w[7]),
                                           parse_coord(w[8]));
            } else {
                for (size_t i = 3; i < w.size(); i++) {
                    spec.path.push_back(parse_region(w[i]));
                }
            }
            lattice().braid_cnot(control, qubit(w[2]), spec);
        } else if (cmd == "measure") {
            arity(w, 3, 5);
            int v = lattice().measure_logical(qubit(w[1]), parse_basis(w[2]));
            report(w, v);
        } else if (cmd == "peek") {
            arity(w, 3, 3);
            auto v = lattice().peek_logical(qubit(w[1]), parse_basis(w[2]));
            out_ << "peek " << w[1] << ' ' << w[2] << ' ' << (v ? (*v > 0 ? "+1" : "-1") : "random") << '\n';
        } else if (cmd == "apply") {
            arity(w, 3, 3);
            lattice().apply_logical(qubit(w[1]), parse_basis(w[2]));
        } else if (cmd == "prepare") {
            arity(w, 3, 3);
            lattice().prepare_logical(qubit(w[1]), parse_basis(w[2]));
        } else if (cmd == "remove") {
            arity(w, 2, 4);
            int v = lattice().remove_qubit(qubit(w[1]));
            names_.erase(w[1]);
            report(w, v);
        } else {
            throw ScriptError("unknown command '" + cmd + "'");
        }
    }

   private:
    static void arity(const std::vector<std::string> &w, size_t lo, size_t hi) {
        if (w.size() < lo || w.size() > hi) {
            throw ScriptError("wrong number of arguments to " + w[0]);
        }
    }

    DefectLattice &lattice() {
        if (!dl_) {
            throw ScriptError("no lattice yet");
        }
        return *dl_;
    }

    size_t qubit(const std::string &name) const {
        auto it = names_.find(name);
        if (it == names_.end()) {
            throw ScriptError("unknown qubit '" + name + "'");
        }
        return it->second;
    }

    // NAME.K -> (qubit, K)
    std::pair<size_t, size_t> defect_of(const std::string &s) const {
        auto dot = s.rfind('.');
        if (dot == std::string::npos) {
            throw ScriptError("expected NAME.K, got '" + s + "'");
        }
        int k = parse_int(s.substr(dot + 1));
        if (k != 0 && k != 1) {
            throw ScriptError("defect index must be 0 or 1");
        }
        return {qubit(s.substr(0, dot)), size_t(k)};
    }

    size_t defect(const std::string &s) {
        auto [q, k] = defect_of(s);
        return lattice().qubit(q).defects[k];
    }

    // Prints "CMD NAME [BASIS] OUTCOME" and checks a trailing "expect V".
    void report(const std::vector<std::string> &w, int v) {
        size_t head = w[0] == "measure" ? 3 : 2;
        std::string sign = v > 0 ? "+1" : "-1";
        out_ << w[0];
        for (size_t i = 1; i < head; i++) {
            out_ << ' ' << w[i];
        }
        out_ << ' ' << sign << '\n';
        if (w.size() == head) {
            return;
        }
        if (w.size() != head + 2 || w[head] != "expect") {
            throw ScriptError("expected 'expect +1' or 'expect -1'");
        }
        int want = parse_int(w[head + 1]);
        if (want != 1 && want != -1) {
            throw ScriptError("expected value must be +1 or -1");
        }
        if (want != v) {
            throw ScriptError("expected " + w[head + 1] + ", got " + sign);
        }
    }

    std::ostream &out_;
    uint64_t seed_ = 1;
    std::unique_ptr<DefectLattice> dl_;
    std::map<std::string, size_t> names_;
};

}  // namespace

void run_defect_script(std::istream &in, std::ostream &out) {
    Runner runner(out);
    std::string text;
    for (size_t no = 1; std::getline(in, text); no++) {
        if (auto hash = text.find('#'); hash != std::string::npos) {
            text.erase(hash);
        }
        std::istringstream words(text);
        std::vector<std::string> w;
        for (std::string s; words >> s;) {
            w.push_back(s);
        }
        if (w.empty()) {
            continue;
        }
        try {
            runner.line(std::move(w));
        } catch (const std::exception &e) {
            throw std::runtime_error("line " + std::to_string(no) + ": " + e.what());
        }
    }
}

}  // namespace surfsim
