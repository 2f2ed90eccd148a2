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
#include "surfsim/magic.h"

using namespace surfsim;

namespace {

const std::map<std::string, DistillCode> kCodes{{"steane7", DistillCode::Steane7},
                                                {"reed-muller15", DistillCode::ReedMuller15}};
const std::map<std::string, DistillMode> kModes{{"direct", DistillMode::Direct},
                                                {"teleported", DistillMode::Teleported}};
const std::map<std::string, InputNoise> kNoise{{"twirled", InputNoise::Twirled},
                                               {"depolarizing", InputNoise::Depolarizing}};

}  // namespace

int main(int argc, char **argv) {
    CLI::App app{"Distillation circuits for |Y> and |A>: outcome tables and error scaling."};
    app.require_subcommand(1);

    DistillCode code = DistillCode::Steane7;
    std::optional<DistillMode> mode;
    auto add_code = [&](CLI::App *sub) {
        sub->add_option("--code", code, "steane7 or reed-muller15")
            ->transform(CLI::CheckedTransformer(kCodes, CLI::ignore_case).description(""))
            ->type_name("steane7|reed-muller15");
        sub->add_option("--mode", mode, "direct or teleported (default: teleported for reed-muller15)")
            ->transform(CLI::CheckedTransformer(kModes, CLI::ignore_case).description(""))
            ->type_name("direct|teleported");
    };

    auto *table = app.add_subcommand("table", "Measurement patterns for perfect inputs");
    add_code(table);
    auto *enc = app.add_subcommand("encoder", "Encoder gate list and checksum");
    add_code(enc);

    auto *scaling = app.add_subcommand("scaling", "Exhaustive coefficients and a Monte Carlo check, as CSV");
    std::vector<std::string> codes{"steane7", "reed-muller15"};
    std::vector<double> ps{0.01};
    InputNoise noise = InputNoise::Twirled;
    uint64_t trials = 1000000, seed = 1;
    std::string out_path;
    scaling->add_option("--codes", codes, "Codes to run")->delimiter(',')->check(CLI::IsMember(kCodes));
    scaling->add_option("--mode", mode, "direct or teleported (default: direct for steane7, teleported otherwise)")
        ->transform(CLI::CheckedTransformer(kModes, CLI::ignore_case).description(""))
            ->type_name("direct|teleported");
    scaling->add_option("--p", ps, "Input error rates")->delimiter(',');
    scaling->add_option("--noise", noise, "twirled or depolarizing")
        ->transform(CLI::CheckedTransformer(kNoise, CLI::ignore_case).description(""))
            ->type_name("twirled|depolarizing");
    scaling->add_option("--trials", trials, "Monte Carlo trials per row");
    scaling->add_option("--seed", seed, "Seed");
    scaling->add_option("--out", out_path, "CSV output (stdout if omitted)");

    CLI11_PARSE(app, argc, argv);

    auto default_mode = [&](DistillCode c) {
        return mode.value_or(c == DistillCode::Steane7 ? DistillMode::Direct : DistillMode::Teleported);
    };
    try {
        if (*table) {
            write_table(std::cout, outcome_table(code, default_mode(code)));
        } else if (*enc) {
            std::string text = describe(encoder(code));
            std::cout << text << "checksum " << checksum(text) << '\n';
        } else if (*scaling) {
            std::ofstream file;
            if (!out_path.empty()) {
                file.open(out_path);
                if (!file) {
                    std::cerr << "magiclab: cannot write " << out_path << '\n';
                    return 2;
                }
            }
            std::ostream &out = out_path.empty() ? std::cout : file;
            write_scaling_csv_header(out);
            for (const auto &name : codes) {
                DistillCode c = kCodes.at(name);
                for (double p : ps) {
                    write_scaling_csv_row(out, error_scaling(c, default_mode(c), noise, p, trials, seed));
                    out.flush();
                }
            }
        }
    } catch (const std::exception &e) {
        std::cerr << "magiclab: " << e.what() << '\n';
        return 1;
    }
    return 0;
}
