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

#include "CLI11.hpp"
#include "surfsim/defects.h"

int main(int argc, char **argv) {
    CLI::App app{"Runs defect scripts on the noiseless tableau lattice. Use - for stdin."};
    std::vector<std::string> scripts;
    app.add_option("scripts", scripts, "Script files")->required();
    CLI11_PARSE(app, argc, argv);

    for (const auto &path : scripts) {
        try {
            if (path == "-") {
                surfsim::run_defect_script(std::cin, std::cout);
                continue;
            }
            std::ifstream in(path);
            if (!in) {
                std::cerr << "defectlab: cannot open " << path << '\n';
                return 2;
            }
            surfsim::run_defect_script(in, std::cout);
        } catch (const std::exception &e) {
            std::cerr << "defectlab: " << path << ": " << e.what() << '\n';
            return 1;
        }
    }
    return 0;
}
