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


#include <filesystem>
#include <fstream>
#include <sstream>

#include "doctest.h"
#include "surfsim/defects.h"

using namespace surfsim;

namespace {

std::string run(const std::string &script) {
    std::istringstream in(script);
    std::ostringstream out;
    run_defect_script(in, out);
    return out.str();
}

std::string error_of(const std::string &script) {
    try {
        run(script);
    } catch (const std::runtime_error &e) {
        return e.what();
    }
    return "";
}

std::string slurp(const std::filesystem::path &p) {
    std::ifstream in(p);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

const char *kHeader = "lattice 16 9\nsmooth a 5,11 9,3\n";

}  // namespace

TEST_CASE("defect script corpus") {
    size_t seen = 0;
    for (const auto &entry : std::filesystem::directory_iterator(SURFSIM_TEST_DATA)) {
        if (entry.path().extension() != ".dls") {
            continue;
        }
        CAPTURE(entry.path().string());
        auto expected = entry.path();
        expected.replace_extension(".out");
        CHECK(run(slurp(entry.path())) == slurp(expected));
        seen++;
    }
    CHECK(seen >= 4);
}

TEST_CASE("defect script output and comments") {
    CHECK(run(std::string(kHeader) + "  # nothing\n\nmeasure a Z   # trailing\n") == "measure a Z +1\n");
    CHECK(run(std::string(kHeader) + "peek a Z\npeek a X\n") == "peek a Z +1\npeek a X random\n");
}

TEST_CASE("defect script errors name the line") {
    CHECK(error_of("lattice 16 9\nfrobnicate\n") == "line 2: unknown command 'frobnicate'");
    CHECK(error_of(std::string(kHeader) + "measure a Z expect -1\n") == "line 3: expected -1, got +1");
    CHECK(error_of(std::string(kHeader) + "measure b Z\n") == "line 3: unknown qubit 'b'");
    CHECK(error_of("measure a Z\n") == "line 1: no lattice yet");
    CHECK(error_of("lattice 16 9\nsmooth a 5;11 9,3\n") == "line 2: bad coordinate '5'");
    CHECK(error_of(std::string(kHeader) + "smooth a 5,3 9,11\n") == "line 3: qubit 'a' already exists");
    CHECK(error_of(std::string(kHeader) + "measure a Y\n") == "line 3: expected X or Z, got 'Y'");
    CHECK(error_of(std::string(kHeader) + "move a.2 5,13\n") == "line 3: defect index must be 0 or 1");
    CHECK(error_of("lattice 16 9\nseed 3\n") == "line 2: seed must come before lattice");
    CHECK(error_of(std::string(kHeader) + "measure a Z expect 0\n") == "line 3: expected value must be +1 or -1");
    // Errors from the lattice itself carry the line number too.
    CHECK(error_of(std::string(kHeader) + "move a.0 15,15\n").rfind("line 3: ", 0) == 0);
    CHECK(error_of("lattice 16 9\nsmooth a 1,1 9,3\n").rfind("line 2: ", 0) == 0);
}
