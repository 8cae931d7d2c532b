// Copyright 2026 The symtomo Authors
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

// Runs the twelve acceptance checks through the C API and prints one line per
// check. Usage: acceptance [grid_scale] [seed]

#include <cstdio>
#include <cstdlib>

#include "symtomo/symtomo.h"

namespace {

void report(int id, const char *name, int passed, const char *detail, void *) {
    std::printf("%s %2d %s: %s\n", passed ? "PASS" : "FAIL", id, name, detail);
    std::fflush(stdout);
}

}  // namespace

int main(int argc, char **argv) {
    const double scale = argc > 1 ? std::strtod(argv[1], nullptr) : 1.0;
    const unsigned long long seed = argc > 2 ? std::strtoull(argv[2], nullptr, 10) : 20260601ULL;
    int all = 0;
    if (st_selftest(scale, seed, report, nullptr, &all) != ST_OK) {
        std::fprintf(stderr, "selftest error: %s\n", st_last_error_message());
        return 2;
    }
    return all ? 0 : 1;
}
