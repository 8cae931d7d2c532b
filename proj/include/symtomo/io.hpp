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

#pragma once

#include <string>
#include <vector>

#include "symtomo/density.hpp"
#include "symtomo/grid.hpp"
#include "symtomo/tomography.hpp"

namespace symtomo {

/// Shortest text that reads back to the same double.
std::string format_number(double v);

struct Table {
    std::vector<std::string> columns;
    std::vector<std::vector<double>> rows;
};

/// CSV with a header row. Throws io on failure.
void write_table(const std::string &path, const Table &table);
Table read_table(const std::string &path);

Table slices_table(const FrameSlices &slices);
/// Rebuilds slices from columns mu, nu, delta, x, w (rows grouped by frame).
FrameSlices slices_from_table(const Table &table);

Table field_table(const ScalarField2D &field, const std::string &c0, const std::string &c1, const std::string &value);
Table density_table(const DensityMatrix &rho);
Table full_tomogram_table(const FullTomogram &tomogram);

/// Columnar text: "# axis <name> <min> <max> <n>" lines, then one
/// "coord0 coord1 value" row per node.
void write_columnar(const std::string &path, const ScalarField2D &field, const std::string &a0 = "q",
                    const std::string &a1 = "p");
ScalarField2D read_columnar(const std::string &path);

}  // namespace symtomo
