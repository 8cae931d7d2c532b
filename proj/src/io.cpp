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

#include "symtomo/io.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>

#include "symtomo/error.hpp"

namespace symtomo {

std::string format_number(double v) {
    char buf[32];
    auto res = std::to_chars(buf, buf + sizeof buf, v);
    return std::string(buf, res.ptr);
}

void write_table(const std::string &path, const Table &table) {
    std::ofstream out(path);
    if (!out) throw_io("cannot open " + path + " for writing");
    for (std::size_t c = 0; c < table.columns.size(); ++c) out << (c ? "," : "") << table.columns[c];
    out << '\n';
    for (const auto &row : table.rows) {
        for (std::size_t c = 0; c < row.size(); ++c) out << (c ? "," : "") << format_number(row[c]);
        out << '\n';
    }
    if (!out) throw_io("write failed for " + path);
}

Table read_table(const std::string &path) {
    std::ifstream in(path);
    if (!in) throw_io("cannot open " + path);
    Table t;
    std::string line;
    if (!std::getline(in, line)) throw_io(path + " is empty");
    std::stringstream header(line);
    for (std::string cell; std::getline(header, cell, ',');) t.columns.push_back(cell);
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        std::vector<double> row;
        std::stringstream ss(line);
        for (std::string cell; std::getline(ss, cell, ',');) {
            double v;
            auto res = std::from_chars(cell.data(), cell.data() + cell.size(), v);
            if (res.ec != std::errc()) throw_io(path + ": bad number '" + cell + "'");
            row.push_back(v);
        }
        if (row.size() != t.columns.size()) throw_io(path + ": row width does not match header");
        t.rows.push_back(std::move(row));
    }
    return t;
}

Table slices_table(const FrameSlices &s) {
    Table t{{"mu", "nu", "delta", "x", "w"}, {}};
    for (std::size_t f = 0; f < s.frames.size(); ++f)
        for (std::size_t k = 0; k < s.x.n(); ++k)
            t.rows.push_back({s.frames[f].mu, s.frames[f].nu, s.frames[f].delta, s.x[k], s.values[f][k]});
    return t;
}

FrameSlices slices_from_table(const Table &t) {
    if (t.columns != std::vector<std::string>{"mu", "nu", "delta", "x", "w"})
        throw_io("slice table needs columns mu,nu,delta,x,w");
    if (t.rows.empty()) throw_io("slice table is empty");
    std::vector<FrameParameters> frames;
    std::vector<std::vector<double>> values;
    std::vector<double> xs;
    for (const auto &r : t.rows) {
        FrameParameters f{r[0], r[1], r[2]};
        if (frames.empty() || frames.back().mu != f.mu || frames.back().nu != f.nu ||
            frames.back().delta != f.delta) {
            frames.push_back(f);
            values.emplace_back();
        }
        if (frames.size() == 1) xs.push_back(r[3]);
        values.back().push_back(r[4]);
    }
    if (xs.size() < 2) throw_io("slice table needs at least two x samples per frame");
    for (const auto &v : values)
        if (v.size() != xs.size()) throw_io("slice table frames have unequal lengths");
    return FrameSlices{frames, AxisGrid(xs.front(), xs.back(), xs.size()), values};
}

Table field_table(const ScalarField2D &f, const std::string &c0, const std::string &c1, const std::string &value) {
    Table t{{c0, c1, value}, {}};
    for (std::size_t i = 0; i < f.axis0().n(); ++i)
        for (std::size_t j = 0; j < f.axis1().n(); ++j) t.rows.push_back({f.axis0()[i], f.axis1()[j], f(i, j)});
    return t;
}

Table density_table(const DensityMatrix &rho) {
    Table t{{"q", "q_prime", "re", "im"}, {}};
    for (std::size_t i = 0; i < rho.n(); ++i)
        for (std::size_t j = 0; j < rho.n(); ++j)
            t.rows.push_back({rho.q()[i], rho.q()[j], rho(i, j).real(), rho(i, j).imag()});
    return t;
}

Table full_tomogram_table(const FullTomogram &w) {
    Table t{{"mu", "nu", "x", "w"}, {}};
    for (std::size_t i = 0; i < w.mu().n(); ++i)
        for (std::size_t j = 0; j < w.nu().n(); ++j)
            for (std::size_t k = 0; k < w.x().n(); ++k)
                t.rows.push_back({w.mu()[i], w.nu()[j], w.x()[k], w.values(i, j, k)});
    return t;
}

void write_columnar(const std::string &path, const ScalarField2D &f, const std::string &a0, const std::string &a1) {
    std::ofstream out(path);
    if (!out) throw_io("cannot open " + path + " for writing");
    out << "# axis " << a0 << ' ' << format_number(f.axis0().min()) << ' ' << format_number(f.axis0().max()) << ' '
        << f.axis0().n() << " axis " << a1 << ' ' << format_number(f.axis1().min()) << ' '
        << format_number(f.axis1().max()) << ' ' << f.axis1().n() << '\n';
    for (std::size_t i = 0; i < f.axis0().n(); ++i)
        for (std::size_t j = 0; j < f.axis1().n(); ++j)
            out << format_number(f.axis0()[i]) << ' ' << format_number(f.axis1()[j]) << ' ' << format_number(f(i, j))
                << '\n';
    if (!out) throw_io("write failed for " + path);
}

ScalarField2D read_columnar(const std::string &path) {
    std::ifstream in(path);
    if (!in) throw_io("cannot open " + path);
    std::string hash, kw0, n0, kw1, n1;
    double min0, max0, min1, max1;
    std::size_t c0, c1;
    if (!(in >> hash >> kw0 >> n0 >> min0 >> max0 >> c0 >> kw1 >> n1 >> min1 >> max1 >> c1) || hash != "#" ||
        kw0 != "axis" || kw1 != "axis")
        throw_io(path + ": missing axis header");
    ScalarField2D f(AxisGrid(min0, max0, c0), AxisGrid(min1, max1, c1));
    for (std::size_t i = 0; i < c0; ++i)
        for (std::size_t j = 0; j < c1; ++j) {
            double a, b, v;
            if (!(in >> a >> b >> v)) throw_io(path + ": truncated data");
            f(i, j) = v;
        }
    return f;
}

}  // namespace symtomo
