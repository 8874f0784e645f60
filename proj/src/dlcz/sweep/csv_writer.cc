// Copyright 2026 The dlcz-perf Authors
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

#include "dlcz/sweep/csv_writer.h"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <ostream>
#include <sstream>

namespace dlcz::sweep {

size_t Table::column(const std::string &name) const {
    auto it = std::find(columns.begin(), columns.end(), name);
    if (it == columns.end()) {
        throw std::out_of_range("no column named " + name);
    }
    return static_cast<size_t>(it - columns.begin());
}

std::string format_number(double v) {
    if (!std::isfinite(v)) {
        throw std::logic_error("non-finite value in dataset");
    }
    if (v == 0.0) {
        return "0";  // also folds -0
    }
    char buf[64];
    auto [end, ec] = std::to_chars(buf, buf + sizeof(buf), v);
    if (ec != std::errc{}) {
        throw std::logic_error("number formatting failed");
    }
    return std::string(buf, end);
}

std::string format_cell(const Cell &c) {
    if (std::holds_alternative<std::monostate>(c)) {
        return "undef";
    }
    if (const double *d = std::get_if<double>(&c)) {
        return format_number(*d);
    }
    const std::string &s = std::get<std::string>(c);
    if (s.find_first_of(",\"\n\r") != std::string::npos) {
        throw std::logic_error("text cell needs quoting: " + s);
    }
    return s;
}

void write_csv(std::ostream &out, const Table &table) {
    for (size_t i = 0; i < table.columns.size(); i++) {
        out << (i ? "," : "") << table.columns[i];
    }
    out << '\n';
    for (const auto &row : table.rows) {
        if (row.size() != table.columns.size()) {
            throw std::logic_error("row width does not match header");
        }
        for (size_t i = 0; i < row.size(); i++) {
            out << (i ? "," : "") << format_cell(row[i]);
        }
        out << '\n';
    }
}

void write_csv_file(const std::string &path, const Table &table) {
    std::ostringstream buffer;
    write_csv(buffer, table);
    write_text_file(path, buffer.str());
}

void write_text_file(const std::string &path, const std::string &text) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) {
        throw OutputError("cannot open output file " + path);
    }
    out << text;
    out.flush();
    if (!out) {
        throw OutputError("failed writing output file " + path);
    }
}

}  // namespace dlcz::sweep
