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

#ifndef DLCZ_SWEEP_CSV_WRITER_H
#define DLCZ_SWEEP_CSV_WRITER_H

#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

namespace dlcz::sweep {

/// Empty cells are written as the token "undef".
using Cell = std::variant<std::monostate, double, std::string>;

inline Cell cell(const std::optional<double> &v) {
    return v ? Cell{*v} : Cell{};
}

struct Table {
    std::vector<std::string> columns;
    std::vector<std::vector<Cell>> rows;

    size_t column(const std::string &name) const;
};

struct OutputError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Shortest round-trip decimal form. Throws std::logic_error for NaN or
/// infinity so they can never reach a dataset.
std::string format_number(double v);
std::string format_cell(const Cell &c);

void write_csv(std::ostream &out, const Table &table);

/// Writes `table` to `path` with LF line endings; throws OutputError.
void write_csv_file(const std::string &path, const Table &table);

/// Writes `text` to `path`; throws OutputError.
void write_text_file(const std::string &path, const std::string &text);

}  // namespace dlcz::sweep

#endif
