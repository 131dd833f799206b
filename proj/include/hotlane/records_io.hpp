#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "hotlane/scenario.hpp"

namespace hotlane {

/// Column names in output order.
const std::vector<std::string>& record_columns();

/// Header plus one line per record; numbers as %.9g, unbounded values as "inf",
/// phases as SUC/C/SOC, flags as 0/1.
void write_csv(std::ostream& out, const std::vector<SimulationRecord>& records);
void write_csv_file(const std::string& path, const std::vector<SimulationRecord>& records);

/// Reads what write_csv produced. Columns are located by header name, so
/// extra or reordered columns are accepted. Throws std::runtime_error on malformed input.
std::vector<SimulationRecord> read_csv(std::istream& in);
std::vector<SimulationRecord> read_csv_file(const std::string& path);

}  // namespace hotlane
