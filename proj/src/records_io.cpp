#include "hotlane/records_io.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <map>
#include <sstream>
#include <stdexcept>

namespace hotlane {

namespace {

struct Column {
    std::string name;
    std::function<double&(SimulationRecord&)> field;  // numeric columns only
};

const std::vector<Column>& numeric_columns() {
    static const std::vector<Column> cols = {
        {"t", [](SimulationRecord& r) -> double& { return r.t; }},
        {"delta1", [](SimulationRecord& r) -> double& { return r.delta1; }},
        {"delta2", [](SimulationRecord& r) -> double& { return r.delta2; }},
        {"rho1", [](SimulationRecord& r) -> double& { return r.rho1; }},
        {"rho2", [](SimulationRecord& r) -> double& { return r.rho2; }},
        {"v1", [](SimulationRecord& r) -> double& { return r.v1; }},
        {"v2", [](SimulationRecord& r) -> double& { return r.v2; }},
        {"omega", [](SimulationRecord& r) -> double& { return r.omega; }},
        {"lambda", [](SimulationRecord& r) -> double& { return r.lambda; }},
        {"xi", [](SimulationRecord& r) -> double& { return r.xi; }},
        {"a", [](SimulationRecord& r) -> double& { return r.a; }},
        {"b", [](SimulationRecord& r) -> double& { return r.b; }},
        {"u", [](SimulationRecord& r) -> double& { return r.u; }},
        {"p", [](SimulationRecord& r) -> double& { return r.p; }},
        {"e1_tilde", [](SimulationRecord& r) -> double& { return r.e1_tilde; }},
        {"e2_tilde", [](SimulationRecord& r) -> double& { return r.e2_tilde; }},
        {"e21_tilde", [](SimulationRecord& r) -> double& { return r.e21_tilde; }},
        {"g1", [](SimulationRecord& r) -> double& { return r.g1; }},
        {"g2", [](SimulationRecord& r) -> double& { return r.g2; }},
        {"E1", [](SimulationRecord& r) -> double& { return r.E1; }},
        {"E2", [](SimulationRecord& r) -> double& { return r.E2; }},
        {"G1", [](SimulationRecord& r) -> double& { return r.G1; }},
        {"G2", [](SimulationRecord& r) -> double& { return r.G2; }},
    };
    return cols;
}

const char* kTextColumns[] = {"phase1", "phase2", "hot_clamp", "gp_clamp", "toll_clamp"};

void put_number(std::string& line, double x) {
    char buf[40];
    if (std::isinf(x)) {
        line += x > 0 ? "inf" : "-inf";
        return;
    }
    if (std::isnan(x)) {
        line += "nan";
        return;
    }
    std::snprintf(buf, sizeof buf, "%.9g", x);
    line += buf;
}

std::vector<std::string> split(const std::string& line) {
    std::vector<std::string> out;
    std::string cell;
    std::istringstream is(line);
    while (std::getline(is, cell, ',')) out.push_back(cell);
    if (!line.empty() && line.back() == ',') out.emplace_back();
    return out;
}

double parse_number(const std::string& s, std::size_t row, const std::string& col) {
    if (s == "inf") return INFINITY;
    if (s == "-inf") return -INFINITY;
    if (s == "nan") return NAN;
    char* end = nullptr;
    const double x = std::strtod(s.c_str(), &end);
    if (s.empty() || end != s.c_str() + s.size()) {
        throw std::runtime_error("row " + std::to_string(row) + ", column " + col + ": not a number: '" + s + "'");
    }
    return x;
}

Phase parse_phase(const std::string& s, std::size_t row) {
    if (s == "SUC") return Phase::SUC;
    if (s == "C") return Phase::C;
    if (s == "SOC") return Phase::SOC;
    throw std::runtime_error("row " + std::to_string(row) + ": unknown phase '" + s + "'");
}

bool parse_flag(const std::string& s, std::size_t row) {
    if (s == "0") return false;
    if (s == "1") return true;
    throw std::runtime_error("row " + std::to_string(row) + ": flag must be 0 or 1, got '" + s + "'");
}

}  // namespace

const std::vector<std::string>& record_columns() {
    static const std::vector<std::string> names = [] {
        std::vector<std::string> n;
        for (const auto& c : numeric_columns()) n.push_back(c.name);
        for (const char* t : kTextColumns) n.emplace_back(t);
        return n;
    }();
    return names;
}

void write_csv(std::ostream& out, const std::vector<SimulationRecord>& records) {
    const auto& names = record_columns();
    std::string line;
    for (std::size_t i = 0; i < names.size(); ++i) {
        if (i) line += ',';
        line += names[i];
    }
    out << line << '\n';
    for (SimulationRecord r : records) {
        line.clear();
        bool first = true;
        for (const auto& c : numeric_columns()) {
            if (!first) line += ',';
            first = false;
            put_number(line, c.field(r));
        }
        line += ',';
        line += to_string(r.phase1);
        line += ',';
        line += to_string(r.phase2);
        line += r.hot_clamp ? ",1" : ",0";
        line += r.gp_clamp ? ",1" : ",0";
        line += r.toll_clamp ? ",1" : ",0";
        out << line << '\n';
    }
}

void write_csv_file(const std::string& path, const std::vector<SimulationRecord>& records) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open '" + path + "' for writing");
    write_csv(out, records);
    if (!out) throw std::runtime_error("write to '" + path + "' failed");
}

std::vector<SimulationRecord> read_csv(std::istream& in) {
    std::string line;
    if (!std::getline(in, line)) throw std::runtime_error("empty CSV");
    if (!line.empty() && line.back() == '\r') line.pop_back();
    const auto header = split(line);
    std::map<std::string, std::size_t> index;
    for (std::size_t i = 0; i < header.size(); ++i) index[header[i]] = i;
    for (const auto& name : record_columns()) {
        if (!index.count(name)) throw std::runtime_error("CSV header lacks column '" + name + "'");
    }

    std::vector<SimulationRecord> out;
    std::size_t row = 1;
    while (std::getline(in, line)) {
        ++row;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        const auto cells = split(line);
        if (cells.size() != header.size()) {
            throw std::runtime_error("row " + std::to_string(row) + ": expected " +
                                     std::to_string(header.size()) + " fields, got " +
                                     std::to_string(cells.size()));
        }
        SimulationRecord r;
        for (const auto& c : numeric_columns()) c.field(r) = parse_number(cells[index[c.name]], row, c.name);
        r.phase1 = parse_phase(cells[index["phase1"]], row);
        r.phase2 = parse_phase(cells[index["phase2"]], row);
        r.hot_clamp = parse_flag(cells[index["hot_clamp"]], row);
        r.gp_clamp = parse_flag(cells[index["gp_clamp"]], row);
        r.toll_clamp = parse_flag(cells[index["toll_clamp"]], row);
        out.push_back(r);
    }
    return out;
}

std::vector<SimulationRecord> read_csv_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open '" + path + "'");
    return read_csv(in);
}

}  // namespace hotlane
