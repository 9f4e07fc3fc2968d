#include "vekua/csv.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace vekua {

std::string csv_double(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

void write_csv(const std::filesystem::path& file, std::span<const std::string> header,
               const std::vector<std::vector<std::string>>& rows) {
    std::ofstream os(file);
    if (!os) throw std::runtime_error("write_csv: cannot open " + file.string());
    for (size_t i = 0; i < header.size(); ++i) os << (i ? "," : "") << header[i];
    os << "\n";
    for (const auto& row : rows) {
        if (row.size() != header.size())
            throw std::invalid_argument("write_csv: row width mismatch");
        for (size_t i = 0; i < row.size(); ++i) os << (i ? "," : "") << row[i];
        os << "\n";
    }
    if (!os) throw std::runtime_error("write_csv: write failed for " + file.string());
}

Csv read_csv(const std::filesystem::path& file) {
    std::ifstream is(file);
    if (!is) throw std::runtime_error("read_csv: cannot open " + file.string());
    Csv out;
    std::string line;
    auto split = [](const std::string& s) {
        std::vector<std::string> cells;
        std::string cell;
        std::istringstream ss(s);
        while (std::getline(ss, cell, ',')) cells.push_back(cell);
        if (!s.empty() && s.back() == ',') cells.emplace_back();
        return cells;
    };
    if (std::getline(is, line)) out.header = split(line);
    while (std::getline(is, line)) {
        if (line.empty()) continue;
        out.rows.push_back(split(line));
    }
    return out;
}

} // namespace vekua
