#pragma once

#include <filesystem>
#include <span>
#include <string>
#include <vector>

namespace vekua {

/// 17-significant-digit decimal form; reparsing recovers the double exactly.
std::string csv_double(double v);

struct Csv {
    std::vector<std::string> header;
    std::vector<std::vector<std::string>> rows;
};

void write_csv(const std::filesystem::path& file, std::span<const std::string> header,
               const std::vector<std::vector<std::string>>& rows);

Csv read_csv(const std::filesystem::path& file);

} // namespace vekua
