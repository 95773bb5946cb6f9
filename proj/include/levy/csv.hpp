#pragma once

#include "levy/functionals.hpp"

#include <filesystem>
#include <string>
#include <vector>

namespace levy {

inline constexpr const char* tool_version = "levyforage 1.0.0";

struct SweepTable {
    std::vector<std::string> metadata;  // "key=value", written as "# key=value"
    std::vector<double> s;
    std::vector<double> value;

    void validate() const;
    std::string to_csv() const;
};

// shortest representation that round-trips; "inf" / "-inf" / "nan"
std::string format_double(double v);

// write to a sibling temp file, then rename over the target
void write_file_atomic(const std::filesystem::path& path, const std::string& content);

} // namespace levy
