#include "levy/csv.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <random>
#include <system_error>

namespace levy {

void SweepTable::validate() const
{
    if (s.size() != value.size())
        throw DomainError("sweep table: column length mismatch");
    for (std::size_t i = 1; i < s.size(); ++i)
        if (!(s[i] > s[i - 1]))
            throw DomainError("sweep table: s not strictly increasing");
}

std::string SweepTable::to_csv() const
{
    validate();
    std::string out;
    for (const auto& m : metadata)
        out += "# " + m + "\n";
    out += "s,value\n";
    for (std::size_t i = 0; i < s.size(); ++i)
        out += format_double(s[i]) + "," + format_double(value[i]) + "\n";
    return out;
}

std::string format_double(double v)
{
    if (std::isnan(v))
        return "nan";
    if (std::isinf(v))
        return v > 0 ? "inf" : "-inf";
    char buf[64];
    const auto r = std::to_chars(buf, buf + sizeof buf, v);
    return std::string(buf, r.ptr);
}

void write_file_atomic(const std::filesystem::path& path, const std::string& content)
{
    namespace fs = std::filesystem;
    const fs::path dir = path.has_parent_path() ? path.parent_path() : fs::path(".");
    std::random_device rd;
    const fs::path tmp = dir / (path.filename().string() + ".tmp" + std::to_string(rd()));
    {
        std::ofstream f(tmp, std::ios::binary | std::ios::trunc);
        if (!f)
            throw std::runtime_error("cannot open " + tmp.string() + " for writing");
        f << content;
        f.flush();
        if (!f) {
            f.close();
            std::error_code ec;
            fs::remove(tmp, ec);
            throw std::runtime_error("write failed for " + tmp.string());
        }
    }
    std::error_code ec;
    fs::rename(tmp, path, ec);
    if (ec) {
        fs::remove(tmp, ec);
        throw std::runtime_error("cannot rename onto " + path.string());
    }
}

} // namespace levy
