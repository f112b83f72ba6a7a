#pragma once

#include <filesystem>
#include <fstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace riesz {

struct IoError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Shortest round-tripping form is not required; every real is written with 17 significant digits.
std::string format_real(double v);
/// Shortest text that reads back to the same double; for configs and messages.
std::string format_short(double v);

/// Comma-separated writer with LF line endings.
class CsvWriter {
public:
    CsvWriter(const std::filesystem::path& path, const std::vector<std::string>& header);

    void row(const std::vector<double>& values);
    /// Mixed row: integer id columns rendered without a decimal point.
    void row(const std::vector<std::string>& cells);
    void close();

private:
    std::ofstream out_;
    std::size_t columns_;
    std::filesystem::path path_;
};

struct CsvTable {
    std::vector<std::string> header;
    std::vector<std::vector<double>> rows;

    /// Index of a column; throws IoError if absent.
    std::size_t column(const std::string& name) const;
    std::vector<double> values(const std::string& name) const;
};

CsvTable read_csv(const std::filesystem::path& path);

/// Sidecar metadata file "<name>.meta.json" next to an output; carries the run's config hash.
std::filesystem::path sidecar_path(const std::filesystem::path& file);
/// `extra_json`, if given, is a JSON object whose members are appended.
void write_sidecar(const std::filesystem::path& file, const std::string& config_hash, const std::string& kind,
                   const std::string& extra_json = "");
std::string read_sidecar_hash(const std::filesystem::path& file);

/// 64-bit FNV-1a rendered as 16 hex digits.
std::string fnv1a_hex(const std::string& text);

}  // namespace riesz
