#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include "nscb/norms.hpp"

namespace nscb {

// RFC-4180-style CSV: header row, '.' decimal separator, 17 significant
// digits so doubles round trip exactly.
class CsvWriter {
public:
    explicit CsvWriter(std::vector<std::string> header);
    void add_row(const std::vector<double>& values);
    void write(const std::filesystem::path& path) const;
    std::string to_string() const;

private:
    std::vector<std::string> header_;
    std::vector<std::vector<double>> rows_;
};

std::string format_double(double v);

void export_csv(const NormReport& report, const std::filesystem::path& path);

}  // namespace nscb
