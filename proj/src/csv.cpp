#include "nscb/csv.hpp"

#include <cstdio>
#include <fstream>
#include <stdexcept>

namespace nscb {

std::string format_double(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

CsvWriter::CsvWriter(std::vector<std::string> header) : header_(std::move(header)) {}

void CsvWriter::add_row(const std::vector<double>& values) {
    if (values.size() != header_.size())
        throw std::invalid_argument("CsvWriter: column count mismatch");
    rows_.push_back(values);
}

std::string CsvWriter::to_string() const {
    std::string out;
    for (std::size_t i = 0; i < header_.size(); ++i) {
        if (i) out += ',';
        out += header_[i];
    }
    out += "\r\n";
    for (const auto& row : rows_) {
        for (std::size_t i = 0; i < row.size(); ++i) {
            if (i) out += ',';
            out += format_double(row[i]);
        }
        out += "\r\n";
    }
    return out;
}

void CsvWriter::write(const std::filesystem::path& path) const {
    std::ofstream os(path, std::ios::binary);
    if (!os) throw std::runtime_error("CsvWriter: cannot open " + path.string());
    const std::string body = to_string();
    os.write(body.data(), static_cast<std::streamsize>(body.size()));
    if (!os) throw std::runtime_error("CsvWriter: write failed");
}

void export_csv(const NormReport& report, const std::filesystem::path& path) {
    std::ofstream os(path, std::ios::binary);
    if (!os) throw std::runtime_error("export_csv: cannot open " + path.string());
    std::string body = "time,value,norm_kind,s,p,q,a\r\n";
    for (std::size_t i = 0; i < report.times.size(); ++i) {
        body += format_double(report.times[i]);
        body += ',';
        body += format_double(report.values[i]);
        body += ',';
        body += report.norm_kind;
        body += ',';
        body += format_double(report.s);
        body += ',';
        body += format_double(report.p);
        body += ',';
        body += format_double(report.q);
        body += ',';
        body += format_double(report.a);
        body += "\r\n";
    }
    os.write(body.data(), static_cast<std::streamsize>(body.size()));
    if (!os) throw std::runtime_error("export_csv: write failed");
}

}  // namespace nscb
