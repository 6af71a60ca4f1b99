#pragma once

#include <filesystem>
#include <stdexcept>
#include <string>
#include <vector>

#include "nscb/field.hpp"

namespace nscb {

// Binary snapshot: magic "NSCB" | version u32 | n u32 | box_length f64 |
// components u32 | time f64 | components x n^3 little-endian f64 physical
// samples, x-fastest.
inline constexpr std::uint32_t kSnapshotVersion = 1;

struct SnapshotError : std::runtime_error {
    enum class Kind { io, magic, version, truncated };
    SnapshotError(Kind k, const std::string& msg) : std::runtime_error(msg), kind(k) {}
    Kind kind;
};

// Raw snapshot payload; round trips through the file bit-exactly.
struct Snapshot {
    std::uint32_t n = 0;
    double box_length = 0.0;
    double time = 0.0;
    std::vector<std::vector<double>> samples;

    Field to_field(double dealias_fraction = 2.0 / 3.0) const;
    static Snapshot from_field(const Field& f, double time);
};

void write_snapshot(const Snapshot& snap, const std::filesystem::path& path);
void write_snapshot(const Field& f, double time, const std::filesystem::path& path);
Snapshot read_snapshot(const std::filesystem::path& path);

}  // namespace nscb
