#include "nscb/snapshot_io.hpp"

#include <bit>
#include <cstring>
#include <fstream>

namespace nscb {

static_assert(std::endian::native == std::endian::little,
              "snapshot io assumes a little-endian host");

namespace {
template <typename T>
void put(std::ofstream& os, T v) {
    os.write(reinterpret_cast<const char*>(&v), sizeof(T));
}

template <typename T>
T get(std::ifstream& is) {
    T v{};
    is.read(reinterpret_cast<char*>(&v), sizeof(T));
    if (!is) throw SnapshotError(SnapshotError::Kind::truncated, "snapshot: truncated payload");
    return v;
}
}  // namespace

Field Snapshot::to_field(double dealias_fraction) const {
    const Grid grid = make_grid(n, box_length, dealias_fraction);
    return Field::from_physical(grid, samples);
}

Snapshot Snapshot::from_field(const Field& f, double time) {
    Snapshot snap;
    snap.n = static_cast<std::uint32_t>(f.grid().n);
    snap.box_length = f.grid().box_length;
    snap.time = time;
    for (std::size_t c = 0; c < f.ncomp(); ++c) snap.samples.push_back(f.to_physical(c));
    return snap;
}

void write_snapshot(const Snapshot& snap, const std::filesystem::path& path) {
    std::ofstream os(path, std::ios::binary);
    if (!os) throw SnapshotError(SnapshotError::Kind::io, "snapshot: cannot open " + path.string());
    os.write("NSCB", 4);
    put<std::uint32_t>(os, kSnapshotVersion);
    put<std::uint32_t>(os, snap.n);
    put<double>(os, snap.box_length);
    put<std::uint32_t>(os, static_cast<std::uint32_t>(snap.samples.size()));
    put<double>(os, snap.time);
    for (const auto& comp : snap.samples)
        os.write(reinterpret_cast<const char*>(comp.data()),
                 static_cast<std::streamsize>(comp.size() * sizeof(double)));
    if (!os) throw SnapshotError(SnapshotError::Kind::io, "snapshot: write failed");
}

void write_snapshot(const Field& f, double time, const std::filesystem::path& path) {
    write_snapshot(Snapshot::from_field(f, time), path);
}

Snapshot read_snapshot(const std::filesystem::path& path) {
    std::ifstream is(path, std::ios::binary);
    if (!is) throw SnapshotError(SnapshotError::Kind::io, "snapshot: cannot open " + path.string());
    char magic[4];
    is.read(magic, 4);
    if (!is || std::memcmp(magic, "NSCB", 4) != 0)
        throw SnapshotError(SnapshotError::Kind::magic, "snapshot: bad magic");
    const auto version = get<std::uint32_t>(is);
    if (version != kSnapshotVersion)
        throw SnapshotError(SnapshotError::Kind::version,
                            "snapshot: unsupported version " + std::to_string(version));
    Snapshot snap;
    snap.n = get<std::uint32_t>(is);
    snap.box_length = get<double>(is);
    const auto ncomp = get<std::uint32_t>(is);
    snap.time = get<double>(is);
    const std::size_t total = static_cast<std::size_t>(snap.n) * snap.n * snap.n;
    snap.samples.assign(ncomp, std::vector<double>(total));
    for (auto& comp : snap.samples) {
        is.read(reinterpret_cast<char*>(comp.data()),
                static_cast<std::streamsize>(comp.size() * sizeof(double)));
        if (is.gcount() != static_cast<std::streamsize>(comp.size() * sizeof(double)))
            throw SnapshotError(SnapshotError::Kind::truncated, "snapshot: truncated payload");
    }
    return snap;
}

}  // namespace nscb
