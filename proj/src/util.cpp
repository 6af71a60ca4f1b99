#include "nscb/util.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>

namespace nscb {

std::size_t worker_count() {
    static const std::size_t cached = [] {
        std::size_t n = std::max(1u, std::thread::hardware_concurrency());
        if (const char* env = std::getenv("NSCB_THREADS")) {
            char* end = nullptr;
            const long v = std::strtol(env, &end, 10);
            if (end != env && v > 0) n = std::min<std::size_t>(n, static_cast<std::size_t>(v));
        }
        return n;
    }();
    return cached;
}

namespace {
constexpr std::size_t kChunks = 64;

struct ChunkRange {
    std::size_t lo, hi;
};

std::vector<ChunkRange> make_chunks(std::size_t begin, std::size_t end) {
    std::vector<ChunkRange> chunks;
    const std::size_t total = end - begin;
    if (total == 0) return chunks;
    const std::size_t nchunk = std::min(kChunks, total);
    chunks.reserve(nchunk);
    for (std::size_t c = 0; c < nchunk; ++c) {
        const std::size_t lo = begin + total * c / nchunk;
        const std::size_t hi = begin + total * (c + 1) / nchunk;
        if (hi > lo) chunks.push_back({lo, hi});
    }
    return chunks;
}

void run_chunks(const std::vector<ChunkRange>& chunks,
                const std::function<void(std::size_t, std::size_t, std::size_t)>& body) {
    const std::size_t workers = std::min(worker_count(), chunks.size());
    if (workers <= 1) {
        for (std::size_t c = 0; c < chunks.size(); ++c) body(c, chunks[c].lo, chunks[c].hi);
        return;
    }
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (std::size_t w = 0; w < workers; ++w) {
        pool.emplace_back([&, w] {
            for (std::size_t c = w; c < chunks.size(); c += workers)
                body(c, chunks[c].lo, chunks[c].hi);
        });
    }
    for (auto& t : pool) t.join();
}
}  // namespace

void parallel_for(std::size_t begin, std::size_t end,
                  const std::function<void(std::size_t, std::size_t)>& body) {
    run_chunks(make_chunks(begin, end),
               [&](std::size_t, std::size_t lo, std::size_t hi) { body(lo, hi); });
}

double parallel_sum(std::size_t begin, std::size_t end,
                    const std::function<double(std::size_t, std::size_t)>& chunk_sum) {
    const auto chunks = make_chunks(begin, end);
    std::vector<double> partial(chunks.size(), 0.0);
    run_chunks(chunks, [&](std::size_t c, std::size_t lo, std::size_t hi) {
        partial[c] = chunk_sum(lo, hi);
    });
    double total = 0.0;
    for (double v : partial) total += v;
    return total;
}

double phi1(double z) {
    if (std::fabs(z) < 1e-5) return 1.0 + z / 2.0 + z * z / 6.0;
    return std::expm1(z) / z;
}

double phi2(double z) {
    if (std::fabs(z) < 1e-5) return 0.5 + z / 6.0 + z * z / 24.0;
    return (std::expm1(z) - z) / (z * z);
}

}  // namespace nscb
