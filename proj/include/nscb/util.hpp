#pragma once

#include <cstddef>
#include <functional>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

namespace nscb {

// Worker count: hardware concurrency, capped by the NSCB_THREADS environment
// variable when set.
std::size_t worker_count();

// Chunked parallel loop over [begin, end). Chunking is fixed (independent of
// the worker count), so per-chunk reductions combined in chunk order are
// deterministic.
void parallel_for(std::size_t begin, std::size_t end,
                  const std::function<void(std::size_t, std::size_t)>& body);

// Deterministic parallel sum: body fills one partial per chunk; partials are
// added in chunk order.
double parallel_sum(std::size_t begin, std::size_t end,
                    const std::function<double(std::size_t, std::size_t)>& chunk_sum);

inline bool is_power_of_two(std::size_t v) { return v != 0 && (v & (v - 1)) == 0; }

// Exponential-integrator weights, stable through z = 0.
// phi1(z) = (e^z - 1)/z, phi2(z) = (e^z - z - 1)/z^2.
double phi1(double z);
double phi2(double z);

}  // namespace nscb
