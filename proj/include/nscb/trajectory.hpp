#pragma once

#include <stdexcept>
#include <vector>

#include "nscb/field.hpp"

namespace nscb {

// Sampled time series of fields on a shared grid.
struct Trajectory {
    std::vector<double> times;
    std::vector<Field> fields;

    std::size_t size() const { return times.size(); }
    bool empty() const { return times.empty(); }

    const Grid& grid() const {
        if (fields.empty()) throw std::runtime_error("Trajectory: empty");
        return fields.front().grid();
    }

    void push(double t, Field f) {
        if (!times.empty()) {
            if (t <= times.back()) throw std::invalid_argument("Trajectory: times must increase");
            if (!(f.grid() == fields.front().grid()))
                throw std::invalid_argument("Trajectory: grid mismatch");
        }
        times.push_back(t);
        fields.push_back(std::move(f));
    }
};

}  // namespace nscb
