#include "nscb/rng.hpp"

#include <cmath>

namespace nscb {

double CounterRng::gaussian(std::uint64_t index) const {
    const double u1 = uniform(2 * index);
    const double u2 = uniform(2 * index + 1);
    const double r = std::sqrt(-2.0 * std::log(1.0 - u1));
    return r * std::cos(2.0 * M_PI * u2);
}

}  // namespace nscb
