#include "nscb/grid.hpp"

#include "nscb/util.hpp"

namespace nscb {

Grid make_grid(std::size_t n, double box_length, double dealias_fraction) {
    if (!is_power_of_two(n) || n < 16)
        throw std::invalid_argument("make_grid: n must be a power of two >= 16");
    if (!(box_length > 0.0))
        throw std::invalid_argument("make_grid: box_length must be positive");
    if (!(dealias_fraction > 0.0) || dealias_fraction > 1.0)
        throw std::invalid_argument("make_grid: dealias_fraction must lie in (0, 1]");
    return Grid{n, box_length, dealias_fraction};
}

}  // namespace nscb
