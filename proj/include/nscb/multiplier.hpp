#pragma once

#include <functional>

#include "nscb/field.hpp"

namespace nscb {

// Scalar Fourier multiplier: symbol evaluated at the physical wavevector
// (kx, ky, kz). radial symbols depend on |k| only.
struct Multiplier {
    std::function<cplx(double kx, double ky, double kz)> symbol;
    bool radial = false;
};

// Spectral pointwise product; throws if the symbol is non-finite anywhere on
// the band. Hermitian symmetry is preserved when m(-k) = conj(m(k)).
Field apply_multiplier(const Field& f, const Multiplier& m);

}  // namespace nscb
