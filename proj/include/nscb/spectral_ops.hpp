#pragma once

#include "nscb/field.hpp"
#include "nscb/multiplier.hpp"

namespace nscb {

// Leray projection P = Id - k k^T / |k|^2 per mode; the zero mode passes
// through unchanged.
Field leray_project(const Field& f);

// e^{t Laplacian}: every mode scaled by exp(-|k|^2 t). t >= 0.
Field heat_semigroup(const Field& f, double t);

// |D|^{-sigma} for 0 < sigma < 3; the zero mode is annihilated.
Field riesz_potential(const Field& f, double sigma);

// Spectral differentiation.
Field derivative(const Field& f, std::size_t axis);
Field curl(const Field& f);
Field divergence(const Field& f);
// All nine first derivatives d_i u_j of a vector field, as a tensor field.
Field gradient_tensor(const Field& f);

// Divergence of a rank-2 tensor, contracting the second index:
// out_i = sum_j d_j T_ij. With T = a (x) b (T_ij = a_i b_j) and div b = 0
// this is the advective term b . grad a.
Field tensor_divergence(const Field& t);

// Max spectral divergence magnitude |k . u_hat| over modes.
double spectral_divergence_sup(const Field& f);

// lambda = 2 dilation u -> lambda u(lambda x) realized on the half-size box:
// same index layout, doubled coefficients, box_length halved. Exact for
// band-interior fields.
Field dilate_half_box(const Field& f);

}  // namespace nscb
