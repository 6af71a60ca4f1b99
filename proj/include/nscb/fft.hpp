#pragma once

#include <complex>
#include <cstddef>
#include <vector>

namespace nscb::fft {

// 3D complex transforms on n^3 cubes, x-fastest layout. Plans are created
// with FFTW_ESTIMATE (deterministic plan choice) and cached behind a mutex.
// forward: physical -> spectral, normalized by 1/n^3 so that a field
// sum_k c_k e^{i k.x} has coefficient c_k. backward: spectral -> physical.
void forward3(std::size_t n, const std::complex<double>* in, std::complex<double>* out);
void backward3(std::size_t n, const std::complex<double>* in, std::complex<double>* out);

// 1D helpers for the ray functional, same conventions.
void forward1(std::size_t n, const std::complex<double>* in, std::complex<double>* out);
void backward1(std::size_t n, const std::complex<double>* in, std::complex<double>* out);

}  // namespace nscb::fft
