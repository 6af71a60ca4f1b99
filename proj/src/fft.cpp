#include "nscb/fft.hpp"

#include <fftw3.h>

#include <map>
#include <mutex>

namespace nscb::fft {

namespace {

std::mutex plan_mutex;

fftw_plan get_plan3(std::size_t n, int sign) {
    static std::map<std::pair<std::size_t, int>, fftw_plan> cache;
    std::lock_guard<std::mutex> lock(plan_mutex);
    const auto key = std::make_pair(n, sign);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;
    std::vector<std::complex<double>> scratch(n * n * n);
    auto* p = reinterpret_cast<fftw_complex*>(scratch.data());
    // FFTW_UNALIGNED: plans are reused on arbitrary std::vector storage.
    fftw_plan plan = fftw_plan_dft_3d(static_cast<int>(n), static_cast<int>(n), static_cast<int>(n),
                                      p, p, sign, FFTW_ESTIMATE | FFTW_UNALIGNED);
    cache.emplace(key, plan);
    return plan;
}

fftw_plan get_plan1(std::size_t n, int sign) {
    static std::map<std::pair<std::size_t, int>, fftw_plan> cache;
    std::lock_guard<std::mutex> lock(plan_mutex);
    const auto key = std::make_pair(n, sign);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;
    std::vector<std::complex<double>> scratch(n);
    auto* p = reinterpret_cast<fftw_complex*>(scratch.data());
    fftw_plan plan = fftw_plan_dft_1d(static_cast<int>(n), p, p, sign,
                                      FFTW_ESTIMATE | FFTW_UNALIGNED);
    cache.emplace(key, plan);
    return plan;
}

void execute(fftw_plan plan, const std::complex<double>* in, std::complex<double>* out) {
    fftw_execute_dft(plan,
                     reinterpret_cast<fftw_complex*>(const_cast<std::complex<double>*>(in)),
                     reinterpret_cast<fftw_complex*>(out));
}

}  // namespace

void forward3(std::size_t n, const std::complex<double>* in, std::complex<double>* out) {
    execute(get_plan3(n, FFTW_FORWARD), in, out);
    const double scale = 1.0 / static_cast<double>(n * n * n);
    const std::size_t total = n * n * n;
    for (std::size_t i = 0; i < total; ++i) out[i] *= scale;
}

void backward3(std::size_t n, const std::complex<double>* in, std::complex<double>* out) {
    execute(get_plan3(n, FFTW_BACKWARD), in, out);
}

void forward1(std::size_t n, const std::complex<double>* in, std::complex<double>* out) {
    execute(get_plan1(n, FFTW_FORWARD), in, out);
    const double scale = 1.0 / static_cast<double>(n);
    for (std::size_t i = 0; i < n; ++i) out[i] *= scale;
}

void backward1(std::size_t n, const std::complex<double>* in, std::complex<double>* out) {
    execute(get_plan1(n, FFTW_BACKWARD), in, out);
}

}  // namespace nscb::fft
