#include "texsim/fft.hpp"

#include <fftw3.h>

#include <map>
#include <mutex>
#include <tuple>
#include <vector>

namespace texsim::fft {

namespace {

// FFTW planning is not thread-safe; execution on distinct buffers is. Plans
// are created once per (rows, cols, sign) with FFTW_ESTIMATE (deterministic
// plan choice) and FFTW_UNALIGNED so they can run on any caller buffer.
std::mutex plan_mutex;
std::map<std::tuple<int, int, int>, fftw_plan>& plan_cache() {
    static std::map<std::tuple<int, int, int>, fftw_plan> cache;
    return cache;
}

fftw_plan get_plan(int rows, int cols, int sign) {
    std::lock_guard<std::mutex> lock(plan_mutex);
    auto key = std::make_tuple(rows, cols, sign);
    auto& cache = plan_cache();
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;

    std::vector<std::complex<double>> scratch(static_cast<size_t>(rows) * cols);
    auto* buf = reinterpret_cast<fftw_complex*>(scratch.data());
    fftw_plan plan = fftw_plan_dft_2d(rows, cols, buf, buf,
                                      sign < 0 ? FFTW_FORWARD : FFTW_BACKWARD,
                                      FFTW_ESTIMATE | FFTW_UNALIGNED);
    cache.emplace(key, plan);
    return plan;
}

}  // namespace

void dft2(std::complex<double>* data, int rows, int cols, int sign) {
    fftw_plan plan = get_plan(rows, cols, sign);
    auto* buf = reinterpret_cast<fftw_complex*>(data);
    fftw_execute_dft(plan, buf, buf);
}

}  // namespace texsim::fft
