#pragma once

#include <complex>

namespace texsim::fft {

// In-place unnormalized 2-D DFT of a row-major rows x cols buffer.
// sign = -1: X[k] = sum_n x[n] exp(-2*pi*i*<n,k>/N)
// sign = +1: the unnormalized inverse (no 1/N factor).
// Thread-safe; plans are cached internally per (rows, cols, sign).
void dft2(std::complex<double>* data, int rows, int cols, int sign);

}  // namespace texsim::fft
