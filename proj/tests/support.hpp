#pragma once

// Deterministic synthetic inputs shared by the unit and acceptance tests.

#include <cmath>
#include <random>

#include "texsim/image.hpp"
#include "texsim/matrix.hpp"

namespace testsupport {

inline texsim::GrayImage random_image(int rows, int cols, uint32_t seed) {
    std::mt19937 rng(seed);
    std::uniform_real_distribution<double> dist(0.0, 1.0);
    texsim::GrayImage img(rows, cols);
    for (auto& v : img.pixels) v = dist(rng);
    return img;
}

inline texsim::RealMatrix random_matrix(int rows, int cols, uint32_t seed, double lo = -1.0,
                                        double hi = 1.0) {
    std::mt19937 rng(seed);
    std::uniform_real_distribution<double> dist(lo, hi);
    texsim::RealMatrix m(rows, cols);
    for (auto& v : m.data) v = dist(rng);
    return m;
}

inline texsim::ComplexMatrix random_complex_matrix(int rows, int cols, uint32_t seed) {
    std::mt19937 rng(seed);
    std::uniform_real_distribution<double> dist(-1.0, 1.0);
    texsim::ComplexMatrix m(rows, cols);
    for (auto& v : m.data) v = {dist(rng), dist(rng)};
    return m;
}

// Oriented sinusoidal grating with additive Gaussian noise, clamped to [0, 1].
// freq is in cycles per image width; theta is the wave direction in radians.
inline texsim::GrayImage grating(int n, double freq, double theta, double phase,
                                 double noise_sigma, std::mt19937& rng,
                                 double amplitude = 0.35) {
    std::normal_distribution<double> noise(0.0, noise_sigma);
    texsim::GrayImage img(n, n);
    const double two_pi = 2.0 * 3.14159265358979323846;
    double kx = std::cos(theta) * freq / n;
    double ky = std::sin(theta) * freq / n;
    for (int r = 0; r < n; ++r) {
        for (int c = 0; c < n; ++c) {
            double v = 0.5 + amplitude * std::sin(two_pi * (kx * c + ky * r) + phase);
            if (noise_sigma > 0.0) v += noise(rng);
            img.at(r, c) = std::min(1.0, std::max(0.0, v));
        }
    }
    return img;
}

inline double rel_l2_error(const texsim::RealMatrix& a, const texsim::RealMatrix& b) {
    double num = 0.0, den = 0.0;
    for (size_t i = 0; i < a.data.size(); ++i) {
        double d = a.data[i] - b.data[i];
        num += d * d;
        den += b.data[i] * b.data[i];
    }
    return std::sqrt(num / den);
}

}  // namespace testsupport
