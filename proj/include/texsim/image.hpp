#pragma once

#include <vector>

#include "texsim/matrix.hpp"

namespace texsim {

// Grayscale image, row-major intensities in [0, 1].
struct GrayImage {
    int rows = 0;
    int cols = 0;
    std::vector<double> pixels;

    GrayImage() = default;
    GrayImage(int r, int c, double fill = 0.0)
        : rows(r), cols(c), pixels(static_cast<size_t>(r) * static_cast<size_t>(c), fill) {}

    double& at(int r, int c) { return pixels[static_cast<size_t>(r) * cols + c]; }
    double at(int r, int c) const { return pixels[static_cast<size_t>(r) * cols + c]; }
    size_t size() const { return pixels.size(); }
};

// Planar RGB image; each channel shares the layout of GrayImage.
struct RgbImage {
    int rows = 0;
    int cols = 0;
    std::vector<double> r, g, b;
};

// Checks the GrayImage invariants: pixel count matches rows*cols, all values
// finite and within [0, 1]. Throws dimension_error or numeric_error.
void validate(const GrayImage& img);

RealMatrix as_matrix(const GrayImage& img);

}  // namespace texsim
