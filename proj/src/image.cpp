#include "texsim/image.hpp"

#include <cmath>

#include "texsim/errors.hpp"

namespace texsim {

void validate(const GrayImage& img) {
    if (img.rows <= 0 || img.cols <= 0)
        throw dimension_error("image dimensions must be positive");
    if (img.pixels.size() != static_cast<size_t>(img.rows) * static_cast<size_t>(img.cols))
        throw dimension_error("pixel count does not match rows*cols");
    for (double v : img.pixels) {
        if (!std::isfinite(v)) throw numeric_error("image contains non-finite pixel");
        if (v < 0.0 || v > 1.0) throw numeric_error("pixel value outside [0, 1]");
    }
}

RealMatrix as_matrix(const GrayImage& img) {
    RealMatrix m(img.rows, img.cols);
    m.data = img.pixels;
    return m;
}

}  // namespace texsim
