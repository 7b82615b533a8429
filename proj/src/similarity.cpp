#include "texsim/similarity.hpp"

#include <cmath>

#include "texsim/errors.hpp"

namespace texsim {

SimilarityScore czekanowski(const FeatureVector& a, const FeatureVector& b) {
    if (!same_layout(a, b))
        throw incompatibility_error("feature vectors have different layouts or parameters");
    double diff = 0.0, sum = 0.0;
    for (size_t i = 0; i < a.values.size(); ++i) {
        diff += std::fabs(a.values[i] - b.values[i]);
        sum += a.values[i] + b.values[i];
    }
    // Two all-zero vectors describe identical featureless images.
    double value = sum > 0.0 ? 1.0 - diff / sum : 1.0;
    return {value, ScoreKind::similarity};
}

SimilarityScore mse(const GrayImage& a, const GrayImage& b) {
    if (a.rows != b.rows || a.cols != b.cols)
        throw incompatibility_error("images have different dimensions");
    double sum = 0.0;
    for (size_t i = 0; i < a.pixels.size(); ++i) {
        double d = a.pixels[i] - b.pixels[i];
        sum += d * d;
    }
    return {sum / static_cast<double>(a.pixels.size()), ScoreKind::distance};
}

}  // namespace texsim
