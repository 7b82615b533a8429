#pragma once

#include <string>
#include <vector>

#include "texsim/curvelet.hpp"
#include "texsim/matrix.hpp"

namespace texsim {

// Singular values of a complex matrix, sorted descending; length min(rows, cols).
// Throws numeric_error on non-finite entries.
std::vector<double> singular_values(const ComplexMatrix& m);

// p_k = sigma_k / ||sigma||_1. Throws zero_spectrum_error when the spectrum is
// all zero; effective_rank maps that case to q = 0.
std::vector<double> sv_distribution(const std::vector<double>& sv);

// exp of the entropy of the singular value distribution (natural log,
// 0 log 0 = 0). Values below 1e-12 * sigma_1 are treated as zero first.
// Returns 0 for an all-zero spectrum, otherwise a value in [1, L] that equals
// L exactly iff all singular values are equal.
double effective_rank(const std::vector<double>& sv);

// Keeps the first floor(q) values, zeroes the rest; output length = input length.
std::vector<double> truncate_to_effective(const std::vector<double>& sv, double q);

// Per-wedge spectrum: raw singular values, effective rank and the truncated
// ("effective") singular values.
struct WedgeSpectrum {
    int scale = 0;
    int orientation = 0;
    std::vector<double> singular;
    double eff_rank = 0.0;
    std::vector<double> effective;
};

WedgeSpectrum analyze_wedge(int scale, int orientation, const ComplexMatrix& coeffs);

struct FeatureBlock {
    int scale = 0;
    int orientation = 0;
    int length = 0;

    friend bool operator==(const FeatureBlock&, const FeatureBlock&) = default;
};

// Concatenation of effective singular values over the coarsest wedge, the
// first K(j)/2 orientations of each directional scale, and the finest wedge,
// in scale-major order. params_digest binds the vector to the image size and
// transform parameters; vectors with different digests are not comparable.
struct FeatureVector {
    std::vector<FeatureBlock> layout;
    std::vector<double> values;
    std::string params_digest;
};

FeatureVector extract_features(const CurveletDecomposition& decomposition);

std::string params_digest(const CurveletParams& params);

bool same_layout(const FeatureVector& a, const FeatureVector& b);

}  // namespace texsim
