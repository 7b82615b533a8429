#pragma once

#include <optional>
#include <vector>

#include "texsim/image.hpp"
#include "texsim/matrix.hpp"

namespace texsim {

// Parameters of the discrete curvelet transform for a fixed image size.
//
// Scale 1 is the undirected low-pass square, scale `scales` the undirected
// high-pass corona. Directional scales j = 2..scales-1 carry
// K(j) = angles_coarse * 2^ceil((j-2)/2) wedges, doubling every other scale
// toward the fine end. angles_coarse must be a positive multiple of 4 so the
// wedges align with the quadrants of the frequency square.
struct CurveletParams {
    int rows = 0;
    int cols = 0;
    int scales = 0;
    int angles_coarse = 0;
};

// Defaults: scales = max(3, ceil(log2(min(rows, cols))) - 3), angles_coarse = 16.
// Throws parameter_error if min(rows, cols) < 32 or the request is infeasible
// for the image size.
CurveletParams make_params(int rows, int cols, std::optional<int> scales = {},
                           std::optional<int> angles_coarse = {});

// K(j) for 1 <= j <= scales; the undirected scales report 1.
int orientation_count(const CurveletParams& params, int scale);

struct WedgeCoefficients {
    int scale = 0;
    int orientation = 0;
    ComplexMatrix coeffs;
};

struct CurveletDecomposition {
    CurveletParams params;
    int image_rows = 0;
    int image_cols = 0;
    // Fixed order: (1,1), (2,1..K(2)), ..., (scales-1,1..K(scales-1)), (scales,1).
    std::vector<WedgeCoefficients> wedges;

    // Throws structure_error for an unknown (scale, orientation).
    const ComplexMatrix& wedge(int scale, int orientation) const;
};

// Forward transform: centered unitary FFT, smooth frequency windows U_{j,k}
// with sum of squares identically 1, periodization of each windowed wedge into
// the smallest even rectangle covering its support, unitary inverse FFT per
// wedge. The resulting frame is tight: total coefficient energy equals the
// image energy and `inverse` reconstructs exactly (up to round-off).
CurveletDecomposition forward(const RealMatrix& image, const CurveletParams& params);
CurveletDecomposition forward(const GrayImage& image, const CurveletParams& params);

// Adjoint of forward; exact inverse thanks to the tight-frame normalization.
RealMatrix inverse(const CurveletDecomposition& decomposition);

struct WedgeEnergy {
    int scale = 0;
    int orientation = 0;
    int rows = 0;
    int cols = 0;
    double energy = 0.0;
};

std::vector<WedgeEnergy> wedge_energies(const CurveletDecomposition& decomposition);

}  // namespace texsim
