#pragma once

#include "texsim/features.hpp"
#include "texsim/image.hpp"

namespace texsim {

enum class ScoreKind { similarity, distance };

// Similarity scores lie in [0, 1] (1 = identical); distances are >= 0
// (0 = identical). The kind tells the retrieval harness the sort direction.
struct SimilarityScore {
    double value = 0.0;
    ScoreKind kind = ScoreKind::similarity;
};

// Czekanowski similarity: 1 - |v1 - v2|_1 / |v1 + v2|_1, defined as 1 when
// both vectors are all-zero. Throws incompatibility_error on layout or
// parameter-digest mismatch.
SimilarityScore czekanowski(const FeatureVector& a, const FeatureVector& b);

// Mean squared pixel difference (distance kind). Throws incompatibility_error
// on size mismatch.
SimilarityScore mse(const GrayImage& a, const GrayImage& b);

}  // namespace texsim
