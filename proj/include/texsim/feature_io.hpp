#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

#include "texsim/curvelet.hpp"
#include "texsim/features.hpp"
#include "texsim/image.hpp"

namespace texsim {

// One retained wedge as stored in a feature file.
struct FeatureFileWedge {
    int scale = 0;
    int orientation = 0;
    int length = 0;
    double eff_rank = 0.0;
    std::vector<double> effective;
};

// Version-1 feature file: image identity, transform parameters and the
// retained wedges in concatenation order.
struct FeatureFile {
    std::string image_path;
    int image_rows = 0;
    int image_cols = 0;
    CurveletParams params;
    std::vector<FeatureFileWedge> wedges;
};

FeatureFile make_feature_file(const std::string& image_path,
                              const CurveletDecomposition& decomposition);

void write_feature_file(const std::filesystem::path& path, const FeatureFile& file);
FeatureFile read_feature_file(const std::filesystem::path& path);

FeatureVector to_feature_vector(const FeatureFile& file);

std::string content_digest(const GrayImage& img);

// "<content digest>-<params digest>.json"
std::string cache_file_name(const GrayImage& img, const CurveletParams& params);

}  // namespace texsim
