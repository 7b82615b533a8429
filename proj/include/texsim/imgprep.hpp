#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include "texsim/image.hpp"

namespace texsim {

// One prepared image of a retrieval dataset.
struct DatasetEntry {
    int class_id = 0;
    int sample_id = 0;
    std::string file;
};

// C classes with S samples each; entries.size() == C * S.
struct DatasetLayout {
    int class_count = 0;
    int samples_per_class = 0;
    std::vector<DatasetEntry> entries;
};

// Throws config_error if the layout is inconsistent (wrong entry count or an
// uneven number of samples in some class).
void validate(const DatasetLayout& layout);

// Rec. 601 luminance: Y = 0.299 R + 0.587 G + 0.114 B.
// Throws dimension_error when the channel planes disagree in shape.
GrayImage to_luminance(const RgbImage& rgb);

GrayImage crop(const GrayImage& img, int row0, int col0, int rows, int cols);

// Non-overlapping box average by an integer factor in both axes.
GrayImage box_downsample(const GrayImage& img, int factor);

// CUReT recipe: central 256x256 crop, split into four 128x128 patches in
// row-major order, keep the first three.
std::vector<GrayImage> prepare_curet(const GrayImage& img);

// PerTex recipe: input must downsample by 4 to exactly 256x256 (box average),
// then the four 128x128 quadrants are returned in row-major order.
std::vector<GrayImage> prepare_pertex(const GrayImage& img);

// manifest.json (version 1) describing a prepared dataset directory.
void write_manifest(const DatasetLayout& layout, const std::filesystem::path& path);
DatasetLayout read_manifest(const std::filesystem::path& path);

}  // namespace texsim
