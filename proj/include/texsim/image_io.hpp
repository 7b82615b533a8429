#pragma once

#include <filesystem>

#include "texsim/image.hpp"

namespace texsim {

// Decodes a PNG or BMP file (sniffed by magic bytes). 8-bit samples are mapped
// to [0, 1] by dividing by 255; 16-bit PNGs are reduced to 8 bits first.
// Grayscale files load directly; color files go through to_luminance.
GrayImage load_gray(const std::filesystem::path& path);

RgbImage load_rgb(const std::filesystem::path& path);

// Writes an 8-bit grayscale PNG; pixels are rounded from [0, 1] to 0..255.
void save_png_gray(const std::filesystem::path& path, const GrayImage& img);

// Writes an 8-bit RGB PNG.
void save_png_rgb(const std::filesystem::path& path, const RgbImage& img);

bool has_image_extension(const std::filesystem::path& path);

}  // namespace texsim
