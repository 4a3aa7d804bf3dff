#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include "acseg/core/image.hpp"
#include "acseg/core/palette.hpp"
#include "acseg/core/point_cloud.hpp"
#include "acseg/core/prob_map.hpp"

namespace acseg {

// Binary PPM (P6, maxval 255). The lossless 8-bit RGB raster format used for
// images and label rasters throughout.
Image read_ppm(const std::filesystem::path& path);
void write_ppm(const std::filesystem::path& path, const Image& image);

// Palette text file: one entry per line, "index R G B name". '#' comments allowed.
ClassPalette read_palette(const std::filesystem::path& path);
void write_palette(const std::filesystem::path& path, const ClassPalette& palette);

// ASCII PLY with per-vertex x y z red green blue [label] [nx ny nz].
PointCloud read_ply(const std::filesystem::path& path);
void write_ply(const std::filesystem::path& path, const PointCloud& cloud);

// Single-channel float raster, the extra-channel hook format.
// Layout: magic "ACSEGCH1", uint32 width, uint32 height, float32 row-major.
std::vector<float> read_channel_raster(const std::filesystem::path& path, int& width, int& height);
void write_channel_raster(const std::filesystem::path& path, int width, int height,
                          const std::vector<float>& values);

// Probability map dump. Layout: magic "ACSEGPM1", uint8 geometry kind
// (0 grid, 1 points), int32 width, height, count, num_classes, float64 rows.
ProbMap read_prob_map(const std::filesystem::path& path);
void write_prob_map(const std::filesystem::path& path, const ProbMap& p);

}  // namespace acseg
