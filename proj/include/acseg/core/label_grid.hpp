#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "acseg/core/image.hpp"
#include "acseg/core/palette.hpp"

namespace acseg {

// Per-pixel class indices with an optional ignore mask. Ignored pixels take no
// part in training or metrics.
struct LabelGrid {
  int width = 0;
  int height = 0;
  std::vector<std::int32_t> labels;     // row-major, size width*height
  std::vector<std::uint8_t> ignore;     // empty, or width*height flags (1 = ignore)

  int pixel_count() const { return width * height; }
  bool is_ignored(int i) const { return !ignore.empty() && ignore[i] != 0; }
  std::int32_t at(int x, int y) const { return labels[static_cast<std::size_t>(y) * width + x]; }

  void validate(int num_classes) const;
};

// Decode a color raster into class indices via the palette. Colors listed in
// ignore_colors become masked pixels; any other unknown color is an error.
LabelGrid encode_labels(const Image& raster, const ClassPalette& palette,
                        const std::vector<Rgb>& ignore_colors = {});

// Render class indices back to palette colors. Ignored pixels take ignore_color.
Image render_labels(const LabelGrid& grid, const ClassPalette& palette,
                    Rgb ignore_color = {0, 0, 0});

}  // namespace acseg
