#include "acseg/core/label_grid.hpp"

#include <algorithm>
#include <string>

#include "acseg/core/errors.hpp"

namespace acseg {

void LabelGrid::validate(int num_classes) const {
  if (static_cast<int>(labels.size()) != width * height)
    throw InternalError("BadLabelGrid", "label count does not match dimensions");
  if (!ignore.empty() && ignore.size() != labels.size())
    throw InternalError("BadLabelGrid", "ignore mask size does not match dimensions");
  for (int i = 0; i < pixel_count(); ++i) {
    if (is_ignored(i)) continue;
    if (labels[i] < 0 || labels[i] >= num_classes)
      throw InternalError("BadLabelGrid", "label " + std::to_string(labels[i]) +
                                              " outside 0.." + std::to_string(num_classes - 1));
  }
}

LabelGrid encode_labels(const Image& raster, const ClassPalette& palette,
                        const std::vector<Rgb>& ignore_colors) {
  LabelGrid grid;
  grid.width = raster.width();
  grid.height = raster.height();
  grid.labels.assign(grid.pixel_count(), 0);
  bool any_ignored = false;
  std::vector<std::uint8_t> mask(grid.pixel_count(), 0);
  for (int y = 0; y < grid.height; ++y) {
    for (int x = 0; x < grid.width; ++x) {
      const int i = y * grid.width + x;
      const Rgb c = raster.at(x, y);
      const int cls = palette.class_of_color(c);
      if (cls >= 0) {
        grid.labels[i] = cls;
        continue;
      }
      if (std::find(ignore_colors.begin(), ignore_colors.end(), c) != ignore_colors.end()) {
        mask[i] = 1;
        any_ignored = true;
        continue;
      }
      throw DataError("UnknownColor", "pixel (" + std::to_string(x) + "," + std::to_string(y) +
                                          ") has color rgb(" + std::to_string(c[0]) + "," +
                                          std::to_string(c[1]) + "," + std::to_string(c[2]) +
                                          ") not in palette");
    }
  }
  if (any_ignored) grid.ignore = std::move(mask);
  return grid;
}

Image render_labels(const LabelGrid& grid, const ClassPalette& palette, Rgb ignore_color) {
  Image out(grid.width, grid.height);
  for (int i = 0; i < grid.pixel_count(); ++i)
    out.set_index(i, grid.is_ignored(i) ? ignore_color : palette.color_of_class(grid.labels[i]));
  return out;
}

}  // namespace acseg
