#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "acseg/core/errors.hpp"

namespace acseg {

using Rgb = std::array<std::uint8_t, 3>;

// 8-bit RGB raster, row-major, interleaved channels.
class Image {
 public:
  Image() = default;
  Image(int width, int height, Rgb fill = {0, 0, 0})
      : width_(width), height_(height), data_(static_cast<std::size_t>(width) * height * 3) {
    if (width < 1 || height < 1)
      throw DataError("BadImageSize", "image dimensions must be positive");
    for (int i = 0; i < width * height; ++i) set_index(i, fill);
  }

  int width() const { return width_; }
  int height() const { return height_; }
  int pixel_count() const { return width_ * height_; }

  Rgb at(int x, int y) const {
    const std::size_t o = offset(x, y);
    return {data_[o], data_[o + 1], data_[o + 2]};
  }
  void set(int x, int y, Rgb c) {
    const std::size_t o = offset(x, y);
    data_[o] = c[0];
    data_[o + 1] = c[1];
    data_[o + 2] = c[2];
  }
  void set_index(int i, Rgb c) {
    const std::size_t o = static_cast<std::size_t>(i) * 3;
    data_[o] = c[0];
    data_[o + 1] = c[1];
    data_[o + 2] = c[2];
  }
  Rgb at_index(int i) const {
    const std::size_t o = static_cast<std::size_t>(i) * 3;
    return {data_[o], data_[o + 1], data_[o + 2]};
  }

  const std::vector<std::uint8_t>& data() const { return data_; }
  std::vector<std::uint8_t>& data() { return data_; }

 private:
  std::size_t offset(int x, int y) const {
    return (static_cast<std::size_t>(y) * width_ + x) * 3;
  }
  int width_ = 0;
  int height_ = 0;
  std::vector<std::uint8_t> data_;
};

}  // namespace acseg
