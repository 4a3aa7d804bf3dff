#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "acseg/core/errors.hpp"
#include "acseg/core/image.hpp"

namespace acseg {

struct PaletteEntry {
  int class_index = 0;
  Rgb rgb{0, 0, 0};
  std::string name;
};

// Ordered class palette. Indices are exactly 0..C-1, colors pairwise distinct.
class ClassPalette {
 public:
  ClassPalette() = default;
  explicit ClassPalette(std::vector<PaletteEntry> entries);

  int num_classes() const { return static_cast<int>(entries_.size()); }
  const PaletteEntry& entry(int c) const { return entries_.at(c); }
  const std::vector<PaletteEntry>& entries() const { return entries_; }

  // -1 when the color is not in the palette.
  int class_of_color(Rgb rgb) const;
  Rgb color_of_class(int c) const { return entries_.at(c).rgb; }

  bool operator==(const ClassPalette& other) const;

 private:
  std::vector<PaletteEntry> entries_;
};

}  // namespace acseg
