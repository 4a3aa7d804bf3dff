#include "acseg/core/palette.hpp"

#include <set>

namespace acseg {

ClassPalette::ClassPalette(std::vector<PaletteEntry> entries) : entries_(std::move(entries)) {
  const int c = static_cast<int>(entries_.size());
  if (c == 0) throw DataError("EmptyPalette", "palette needs at least one class");
  std::vector<bool> seen(c, false);
  std::set<Rgb> colors;
  for (const auto& e : entries_) {
    if (e.class_index < 0 || e.class_index >= c)
      throw DataError("BadPalette", "class index " + std::to_string(e.class_index) +
                                        " outside 0.." + std::to_string(c - 1));
    if (seen[e.class_index])
      throw DataError("BadPalette", "duplicate class index " + std::to_string(e.class_index));
    seen[e.class_index] = true;
    if (!colors.insert(e.rgb).second)
      throw DataError("BadPalette", "duplicate color for class " + e.name);
  }
  // Normalize storage order to class index order.
  std::vector<PaletteEntry> ordered(c);
  for (const auto& e : entries_) ordered[e.class_index] = e;
  entries_ = std::move(ordered);
}

int ClassPalette::class_of_color(Rgb rgb) const {
  for (const auto& e : entries_)
    if (e.rgb == rgb) return e.class_index;
  return -1;
}

bool ClassPalette::operator==(const ClassPalette& other) const {
  if (entries_.size() != other.entries_.size()) return false;
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    if (entries_[i].class_index != other.entries_[i].class_index) return false;
    if (entries_[i].rgb != other.entries_[i].rgb) return false;
    if (entries_[i].name != other.entries_[i].name) return false;
  }
  return true;
}

}  // namespace acseg
