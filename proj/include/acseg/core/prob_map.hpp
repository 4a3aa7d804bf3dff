#pragma once

#include <cstdint>
#include <vector>

#include "acseg/core/errors.hpp"
#include "acseg/core/label_grid.hpp"

namespace acseg {

// Geometry provenance of a per-element container: an image grid or a point set.
struct Geometry {
  enum class Kind { Grid, Points };
  Kind kind = Kind::Points;
  int width = 0;   // Grid only
  int height = 0;  // Grid only
  int count = 0;   // element count (width*height for grids)

  static Geometry grid(int width, int height) {
    return {Kind::Grid, width, height, width * height};
  }
  static Geometry points(int n) { return {Kind::Points, 0, 0, n}; }
  bool operator==(const Geometry&) const = default;
};

// Per-element class distributions. Rows sum to 1 (within 1e-6), entries in [0,1].
class ProbMap {
 public:
  ProbMap() = default;
  ProbMap(Geometry geometry, int num_classes)
      : geometry_(geometry),
        num_classes_(num_classes),
        probs_(static_cast<std::size_t>(geometry.count) * num_classes, 0.0) {}

  int element_count() const { return geometry_.count; }
  int num_classes() const { return num_classes_; }
  const Geometry& geometry() const { return geometry_; }

  double at(int element, int c) const {
    return probs_[static_cast<std::size_t>(element) * num_classes_ + c];
  }
  double& at(int element, int c) {
    return probs_[static_cast<std::size_t>(element) * num_classes_ + c];
  }
  const double* row(int element) const {
    return probs_.data() + static_cast<std::size_t>(element) * num_classes_;
  }
  double* row(int element) {
    return probs_.data() + static_cast<std::size_t>(element) * num_classes_;
  }
  const std::vector<double>& values() const { return probs_; }
  std::vector<double>& values() { return probs_; }

  // Throws InternalError when a row is outside tolerance.
  void validate() const;

 private:
  Geometry geometry_;
  int num_classes_ = 0;
  std::vector<double> probs_;
};

// Per-element argmax; ties break toward the lowest class index. Grid geometry
// yields a LabelGrid-shaped result, point geometry a flat label vector either way.
std::vector<std::int32_t> map_labeling(const ProbMap& p);

// Convenience wrapper for grid maps.
LabelGrid map_labeling_grid(const ProbMap& p);

}  // namespace acseg
