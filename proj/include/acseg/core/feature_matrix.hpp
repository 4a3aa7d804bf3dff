#pragma once

#include <string>
#include <vector>

#include "acseg/core/errors.hpp"
#include "acseg/core/prob_map.hpp"

namespace acseg {

// Dense per-element feature vectors with a named channel layout.
// Row-major: element index major, channel minor. Values are finite floats.
class FeatureMatrix {
 public:
  FeatureMatrix() = default;
  FeatureMatrix(Geometry geometry, std::vector<std::string> channel_names)
      : geometry_(geometry),
        channel_names_(std::move(channel_names)),
        values_(static_cast<std::size_t>(geometry.count) * channel_names_.size(), 0.0f) {}

  int element_count() const { return geometry_.count; }
  int dim() const { return static_cast<int>(channel_names_.size()); }
  const Geometry& geometry() const { return geometry_; }
  const std::vector<std::string>& channel_names() const { return channel_names_; }

  float at(int element, int channel) const {
    return values_[static_cast<std::size_t>(element) * dim() + channel];
  }
  float& at(int element, int channel) {
    return values_[static_cast<std::size_t>(element) * dim() + channel];
  }
  const float* row(int element) const {
    return values_.data() + static_cast<std::size_t>(element) * dim();
  }
  float* row(int element) { return values_.data() + static_cast<std::size_t>(element) * dim(); }
  const std::vector<float>& values() const { return values_; }
  std::vector<float>& values() { return values_; }

  // Channel-wise concatenation; geometries must match.
  static FeatureMatrix concat(const FeatureMatrix& a, const FeatureMatrix& b);

  // Throws on NaN/Inf entries or duplicate channel names.
  void validate() const;

 private:
  Geometry geometry_;
  std::vector<std::string> channel_names_;
  std::vector<float> values_;
};

}  // namespace acseg
