#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "acseg/core/errors.hpp"
#include "acseg/core/image.hpp"

namespace acseg {

using Vec3 = std::array<double, 3>;

inline Vec3 operator-(const Vec3& a, const Vec3& b) {
  return {a[0] - b[0], a[1] - b[1], a[2] - b[2]};
}
inline double dot(const Vec3& a, const Vec3& b) {
  return a[0] * b[0] + a[1] * b[1] + a[2] * b[2];
}
inline Vec3 cross(const Vec3& a, const Vec3& b) {
  return {a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]};
}
double norm(const Vec3& a);
Vec3 normalized(const Vec3& a);

// Colored point set with optional labels and unit normals. Coordinates in meters,
// gravity along -z by input convention.
struct PointCloud {
  std::vector<Vec3> points;
  std::vector<Rgb> colors;
  std::vector<std::int32_t> labels;  // optional (empty or one per point)
  std::vector<Vec3> normals;         // optional (empty or one per point, unit norm)

  int size() const { return static_cast<int>(points.size()); }
  bool has_labels() const { return !labels.empty(); }
  bool has_normals() const { return !normals.empty(); }

  void validate() const;
};

}  // namespace acseg
