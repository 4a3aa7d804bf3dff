#include "acseg/core/point_cloud.hpp"

#include <cmath>
#include <string>

namespace acseg {

double norm(const Vec3& a) { return std::sqrt(dot(a, a)); }

Vec3 normalized(const Vec3& a) {
  const double n = norm(a);
  if (n == 0.0) throw InternalError("ZeroVector", "cannot normalize zero vector");
  return {a[0] / n, a[1] / n, a[2] / n};
}

void PointCloud::validate() const {
  if (points.empty()) throw DataError("EmptyCloud", "point cloud needs at least one point");
  if (colors.size() != points.size())
    throw DataError("BadCloud", "color count does not match point count");
  if (!labels.empty() && labels.size() != points.size())
    throw DataError("BadCloud", "label count does not match point count");
  if (!normals.empty()) {
    if (normals.size() != points.size())
      throw DataError("BadCloud", "normal count does not match point count");
    for (std::size_t i = 0; i < normals.size(); ++i)
      if (std::abs(norm(normals[i]) - 1.0) > 1e-6)
        throw DataError("BadCloud", "normal " + std::to_string(i) + " is not unit length");
  }
}

}  // namespace acseg
