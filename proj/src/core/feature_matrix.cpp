#include "acseg/core/feature_matrix.hpp"

#include <cmath>
#include <cstring>
#include <set>

namespace acseg {

FeatureMatrix FeatureMatrix::concat(const FeatureMatrix& a, const FeatureMatrix& b) {
  if (!(a.geometry() == b.geometry()))
    throw DataError("DimensionMismatch", "feature concat: geometry mismatch");
  std::vector<std::string> names = a.channel_names();
  names.insert(names.end(), b.channel_names().begin(), b.channel_names().end());
  FeatureMatrix out(a.geometry(), std::move(names));
  const int da = a.dim(), db = b.dim();
  for (int i = 0; i < a.element_count(); ++i) {
    float* dst = out.row(i);
    std::memcpy(dst, a.row(i), sizeof(float) * da);
    std::memcpy(dst + da, b.row(i), sizeof(float) * db);
  }
  return out;
}

void FeatureMatrix::validate() const {
  std::set<std::string> names(channel_names_.begin(), channel_names_.end());
  if (static_cast<int>(names.size()) != dim())
    throw InternalError("BadFeatureMatrix", "duplicate channel names");
  for (const float v : values_)
    if (!std::isfinite(v)) throw InternalError("BadFeatureMatrix", "non-finite feature value");
}

}  // namespace acseg
