#include "acseg/core/prob_map.hpp"

#include <cmath>
#include <string>

namespace acseg {

void ProbMap::validate() const {
  for (int i = 0; i < element_count(); ++i) {
    double sum = 0.0;
    for (int c = 0; c < num_classes_; ++c) {
      const double v = at(i, c);
      if (!(v >= 0.0 && v <= 1.0) || !std::isfinite(v))
        throw InternalError("BadProbMap",
                            "probability outside [0,1] at element " + std::to_string(i));
      sum += v;
    }
    if (std::abs(sum - 1.0) > 1e-6)
      throw InternalError("BadProbMap", "row " + std::to_string(i) + " sums to " +
                                            std::to_string(sum) + ", expected 1");
  }
}

std::vector<std::int32_t> map_labeling(const ProbMap& p) {
  std::vector<std::int32_t> labels(p.element_count(), 0);
  const int c_count = p.num_classes();
  for (int i = 0; i < p.element_count(); ++i) {
    const double* row = p.row(i);
    int best = 0;
    for (int c = 1; c < c_count; ++c)
      if (row[c] > row[best]) best = c;  // ties keep the lowest index
    labels[i] = best;
  }
  return labels;
}

LabelGrid map_labeling_grid(const ProbMap& p) {
  if (p.geometry().kind != Geometry::Kind::Grid)
    throw DataError("DimensionMismatch", "map_labeling_grid needs grid geometry");
  LabelGrid grid;
  grid.width = p.geometry().width;
  grid.height = p.geometry().height;
  grid.labels = map_labeling(p);
  return grid;
}

}  // namespace acseg
