#pragma once

#include <random>
#include <vector>

#include "ortho2c/deltoid.hpp"
#include "ortho2c/weight.hpp"

namespace ortho2c {

/// Deterministic evaluation points in the natural domain of the weight:
/// Gaussian cloud for hermite (and table weights), uniform disk for disk,
/// rejection-sampled interior points for the deltoid region.
inline std::vector<Complex> sample_points(const WeightSpec& w, int count, uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<Complex> pts;
  pts.reserve(count);
  if (w.kind() == WeightKind::disk) {
    std::uniform_real_distribution<double> u01(0.0, 1.0);
    while (int(pts.size()) < count) {
      const double r = std::sqrt(u01(rng));
      const double th = 2.0 * M_PI * u01(rng);
      pts.emplace_back(r * std::cos(th), r * std::sin(th));
    }
  } else if (w.is_deltoid()) {
    std::uniform_real_distribution<double> ux(-0.5, 1.0), uy(-1.05, 1.05);
    while (int(pts.size()) < count) {
      const double x = ux(rng), y = uy(rng);
      if (deltoid_contains(x, y)) pts.emplace_back(x, y);
    }
  } else {
    std::normal_distribution<double> g(0.0, 1.0);
    while (int(pts.size()) < count) pts.emplace_back(g(rng), g(rng));
  }
  return pts;
}

}  // namespace ortho2c
