#include "ksreg/orbit_space.hpp"

namespace ksreg {

ReducedSpaceKind classify_reduced_space(const WedgePoint<double>& w, double tol) {
  const double gate = tol * std::fmax(1.0, w.h);
  if (!std::isfinite(w.h) || !std::isfinite(w.xi) || w.h < -gate || std::fabs(w.xi) > w.h + gate) {
    throw std::domain_error("classify_reduced_space: (h, xi) is outside the wedge");
  }
  if (w.h <= gate) return {ReducedSpaceType::Point, 0.0, 0.0};
  if (std::fabs(w.h - std::fabs(w.xi)) <= gate) return {ReducedSpaceType::SingleSphere, w.h, 0.0};
  return {ReducedSpaceType::ProductOfSpheres, 0.5 * (w.h + w.xi), 0.5 * (w.h - w.xi)};
}

}  // namespace ksreg
