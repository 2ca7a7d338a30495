#pragma once

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace olu {

inline void require_finite(double x, const char* what) {
  if (!std::isfinite(x)) {
    throw std::invalid_argument(std::string(what) + " must be finite");
  }
}

// |a - b| <= abs_tol + rel_tol * max(|a|, |b|).
inline bool rel_close(double a, double b, double rel_tol = 1e-9,
                      double abs_tol = 1e-12) {
  return std::abs(a - b) <=
         abs_tol + rel_tol * std::max(std::abs(a), std::abs(b));
}

// Radial projection onto [-d, d]; clip(0) = 0 even when d = 0.
inline double clip_sym(double x, double d) {
  if (x == 0.0) return 0.0;
  return x * std::min(d / std::abs(x), 1.0);
}

// Ratio with the 0/0 -> 0 convention shared by every update rule here.
inline double safe_ratio(double num, double denom) {
  return denom == 0.0 ? 0.0 : num / denom;
}

}  // namespace olu
