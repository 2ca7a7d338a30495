#pragma once

#include <cmath>
#include <cstddef>
#include <optional>
#include <stdexcept>
#include <vector>

namespace olu {

/// Horizon-T sequence of d-dimensional linear-loss vectors v_1..v_T.
struct LossSequence {
  std::vector<std::vector<double>> values;

  long horizon() const { return long(values.size()); }
  int dim() const { return values.empty() ? 0 : int(values.front().size()); }

  void validate() const {
    if (values.empty()) throw std::invalid_argument("loss sequence is empty");
    const std::size_t d = values.front().size();
    if (d == 0) throw std::invalid_argument("loss sequence has dimension 0");
    for (const auto& v : values) {
      if (v.size() != d) {
        throw std::invalid_argument("loss vectors have mismatched dimensions");
      }
      for (double x : v) {
        if (!std::isfinite(x)) {
          throw std::invalid_argument("loss sequence contains a non-finite entry");
        }
      }
    }
  }
};

/// Comparator sequence u_0..u_{T-1}, optionally box-bounded.
struct ComparatorSequence {
  std::vector<std::vector<double>> values;
  std::optional<double> bound;  // sup-norm bound U (or D), if any

  long horizon() const { return long(values.size()); }

  void validate(long expected_horizon) const {
    if (horizon() != expected_horizon) {
      throw std::invalid_argument("comparator sequence length != horizon");
    }
    for (const auto& u : values) {
      for (double x : u) {
        if (!std::isfinite(x)) {
          throw std::invalid_argument("comparator contains a non-finite entry");
        }
        if (bound && std::abs(x) > *bound) {
          throw std::invalid_argument("comparator exceeds its bound");
        }
      }
    }
  }
};

}  // namespace olu
