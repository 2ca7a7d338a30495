#pragma once

#include <functional>
#include <span>
#include <vector>

#include "olu/rng.hpp"

namespace olu {

/// Differentiable target F with a stochastic first-order oracle.
///
/// stochastic_grad must be unbiased for grad F. averaged_grad(w, delta), when
/// provided, returns the segment average int_0^1 grad F(w + s delta) ds in
/// closed form; quadratics and the piecewise-linear objectives here admit one.
struct Objective {
  int dim = 1;
  std::function<double(std::span<const double>)> value;
  std::function<std::vector<double>(std::span<const double>, Rng&)>
      stochastic_grad;
  std::function<std::vector<double>(std::span<const double>)> exact_grad;
  std::function<std::vector<double>(std::span<const double>,
                                    std::span<const double>)>
      averaged_grad;
};

// F(w) = 1/2 (w - c)^T H (w - c) for symmetric PSD H (dense, row-major).
// averaged_grad(w, delta) = H (w - c) + 1/2 H delta, exact.
inline Objective make_quadratic(std::vector<std::vector<double>> h,
                                std::vector<double> center) {
  const int d = int(center.size());
  auto hv = [h, d](std::span<const double> x) {
    std::vector<double> out(std::size_t(d), 0.0);
    for (int i = 0; i < d; ++i) {
      for (int j = 0; j < d; ++j) out[i] += h[i][j] * x[j];
    }
    return out;
  };
  Objective f;
  f.dim = d;
  f.value = [hv, center, d](std::span<const double> w) {
    std::vector<double> diff(std::size_t(d), 0.0);
    for (int i = 0; i < d; ++i) diff[i] = w[i] - center[i];
    const auto hd = hv(diff);
    double acc = 0.0;
    for (int i = 0; i < d; ++i) acc += 0.5 * diff[i] * hd[i];
    return acc;
  };
  f.exact_grad = [hv, center, d](std::span<const double> w) {
    std::vector<double> diff(std::size_t(d), 0.0);
    for (int i = 0; i < d; ++i) diff[i] = w[i] - center[i];
    return hv(diff);
  };
  f.stochastic_grad = [grad = f.exact_grad](std::span<const double> w, Rng&) {
    return grad(w);
  };
  f.averaged_grad = [hv, center, d](std::span<const double> w,
                                    std::span<const double> delta) {
    std::vector<double> diff(std::size_t(d), 0.0);
    for (int i = 0; i < d; ++i) diff[i] = w[i] - center[i];
    auto g = hv(diff);
    const auto hdelta = hv(std::vector<double>(delta.begin(), delta.end()));
    for (int i = 0; i < d; ++i) g[i] += 0.5 * hdelta[i];
    return g;
  };
  return f;
}

// Random symmetric PSD quadratic: H = A^T A / d plus a small diagonal,
// center drawn from Unif[-1,1]^d.
inline Objective random_psd_quadratic(int d, Rng& rng) {
  std::vector<std::vector<double>> a(std::size_t(d),
                                     std::vector<double>(std::size_t(d), 0.0));
  for (auto& row : a) {
    for (double& x : row) x = rng.uniform(-1.0, 1.0);
  }
  std::vector<std::vector<double>> h(std::size_t(d),
                                     std::vector<double>(std::size_t(d), 0.0));
  for (int i = 0; i < d; ++i) {
    for (int j = 0; j < d; ++j) {
      for (int k = 0; k < d; ++k) h[i][j] += a[k][i] * a[k][j];
      h[i][j] /= d;
    }
    h[i][i] += 0.1;
  }
  std::vector<double> center(std::size_t(d), 0.0);
  for (double& c : center) c = rng.uniform(-1.0, 1.0);
  return make_quadratic(std::move(h), std::move(center));
}

}  // namespace olu
