#pragma once

#include <cmath>
#include <vector>

#include "leaftrace/tensor.hpp"

namespace leaftrace {

// Error weights for trace regression: w_i = 1 + (1 - tanh(alpha*i + beta))/2
// with alpha = 8/N and beta = -4, which tapers the weight from ~2 at the
// tile center to ~1 at the tile edge.
struct WeightVector {
  int n = 128;
  double alpha = 8.0 / 128.0;
  double beta = -4.0;
  std::vector<double> omega;

  static WeightVector standard(int n = 128) {
    WeightVector w;
    w.n = n;
    w.alpha = 8.0 / n;
    w.beta = -4.0;
    w.omega.resize(static_cast<size_t>(n));
    for (int i = 1; i <= n; ++i)
      w.omega[static_cast<size_t>(i - 1)] =
          1.0 + (1.0 - std::tanh(w.alpha * i + w.beta)) / 2.0;
    return w;
  }
};

// Mean over trace points of w_i * ||y_i - yhat_i||^2, averaged over the batch
// when pred has a leading batch dimension. pred/target are {2,N} or {B,2,N}.
inline double weighted_mse(const Tensor& pred, const Tensor& target,
                           const WeightVector& w, Tensor* dpred = nullptr) {
  require_same_shape(pred, target, "weighted_mse");
  const int nd = pred.ndim();
  if (nd != 2 && nd != 3) throw ConfigError("weighted_mse: expected {2,N} or {B,2,N}");
  const int batch = nd == 3 ? pred.dim(0) : 1;
  const int n = pred.dim(nd - 1);
  if (pred.dim(nd - 2) != 2) throw ConfigError("weighted_mse: expected 2 rows");
  if (n != w.n) throw ConfigError("weighted_mse: weight length mismatch");
  if (dpred) {
    *dpred = Tensor(pred.shape);
  }
  double loss = 0.0;
  const double scale = 1.0 / (static_cast<double>(n) * batch);
  for (int b = 0; b < batch; ++b) {
    const int64_t base = static_cast<int64_t>(b) * 2 * n;
    for (int i = 0; i < n; ++i) {
      const double dr = pred[base + i] - target[base + i];
      const double dc = pred[base + n + i] - target[base + n + i];
      const double wi = w.omega[static_cast<size_t>(i)];
      loss += wi * (dr * dr + dc * dc) * scale;
      if (dpred) {
        (*dpred)[base + i] = 2.0 * wi * dr * scale;
        (*dpred)[base + n + i] = 2.0 * wi * dc * scale;
      }
    }
  }
  return loss;
}

namespace detail {
constexpr double kProbEps = 1e-7;  // clip probabilities before any log
inline double clipp(double p) {
  return p < kProbEps ? kProbEps : (p > 1.0 - kProbEps ? 1.0 - kProbEps : p);
}
}  // namespace detail

// Focal loss, mean over elements. y must be 0/1; p is clipped to
// [eps, 1-eps] before logs. Gradient is zero where the clip is active.
inline double focal_loss(const Tensor& p, const Tensor& y, double alpha = 0.25,
                         double gamma = 2.0, Tensor* dp = nullptr) {
  require_same_shape(p, y, "focal_loss");
  if (dp) *dp = Tensor(p.shape);
  const int64_t n = p.size();
  const double scale = 1.0 / n;
  double loss = 0.0;
  for (int64_t i = 0; i < n; ++i) {
    const double pc = detail::clipp(p[i]);
    const bool clipped = pc != p[i];
    double l, g;
    if (y[i] > 0.5) {
      const double one_m = 1.0 - pc;
      const double pw = gamma == 0.0 ? 1.0 : std::pow(one_m, gamma);
      l = -alpha * pw * std::log(pc);
      g = alpha * (gamma == 0.0 ? 0.0
                                : gamma * std::pow(one_m, gamma - 1.0) * std::log(pc)) -
          alpha * pw / pc;
    } else {
      const double pw = gamma == 0.0 ? 1.0 : std::pow(pc, gamma);
      l = -(1.0 - alpha) * pw * std::log(1.0 - pc);
      g = -(1.0 - alpha) * (gamma == 0.0 ? 0.0
                                         : gamma * std::pow(pc, gamma - 1.0) *
                                               std::log(1.0 - pc)) +
          (1.0 - alpha) * pw / (1.0 - pc);
    }
    loss += l * scale;
    if (dp) (*dp)[i] = clipped ? 0.0 : g * scale;
  }
  return loss;
}

// Binary cross-entropy, mean over elements, with the same clipping rule.
inline double bce(const Tensor& p, const Tensor& y, Tensor* dp = nullptr) {
  require_same_shape(p, y, "bce");
  if (dp) *dp = Tensor(p.shape);
  const int64_t n = p.size();
  const double scale = 1.0 / n;
  double loss = 0.0;
  for (int64_t i = 0; i < n; ++i) {
    const double pc = detail::clipp(p[i]);
    const bool clipped = pc != p[i];
    loss += -(y[i] * std::log(pc) + (1.0 - y[i]) * std::log(1.0 - pc)) * scale;
    if (dp)
      (*dp)[i] = clipped ? 0.0 : (-(y[i] / pc) + (1.0 - y[i]) / (1.0 - pc)) * scale;
  }
  return loss;
}

}  // namespace leaftrace
