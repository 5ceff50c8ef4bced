#pragma once

#include <cmath>
#include <cstdint>
#include <initializer_list>
#include <numeric>
#include <sstream>
#include <string>
#include <vector>

#include "leaftrace/error.hpp"

namespace leaftrace {

// Dense row-major 64-bit float tensor. Activations use {N,C,H,W},
// convolution weights {Cout,Cin,Kh,Kw}, dense heads {Out,In}.
struct Tensor {
  std::vector<int> shape;
  std::vector<double> data;

  Tensor() = default;
  explicit Tensor(std::vector<int> s) : shape(std::move(s)) {
    data.assign(static_cast<size_t>(numel(shape)), 0.0);
  }

  static int64_t numel(const std::vector<int>& s) {
    int64_t n = 1;
    for (int d : s) {
      if (d <= 0) throw ConfigError("tensor dimension must be positive");
      n *= d;
    }
    return s.empty() ? 0 : n;
  }

  static Tensor zeros(std::vector<int> s) { return Tensor(std::move(s)); }

  int64_t size() const { return static_cast<int64_t>(data.size()); }
  bool empty() const { return data.empty(); }
  int dim(int i) const { return shape[static_cast<size_t>(i)]; }
  int ndim() const { return static_cast<int>(shape.size()); }

  double& operator[](int64_t i) { return data[static_cast<size_t>(i)]; }
  double operator[](int64_t i) const { return data[static_cast<size_t>(i)]; }

  double& at(std::initializer_list<int> idx) { return data[static_cast<size_t>(offset(idx))]; }
  double at(std::initializer_list<int> idx) const { return data[static_cast<size_t>(offset(idx))]; }

  int64_t offset(std::initializer_list<int> idx) const {
    int64_t off = 0;
    size_t k = 0;
    for (int i : idx) {
      off = off * shape[k] + i;
      ++k;
    }
    return off;
  }

  void fill(double v) { std::fill(data.begin(), data.end(), v); }

  bool same_shape(const Tensor& o) const { return shape == o.shape; }

  bool all_finite() const {
    for (double v : data)
      if (!std::isfinite(v)) return false;
    return true;
  }

  std::string shape_str() const {
    std::ostringstream os;
    os << '{';
    for (size_t i = 0; i < shape.size(); ++i) os << (i ? "," : "") << shape[i];
    os << '}';
    return os.str();
  }
};

inline void require_same_shape(const Tensor& a, const Tensor& b, const char* what) {
  if (!a.same_shape(b))
    throw ConfigError(std::string(what) + ": shape mismatch " + a.shape_str() +
                      " vs " + b.shape_str());
}

}  // namespace leaftrace
