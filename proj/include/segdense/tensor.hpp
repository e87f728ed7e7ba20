#pragma once

#include <cstddef>
#include <vector>

namespace segdense {

// NCHW double-precision array. Double everywhere keeps finite-difference
// gradient checks meaningful and training bit-reproducible.
struct Tensor {
  int n = 0, c = 0, h = 0, w = 0;
  std::vector<double> data;

  Tensor() = default;
  Tensor(int n_, int c_, int h_, int w_)
      : n(n_), c(c_), h(h_), w(w_),
        data(static_cast<std::size_t>(n_) * c_ * h_ * w_, 0.0) {}

  std::size_t size() const { return data.size(); }
  std::size_t plane_size() const {
    return static_cast<std::size_t>(h) * w;
  }
  bool same_shape(const Tensor& o) const {
    return n == o.n && c == o.c && h == o.h && w == o.w;
  }

  double* plane(int in, int ic) {
    return data.data() + (static_cast<std::size_t>(in) * c + ic) * plane_size();
  }
  const double* plane(int in, int ic) const {
    return data.data() + (static_cast<std::size_t>(in) * c + ic) * plane_size();
  }

  double at(int in, int ic, int y, int x) const {
    return plane(in, ic)[static_cast<std::size_t>(y) * w + x];
  }
  double& at(int in, int ic, int y, int x) {
    return plane(in, ic)[static_cast<std::size_t>(y) * w + x];
  }
};

// Channel-wise concatenation; all parts must agree on n, h, w.
Tensor concat_channels(const std::vector<const Tensor*>& parts);

}  // namespace segdense
