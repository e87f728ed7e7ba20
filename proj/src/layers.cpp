#include "segdense/layers.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <stdexcept>

namespace segdense {

// Parallel loops only ever split over disjoint output planes and each output
// element is accumulated serially in a fixed order, so results are
// bit-identical for any thread count.

Param::Param(std::string name_, std::vector<int> shape_)
    : name(std::move(name_)), shape(std::move(shape_)) {
  std::size_t count = 1;
  for (int d : shape) count *= static_cast<std::size_t>(d);
  value.assign(count, 0.0);
  grad.assign(count, 0.0);
}

void Param::zero_grad() { std::fill(grad.begin(), grad.end(), 0.0); }

namespace {

void check_positive_dims(int h, int w, const char* what) {
  if (h <= 0 || w <= 0) {
    throw std::invalid_argument(std::string(what) + ": non-positive output size");
  }
}

}  // namespace

Conv2d::Conv2d(const std::string& name, int in_channels, int out_channels,
               int kernel, int stride_, int pad_)
    : weight(name + ".weight", {out_channels, in_channels, kernel, kernel}),
      bias(name + ".bias", {out_channels}),
      in_c(in_channels), out_c(out_channels), k(kernel), stride(stride_), pad(pad_) {}

void Conv2d::init_he_normal(Rng& rng) {
  const double fan_in = static_cast<double>(in_c) * k * k;
  const double std_dev = std::sqrt(2.0 / fan_in);
  for (auto& v : weight.value) v = std_dev * rng.normal();
  std::fill(bias.value.begin(), bias.value.end(), 0.0);
}

void Conv2d::init_zero() {
  std::fill(weight.value.begin(), weight.value.end(), 0.0);
  std::fill(bias.value.begin(), bias.value.end(), 0.0);
}

Tensor Conv2d::forward(const Tensor& x, bool cache) {
  if (x.c != in_c) throw std::invalid_argument("conv input channel mismatch");
  const int oh = output_extent(x.h, k, stride, pad);
  const int ow = output_extent(x.w, k, stride, pad);
  check_positive_dims(oh, ow, "conv");
  Tensor out(x.n, out_c, oh, ow);

#pragma omp parallel for collapse(2) schedule(static)
  for (int n = 0; n < x.n; ++n) {
    for (int oc = 0; oc < out_c; ++oc) {
      double* out_plane = out.plane(n, oc);
      const double b = bias.value[oc];
      for (int oy = 0; oy < oh; ++oy) {
        for (int ox = 0; ox < ow; ++ox) {
          double acc = b;
          const int iy0 = oy * stride - pad;
          const int ix0 = ox * stride - pad;
          const double* w_oc = weight.value.data() +
                               static_cast<std::size_t>(oc) * in_c * k * k;
          for (int ic = 0; ic < in_c; ++ic) {
            const double* in_plane = x.plane(n, ic);
            const double* w_ic = w_oc + static_cast<std::size_t>(ic) * k * k;
            for (int ky = 0; ky < k; ++ky) {
              const int iy = iy0 + ky;
              if (iy < 0 || iy >= x.h) continue;
              const double* in_row = in_plane + static_cast<std::size_t>(iy) * x.w;
              const double* w_row = w_ic + static_cast<std::size_t>(ky) * k;
              for (int kx = 0; kx < k; ++kx) {
                const int ix = ix0 + kx;
                if (ix < 0 || ix >= x.w) continue;
                acc += in_row[ix] * w_row[kx];
              }
            }
          }
          out_plane[static_cast<std::size_t>(oy) * ow + ox] = acc;
        }
      }
    }
  }
  if (cache) cached_input_ = x;
  return out;
}

Tensor Conv2d::backward(const Tensor& grad_out) {
  const Tensor& x = cached_input_;
  if (x.size() == 0) throw std::logic_error("conv backward without cached forward");
  Tensor grad_in(x.n, x.c, x.h, x.w);

  // dL/dInput
#pragma omp parallel for collapse(2) schedule(static)
  for (int n = 0; n < x.n; ++n) {
    for (int ic = 0; ic < in_c; ++ic) {
      double* gin_plane = grad_in.plane(n, ic);
      for (int iy = 0; iy < x.h; ++iy) {
        for (int ix = 0; ix < x.w; ++ix) {
          double acc = 0.0;
          for (int oc = 0; oc < out_c; ++oc) {
            const double* gout_plane = grad_out.plane(n, oc);
            const double* w_ic = weight.value.data() +
                                 (static_cast<std::size_t>(oc) * in_c + ic) * k * k;
            for (int ky = 0; ky < k; ++ky) {
              const int num_y = iy + pad - ky;
              if (num_y < 0 || num_y % stride != 0) continue;
              const int oy = num_y / stride;
              if (oy >= grad_out.h) continue;
              for (int kx = 0; kx < k; ++kx) {
                const int num_x = ix + pad - kx;
                if (num_x < 0 || num_x % stride != 0) continue;
                const int ox = num_x / stride;
                if (ox >= grad_out.w) continue;
                acc += gout_plane[static_cast<std::size_t>(oy) * grad_out.w + ox] *
                       w_ic[static_cast<std::size_t>(ky) * k + kx];
              }
            }
          }
          gin_plane[static_cast<std::size_t>(iy) * x.w + ix] = acc;
        }
      }
    }
  }

  // dL/dWeight, dL/dBias (accumulated)
#pragma omp parallel for schedule(static)
  for (int oc = 0; oc < out_c; ++oc) {
    double* gw_oc = weight.grad.data() + static_cast<std::size_t>(oc) * in_c * k * k;
    double gb = 0.0;
    for (int n = 0; n < x.n; ++n) {
      const double* gout_plane = grad_out.plane(n, oc);
      for (int oy = 0; oy < grad_out.h; ++oy) {
        for (int ox = 0; ox < grad_out.w; ++ox) {
          const double g = gout_plane[static_cast<std::size_t>(oy) * grad_out.w + ox];
          gb += g;
          const int iy0 = oy * stride - pad;
          const int ix0 = ox * stride - pad;
          for (int ic = 0; ic < in_c; ++ic) {
            const double* in_plane = x.plane(n, ic);
            double* gw_ic = gw_oc + static_cast<std::size_t>(ic) * k * k;
            for (int ky = 0; ky < k; ++ky) {
              const int iy = iy0 + ky;
              if (iy < 0 || iy >= x.h) continue;
              const double* in_row = in_plane + static_cast<std::size_t>(iy) * x.w;
              double* gw_row = gw_ic + static_cast<std::size_t>(ky) * k;
              for (int kx = 0; kx < k; ++kx) {
                const int ix = ix0 + kx;
                if (ix < 0 || ix >= x.w) continue;
                gw_row[kx] += g * in_row[ix];
              }
            }
          }
        }
      }
    }
    bias.grad[oc] += gb;
  }

  cached_input_ = Tensor{};
  return grad_in;
}

ConvTranspose2d::ConvTranspose2d(const std::string& name, int in_channels,
                                 int out_channels, int kernel, int stride_,
                                 int pad_)
    : weight(name + ".weight", {in_channels, out_channels, kernel, kernel}),
      bias(name + ".bias", {out_channels}),
      in_c(in_channels), out_c(out_channels), k(kernel), stride(stride_), pad(pad_) {}

void ConvTranspose2d::init_bilinear() {
  const double factor = (k + 1) / 2;
  const double center = (k % 2 == 1) ? factor - 1.0 : factor - 0.5;
  for (int ic = 0; ic < in_c; ++ic) {
    for (int oc = 0; oc < out_c; ++oc) {
      const double scale = (in_c == out_c) ? (ic == oc ? 1.0 : 0.0)
                                           : 1.0 / static_cast<double>(in_c);
      double* w = weight.value.data() +
                  (static_cast<std::size_t>(ic) * out_c + oc) * k * k;
      for (int ky = 0; ky < k; ++ky) {
        for (int kx = 0; kx < k; ++kx) {
          const double vy = 1.0 - std::abs(ky - center) / factor;
          const double vx = 1.0 - std::abs(kx - center) / factor;
          w[static_cast<std::size_t>(ky) * k + kx] = scale * vy * vx;
        }
      }
    }
  }
  std::fill(bias.value.begin(), bias.value.end(), 0.0);
}

Tensor ConvTranspose2d::forward(const Tensor& x, bool cache) {
  if (x.c != in_c) throw std::invalid_argument("deconv input channel mismatch");
  const int oh = output_extent(x.h, k, stride, pad);
  const int ow = output_extent(x.w, k, stride, pad);
  check_positive_dims(oh, ow, "deconv");
  Tensor out(x.n, out_c, oh, ow);

#pragma omp parallel for collapse(2) schedule(static)
  for (int n = 0; n < x.n; ++n) {
    for (int oc = 0; oc < out_c; ++oc) {
      double* out_plane = out.plane(n, oc);
      const double b = bias.value[oc];
      for (int oy = 0; oy < oh; ++oy) {
        for (int ox = 0; ox < ow; ++ox) {
          double acc = b;
          for (int ic = 0; ic < in_c; ++ic) {
            const double* in_plane = x.plane(n, ic);
            const double* w_ic = weight.value.data() +
                                 (static_cast<std::size_t>(ic) * out_c + oc) * k * k;
            for (int ky = 0; ky < k; ++ky) {
              const int num_y = oy + pad - ky;
              if (num_y < 0 || num_y % stride != 0) continue;
              const int iy = num_y / stride;
              if (iy >= x.h) continue;
              for (int kx = 0; kx < k; ++kx) {
                const int num_x = ox + pad - kx;
                if (num_x < 0 || num_x % stride != 0) continue;
                const int ix = num_x / stride;
                if (ix >= x.w) continue;
                acc += in_plane[static_cast<std::size_t>(iy) * x.w + ix] *
                       w_ic[static_cast<std::size_t>(ky) * k + kx];
              }
            }
          }
          out_plane[static_cast<std::size_t>(oy) * ow + ox] = acc;
        }
      }
    }
  }
  if (cache) cached_input_ = x;
  return out;
}

Tensor ConvTranspose2d::backward(const Tensor& grad_out) {
  const Tensor& x = cached_input_;
  if (x.size() == 0) throw std::logic_error("deconv backward without cached forward");
  Tensor grad_in(x.n, x.c, x.h, x.w);

  // dL/dInput: the transpose of the forward scatter is an ordinary conv.
#pragma omp parallel for collapse(2) schedule(static)
  for (int n = 0; n < x.n; ++n) {
    for (int ic = 0; ic < in_c; ++ic) {
      double* gin_plane = grad_in.plane(n, ic);
      for (int iy = 0; iy < x.h; ++iy) {
        for (int ix = 0; ix < x.w; ++ix) {
          double acc = 0.0;
          for (int oc = 0; oc < out_c; ++oc) {
            const double* gout_plane = grad_out.plane(n, oc);
            const double* w_ic = weight.value.data() +
                                 (static_cast<std::size_t>(ic) * out_c + oc) * k * k;
            for (int ky = 0; ky < k; ++ky) {
              const int oy = iy * stride - pad + ky;
              if (oy < 0 || oy >= grad_out.h) continue;
              for (int kx = 0; kx < k; ++kx) {
                const int ox = ix * stride - pad + kx;
                if (ox < 0 || ox >= grad_out.w) continue;
                acc += gout_plane[static_cast<std::size_t>(oy) * grad_out.w + ox] *
                       w_ic[static_cast<std::size_t>(ky) * k + kx];
              }
            }
          }
          gin_plane[static_cast<std::size_t>(iy) * x.w + ix] = acc;
        }
      }
    }
  }

  // dL/dWeight, dL/dBias
#pragma omp parallel for collapse(2) schedule(static)
  for (int ic = 0; ic < in_c; ++ic) {
    for (int oc = 0; oc < out_c; ++oc) {
      double* gw = weight.grad.data() +
                   (static_cast<std::size_t>(ic) * out_c + oc) * k * k;
      for (int n = 0; n < x.n; ++n) {
        const double* in_plane = x.plane(n, ic);
        const double* gout_plane = grad_out.plane(n, oc);
        for (int iy = 0; iy < x.h; ++iy) {
          for (int ix = 0; ix < x.w; ++ix) {
            const double v = in_plane[static_cast<std::size_t>(iy) * x.w + ix];
            for (int ky = 0; ky < k; ++ky) {
              const int oy = iy * stride - pad + ky;
              if (oy < 0 || oy >= grad_out.h) continue;
              for (int kx = 0; kx < k; ++kx) {
                const int ox = ix * stride - pad + kx;
                if (ox < 0 || ox >= grad_out.w) continue;
                gw[static_cast<std::size_t>(ky) * k + kx] +=
                    v * gout_plane[static_cast<std::size_t>(oy) * grad_out.w + ox];
              }
            }
          }
        }
      }
    }
  }
  for (int oc = 0; oc < out_c; ++oc) {
    double gb = 0.0;
    for (int n = 0; n < grad_out.n; ++n) {
      const double* gout_plane = grad_out.plane(n, oc);
      for (std::size_t i = 0; i < grad_out.plane_size(); ++i) gb += gout_plane[i];
    }
    bias.grad[oc] += gb;
  }

  cached_input_ = Tensor{};
  return grad_in;
}

Tensor ReLU::forward(const Tensor& x, bool cache) {
  Tensor out = x;
  for (auto& v : out.data) v = v > 0.0 ? v : 0.0;
  if (cache) cached_input_ = x;
  return out;
}

Tensor ReLU::backward(const Tensor& grad_out) {
  if (cached_input_.size() == 0) {
    throw std::logic_error("relu backward without cached forward");
  }
  Tensor grad_in = grad_out;
  for (std::size_t i = 0; i < grad_in.data.size(); ++i) {
    if (cached_input_.data[i] <= 0.0) grad_in.data[i] = 0.0;
  }
  cached_input_ = Tensor{};
  return grad_in;
}

Tensor MaxPool2d::forward(const Tensor& x, bool cache) {
  const int oh = (x.h + 2 * pad - k) / stride + 1;
  const int ow = (x.w + 2 * pad - k) / stride + 1;
  check_positive_dims(oh, ow, "maxpool");
  Tensor out(x.n, x.c, oh, ow);
  if (cache) {
    argmax_.assign(out.size(), 0);
    in_n = x.n; in_c = x.c; in_h = x.h; in_w = x.w;
  }

#pragma omp parallel for collapse(2) schedule(static)
  for (int n = 0; n < x.n; ++n) {
    for (int c = 0; c < x.c; ++c) {
      const double* in_plane = x.plane(n, c);
      double* out_plane = out.plane(n, c);
      for (int oy = 0; oy < oh; ++oy) {
        for (int ox = 0; ox < ow; ++ox) {
          double best = -std::numeric_limits<double>::infinity();
          std::size_t best_idx = 0;
          for (int ky = 0; ky < k; ++ky) {
            const int iy = oy * stride - pad + ky;
            if (iy < 0 || iy >= x.h) continue;
            for (int kx = 0; kx < k; ++kx) {
              const int ix = ox * stride - pad + kx;
              if (ix < 0 || ix >= x.w) continue;
              const std::size_t idx = static_cast<std::size_t>(iy) * x.w + ix;
              if (in_plane[idx] > best) {
                best = in_plane[idx];
                best_idx = idx;
              }
            }
          }
          const std::size_t out_idx = static_cast<std::size_t>(oy) * ow + ox;
          out_plane[out_idx] = best;
          if (cache) {
            argmax_[(static_cast<std::size_t>(n) * x.c + c) * out.plane_size() +
                    out_idx] = best_idx;
          }
        }
      }
    }
  }
  return out;
}

Tensor MaxPool2d::backward(const Tensor& grad_out) {
  if (argmax_.empty()) throw std::logic_error("maxpool backward without cached forward");
  Tensor grad_in(in_n, in_c, in_h, in_w);
#pragma omp parallel for collapse(2) schedule(static)
  for (int n = 0; n < in_n; ++n) {
    for (int c = 0; c < in_c; ++c) {
      const double* gout_plane = grad_out.plane(n, c);
      double* gin_plane = grad_in.plane(n, c);
      const std::size_t base =
          (static_cast<std::size_t>(n) * in_c + c) * grad_out.plane_size();
      for (std::size_t i = 0; i < grad_out.plane_size(); ++i) {
        gin_plane[argmax_[base + i]] += gout_plane[i];
      }
    }
  }
  argmax_.clear();
  return grad_in;
}

Tensor AvgPool2d::forward(const Tensor& x, bool cache) {
  const int oh = (x.h - k) / stride + 1;
  const int ow = (x.w - k) / stride + 1;
  check_positive_dims(oh, ow, "avgpool");
  Tensor out(x.n, x.c, oh, ow);
  if (cache) {
    in_n = x.n; in_c = x.c; in_h = x.h; in_w = x.w;
  }
  const double inv = 1.0 / (k * k);
#pragma omp parallel for collapse(2) schedule(static)
  for (int n = 0; n < x.n; ++n) {
    for (int c = 0; c < x.c; ++c) {
      const double* in_plane = x.plane(n, c);
      double* out_plane = out.plane(n, c);
      for (int oy = 0; oy < oh; ++oy) {
        for (int ox = 0; ox < ow; ++ox) {
          double acc = 0.0;
          for (int ky = 0; ky < k; ++ky) {
            const double* row = in_plane +
                                static_cast<std::size_t>(oy * stride + ky) * x.w;
            for (int kx = 0; kx < k; ++kx) acc += row[ox * stride + kx];
          }
          out_plane[static_cast<std::size_t>(oy) * ow + ox] = acc * inv;
        }
      }
    }
  }
  return out;
}

Tensor AvgPool2d::backward(const Tensor& grad_out) {
  if (in_n == 0) throw std::logic_error("avgpool backward without cached forward");
  Tensor grad_in(in_n, in_c, in_h, in_w);
  const double inv = 1.0 / (k * k);
#pragma omp parallel for collapse(2) schedule(static)
  for (int n = 0; n < in_n; ++n) {
    for (int c = 0; c < in_c; ++c) {
      const double* gout_plane = grad_out.plane(n, c);
      double* gin_plane = grad_in.plane(n, c);
      for (int oy = 0; oy < grad_out.h; ++oy) {
        for (int ox = 0; ox < grad_out.w; ++ox) {
          const double g = gout_plane[static_cast<std::size_t>(oy) * grad_out.w + ox] * inv;
          for (int ky = 0; ky < k; ++ky) {
            double* row = gin_plane + static_cast<std::size_t>(oy * stride + ky) * in_w;
            for (int kx = 0; kx < k; ++kx) row[ox * stride + kx] += g;
          }
        }
      }
    }
  }
  in_n = 0;
  return grad_in;
}

double sigmoid_scalar(double x) {
  if (x >= 0.0) {
    return 1.0 / (1.0 + std::exp(-x));
  }
  const double e = std::exp(x);
  return e / (1.0 + e);
}

Tensor Sigmoid::forward(const Tensor& x, bool cache) {
  Tensor out = x;
  for (auto& v : out.data) v = sigmoid_scalar(v);
  if (cache) cached_output_ = out;
  return out;
}

Tensor Sigmoid::backward(const Tensor& grad_out) {
  if (cached_output_.size() == 0) {
    throw std::logic_error("sigmoid backward without cached forward");
  }
  Tensor grad_in = grad_out;
  for (std::size_t i = 0; i < grad_in.data.size(); ++i) {
    const double y = cached_output_.data[i];
    grad_in.data[i] *= y * (1.0 - y);
  }
  cached_output_ = Tensor{};
  return grad_in;
}

}  // namespace segdense
