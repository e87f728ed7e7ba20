#pragma once

#include <string>
#include <vector>

#include "segdense/rng.hpp"
#include "segdense/tensor.hpp"

namespace segdense {

struct Param {
  std::string name;
  std::vector<int> shape;
  std::vector<double> value;
  std::vector<double> grad;

  Param() = default;
  Param(std::string name_, std::vector<int> shape_);

  std::size_t size() const { return value.size(); }
  void zero_grad();
};

// Layers cache whatever backward needs when forward is called with
// cache=true; each instance is used at most once per forward pass.

class Conv2d {
 public:
  Conv2d(const std::string& name, int in_channels, int out_channels,
         int kernel, int stride, int pad);

  Tensor forward(const Tensor& x, bool cache);
  // Returns grad wrt input; accumulates into weight.grad / bias.grad.
  Tensor backward(const Tensor& grad_out);

  void init_he_normal(Rng& rng);
  void init_zero();

  static int output_extent(int in, int kernel, int stride, int pad) {
    return (in + 2 * pad - kernel) / stride + 1;
  }

  Param weight;  // [out_c, in_c, k, k]
  Param bias;    // [out_c]
  int in_c, out_c, k, stride, pad;

 private:
  Tensor cached_input_;
};

class ConvTranspose2d {
 public:
  ConvTranspose2d(const std::string& name, int in_channels, int out_channels,
                  int kernel, int stride, int pad);

  Tensor forward(const Tensor& x, bool cache);
  Tensor backward(const Tensor& grad_out);

  // Classic FCN bilinear-interpolation kernel; identity-like upsampling at
  // init so zero branch logits stay zero through the whole head.
  void init_bilinear();

  static int output_extent(int in, int kernel, int stride, int pad) {
    return (in - 1) * stride - 2 * pad + kernel;
  }

  Param weight;  // [in_c, out_c, k, k]
  Param bias;    // [out_c]
  int in_c, out_c, k, stride, pad;

 private:
  Tensor cached_input_;
};

class ReLU {
 public:
  Tensor forward(const Tensor& x, bool cache);
  Tensor backward(const Tensor& grad_out);

 private:
  Tensor cached_input_;
};

class MaxPool2d {
 public:
  MaxPool2d(int kernel, int stride, int pad) : k(kernel), stride(stride), pad(pad) {}

  Tensor forward(const Tensor& x, bool cache);
  Tensor backward(const Tensor& grad_out);

  int k, stride, pad;

 private:
  std::vector<std::size_t> argmax_;
  int in_n = 0, in_c = 0, in_h = 0, in_w = 0;
};

class AvgPool2d {
 public:
  AvgPool2d(int kernel, int stride) : k(kernel), stride(stride) {}

  Tensor forward(const Tensor& x, bool cache);
  Tensor backward(const Tensor& grad_out);

  int k, stride;

 private:
  int in_n = 0, in_c = 0, in_h = 0, in_w = 0;
};

class Sigmoid {
 public:
  Tensor forward(const Tensor& x, bool cache);
  Tensor backward(const Tensor& grad_out);

 private:
  Tensor cached_output_;
};

double sigmoid_scalar(double x);

}  // namespace segdense
