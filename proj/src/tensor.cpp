#include "segdense/tensor.hpp"

#include <cstring>
#include <stdexcept>

namespace segdense {

Tensor concat_channels(const std::vector<const Tensor*>& parts) {
  if (parts.empty()) throw std::invalid_argument("concat of zero tensors");
  const Tensor& first = *parts.front();
  int total_c = 0;
  for (const Tensor* p : parts) {
    if (p->n != first.n || p->h != first.h || p->w != first.w) {
      throw std::invalid_argument("concat parts disagree on batch or spatial dims");
    }
    total_c += p->c;
  }
  Tensor out(first.n, total_c, first.h, first.w);
  const std::size_t plane = out.plane_size();
  for (int in = 0; in < out.n; ++in) {
    int c_offset = 0;
    for (const Tensor* p : parts) {
      std::memcpy(out.plane(in, c_offset), p->plane(in, 0),
                  sizeof(double) * plane * p->c);
      c_offset += p->c;
    }
  }
  return out;
}

}  // namespace segdense
