#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <utility>
#include <vector>

#include "semrelay/common.hpp"

namespace semrelay {

// Dense (channels, height, width) container, row-major within each channel.
// Channel slicing is therefore contiguous.
struct Tensor {
  int c = 0, h = 0, w = 0;
  std::vector<double> v;

  Tensor() = default;
  Tensor(int c_, int h_, int w_, double fill = 0.0)
      : c(c_), h(h_), w(w_), v(static_cast<std::size_t>(c_) * h_ * w_, fill) {
    if (c_ < 0 || h_ < 0 || w_ < 0) throw ShapeError("negative tensor dimension");
  }

  static Tensor from(int c, int h, int w, std::vector<double> data) {
    Tensor t;
    t.c = c;
    t.h = h;
    t.w = w;
    if (data.size() != static_cast<std::size_t>(c) * h * w)
      throw ShapeError("tensor data length does not match c*h*w");
    t.v = std::move(data);
    return t;
  }

  std::size_t size() const { return v.size(); }

  double& at(int ci, int y, int x) {
    return v[(static_cast<std::size_t>(ci) * h + y) * w + x];
  }
  double at(int ci, int y, int x) const {
    return v[(static_cast<std::size_t>(ci) * h + y) * w + x];
  }

  bool same_shape(const Tensor& o) const { return c == o.c && h == o.h && w == o.w; }

  bool all_finite() const {
    for (double x : v)
      if (!std::isfinite(x)) return false;
    return true;
  }
};

inline std::vector<double> flatten_channel(const Tensor& t, int ci) {
  if (ci < 0 || ci >= t.c) throw ArgumentError("channel index out of range");
  std::size_t n = static_cast<std::size_t>(t.h) * t.w;
  std::vector<double> out(n);
  std::copy_n(t.v.begin() + static_cast<std::size_t>(ci) * n, n, out.begin());
  return out;
}

inline void set_channel(Tensor& t, int ci, const std::vector<double>& data) {
  if (ci < 0 || ci >= t.c) throw ArgumentError("channel index out of range");
  std::size_t n = static_cast<std::size_t>(t.h) * t.w;
  if (data.size() != n) throw ShapeError("channel data length mismatch");
  std::copy(data.begin(), data.end(), t.v.begin() + static_cast<std::size_t>(ci) * n);
}

inline Tensor concat_channels(const std::vector<Tensor>& parts) {
  if (parts.empty()) throw ArgumentError("concat_channels: empty list");
  int h = parts[0].h, w = parts[0].w, c = 0;
  for (const Tensor& p : parts) {
    if (p.h != h || p.w != w) throw ShapeError("concat_channels: spatial dims differ");
    c += p.c;
  }
  Tensor out(c, h, w);
  std::size_t off = 0;
  for (const Tensor& p : parts) {
    std::copy(p.v.begin(), p.v.end(), out.v.begin() + off);
    off += p.size();
  }
  return out;
}

inline Tensor slice_channels(const Tensor& t, int lo, int hi) {
  if (lo < 0 || hi > t.c || lo > hi) throw ArgumentError("slice_channels: bad range");
  Tensor out(hi - lo, t.h, t.w);
  std::size_t plane = static_cast<std::size_t>(t.h) * t.w;
  std::copy_n(t.v.begin() + lo * plane, (hi - lo) * plane, out.v.begin());
  return out;
}

inline Tensor mean_channels(const std::vector<Tensor>& parts) {
  if (parts.empty()) throw ArgumentError("mean_channels: empty list");
  for (const Tensor& p : parts)
    if (!p.same_shape(parts[0])) throw ShapeError("mean_channels: shape mismatch");
  Tensor out(parts[0].c, parts[0].h, parts[0].w);
  for (const Tensor& p : parts)
    for (std::size_t i = 0; i < out.size(); ++i) out.v[i] += p.v[i];
  double inv = 1.0 / static_cast<double>(parts.size());
  for (double& x : out.v) x *= inv;
  return out;
}

// A group of same-sized RGB images with values normalized to [0, 1].
struct ImageBatch {
  std::vector<Tensor> images;

  int count() const { return static_cast<int>(images.size()); }

  void validate() const {
    if (images.empty()) throw ArgumentError("empty image batch");
    for (const Tensor& im : images) {
      if (im.c != 3) throw ShapeError("image must have 3 channels");
      if (!im.same_shape(images[0])) throw ShapeError("images in a batch must share dims");
      for (double x : im.v)
        if (!(x >= 0.0 && x <= 1.0)) throw ArgumentError("pixel value outside [0,1]");
    }
  }
};

}  // namespace semrelay
