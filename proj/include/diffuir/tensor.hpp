#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <string>
#include <vector>

#include "diffuir/errors.hpp"
#include "diffuir/rng.hpp"

namespace diffuir {

// Dense CHW image tensor. Values are nominally in [0,1] for images; noised
// diffusion states and residuals legitimately leave that range.
struct Tensor {
  int c = 0, h = 0, w = 0;
  std::vector<double> v;

  Tensor() = default;
  Tensor(int c_, int h_, int w_, double fill = 0.0)
      : c(c_), h(h_), w(w_), v(static_cast<std::size_t>(c_) * h_ * w_, fill) {}

  std::size_t size() const { return v.size(); }

  double& at(int ci, int y, int x) {
    return v[(static_cast<std::size_t>(ci) * h + y) * w + x];
  }
  double at(int ci, int y, int x) const {
    return v[(static_cast<std::size_t>(ci) * h + y) * w + x];
  }

  bool same_shape(const Tensor& o) const {
    return c == o.c && h == o.h && w == o.w;
  }

  std::string shape_str() const {
    return "(" + std::to_string(c) + "," + std::to_string(h) + "," +
           std::to_string(w) + ")";
  }

  static Tensor zeros_like(const Tensor& o) { return Tensor(o.c, o.h, o.w); }
  static Tensor full_like(const Tensor& o, double value) {
    return Tensor(o.c, o.h, o.w, value);
  }

  Tensor& operator+=(const Tensor& o) {
    for (std::size_t i = 0; i < v.size(); ++i) v[i] += o.v[i];
    return *this;
  }
  Tensor& operator-=(const Tensor& o) {
    for (std::size_t i = 0; i < v.size(); ++i) v[i] -= o.v[i];
    return *this;
  }
  Tensor& operator*=(double s) {
    for (double& x : v) x *= s;
    return *this;
  }

  // this += s * o
  Tensor& add_scaled(const Tensor& o, double s) {
    for (std::size_t i = 0; i < v.size(); ++i) v[i] += s * o.v[i];
    return *this;
  }

  void fill(double value) { std::fill(v.begin(), v.end(), value); }

  void clamp(double lo, double hi) {
    for (double& x : v) x = std::min(hi, std::max(lo, x));
  }

  bool all_finite() const {
    for (double x : v)
      if (!std::isfinite(x)) return false;
    return true;
  }
};

inline Tensor operator+(Tensor a, const Tensor& b) { return a += b; }
inline Tensor operator-(Tensor a, const Tensor& b) { return a -= b; }
inline Tensor operator*(Tensor a, double s) { return a *= s; }
inline Tensor operator*(double s, Tensor a) { return a *= s; }

inline void require_same_shape(const Tensor& a, const Tensor& b,
                               const char* where) {
  if (!a.same_shape(b)) {
    throw dimension_error(std::string(where) + ": shape mismatch " +
                          a.shape_str() + " vs " + b.shape_str());
  }
}

inline void require_finite(const Tensor& t, const char* where) {
  if (!t.all_finite()) {
    throw numeric_error(std::string(where) + ": non-finite value in tensor");
  }
}

inline Tensor random_normal(int c, int h, int w, Rng& rng) {
  Tensor t(c, h, w);
  for (double& x : t.v) x = rng.normal();
  return t;
}

inline Tensor concat_channels(const Tensor& a, const Tensor& b) {
  if (a.h != b.h || a.w != b.w) {
    throw dimension_error("concat_channels: spatial mismatch " +
                          a.shape_str() + " vs " + b.shape_str());
  }
  Tensor out(a.c + b.c, a.h, a.w);
  std::copy(a.v.begin(), a.v.end(), out.v.begin());
  std::copy(b.v.begin(), b.v.end(), out.v.begin() + a.v.size());
  return out;
}

inline Tensor flip_horizontal(const Tensor& t) {
  Tensor out(t.c, t.h, t.w);
  for (int ci = 0; ci < t.c; ++ci)
    for (int y = 0; y < t.h; ++y)
      for (int x = 0; x < t.w; ++x) out.at(ci, y, x) = t.at(ci, y, t.w - 1 - x);
  return out;
}

inline Tensor flip_vertical(const Tensor& t) {
  Tensor out(t.c, t.h, t.w);
  for (int ci = 0; ci < t.c; ++ci)
    for (int y = 0; y < t.h; ++y)
      for (int x = 0; x < t.w; ++x) out.at(ci, y, x) = t.at(ci, t.h - 1 - y, x);
  return out;
}

inline double max_abs_diff(const Tensor& a, const Tensor& b) {
  require_same_shape(a, b, "max_abs_diff");
  double m = 0.0;
  for (std::size_t i = 0; i < a.v.size(); ++i)
    m = std::max(m, std::abs(a.v[i] - b.v[i]));
  return m;
}

}  // namespace diffuir
