#ifndef CURRENTS_GEOMETRY_HPP
#define CURRENTS_GEOMETRY_HPP

#include <array>
#include <cmath>
#include <cstdint>
#include <string>
#include <vector>

#include "currents/errors.hpp"

namespace currents {

// Ambient dimensions stay small (products of two 4-dimensional factors at
// most), so fixed-capacity vectors avoid heap churn in the quadrature loops.
inline constexpr int kMaxDim = 8;

struct Vec {
  std::array<double, kMaxDim> a{};
  int n = 0;

  Vec() = default;
  explicit Vec(int dim) : n(dim) {}
  Vec(std::initializer_list<double> xs) {
    n = static_cast<int>(xs.size());
    int i = 0;
    for (double x : xs) a[i++] = x;
  }
  static Vec zero(int dim) { return Vec(dim); }

  double& operator[](int i) { return a[i]; }
  double operator[](int i) const { return a[i]; }
  int size() const { return n; }

  Vec operator+(const Vec& o) const {
    Vec r(n);
    for (int i = 0; i < n; ++i) r.a[i] = a[i] + o.a[i];
    return r;
  }
  Vec operator-(const Vec& o) const {
    Vec r(n);
    for (int i = 0; i < n; ++i) r.a[i] = a[i] - o.a[i];
    return r;
  }
  Vec operator*(double s) const {
    Vec r(n);
    for (int i = 0; i < n; ++i) r.a[i] = a[i] * s;
    return r;
  }
  double norm2() const {
    double s = 0;
    for (int i = 0; i < n; ++i) s += a[i] * a[i];
    return s;
  }
  double norm() const { return std::sqrt(norm2()); }
};

struct Interval {
  double lo = 0, hi = 0;
  Interval() = default;
  Interval(double l, double h) : lo(l), hi(h) {}
  bool contains(double x) const { return x >= lo && x <= hi; }
  double width() const { return hi - lo; }
};

// Axis-aligned box in R^n.
struct Box {
  Vec lo, hi;

  Box() = default;
  Box(const Vec& l, const Vec& h) : lo(l), hi(h) {}
  static Box cube(int dim, double l, double h) {
    Box b;
    b.lo = Vec(dim);
    b.hi = Vec(dim);
    for (int i = 0; i < dim; ++i) {
      b.lo[i] = l;
      b.hi[i] = h;
    }
    return b;
  }
  static Box unit(int dim) { return cube(dim, 0.0, 1.0); }

  int dim() const { return lo.size(); }
  Interval axis(int i) const { return {lo[i], hi[i]}; }
  double width(int i) const { return hi[i] - lo[i]; }
  double max_width() const {
    double w = 0;
    for (int i = 0; i < dim(); ++i) w = std::max(w, width(i));
    return w;
  }
  double volume() const {
    double v = 1;
    for (int i = 0; i < dim(); ++i) v *= width(i);
    return v;
  }
  bool contains(const Vec& x) const {
    for (int i = 0; i < dim(); ++i)
      if (x[i] < lo[i] || x[i] > hi[i]) return false;
    return true;
  }
  bool intersects(const Box& o) const {
    for (int i = 0; i < dim(); ++i)
      if (hi[i] < o.lo[i] || o.hi[i] < lo[i]) return false;
    return true;
  }
  Box expanded(double margin) const {
    Box b = *this;
    for (int i = 0; i < dim(); ++i) {
      b.lo[i] -= margin;
      b.hi[i] += margin;
    }
    return b;
  }
  Box hull(const Box& o) const {
    Box b = *this;
    for (int i = 0; i < dim(); ++i) {
      b.lo[i] = std::min(b.lo[i], o.lo[i]);
      b.hi[i] = std::max(b.hi[i], o.hi[i]);
    }
    return b;
  }
  // Squared euclidean distance from x to the box (0 when inside).
  double dist2(const Vec& x) const {
    double s = 0;
    for (int i = 0; i < dim(); ++i) {
      double d = 0;
      if (x[i] < lo[i]) d = lo[i] - x[i];
      else if (x[i] > hi[i]) d = x[i] - hi[i];
      s += d * d;
    }
    return s;
  }
  // Squared euclidean gap between two boxes (0 when they intersect).
  double gap2(const Box& o) const {
    double s = 0;
    for (int i = 0; i < dim(); ++i) {
      double d = 0;
      if (hi[i] < o.lo[i]) d = o.lo[i] - hi[i];
      else if (o.hi[i] < lo[i]) d = lo[i] - o.hi[i];
      s += d * d;
    }
    return s;
  }
};

// ---------------------------------------------------------------------------
// Increasing multi-indices, represented as bitmasks over coordinate axes.
// Bit i set means dx_i participates. All index sets are over m <= kMaxDim.
// ---------------------------------------------------------------------------

using IndexMask = std::uint32_t;

inline int mask_count(IndexMask m) { return __builtin_popcount(m); }

inline std::vector<int> mask_indices(IndexMask m) {
  std::vector<int> out;
  for (int i = 0; i < kMaxDim; ++i)
    if (m & (IndexMask{1} << i)) out.push_back(i);
  return out;
}

inline IndexMask indices_mask(const std::vector<int>& idx) {
  IndexMask m = 0;
  for (int i : idx) m |= IndexMask{1} << i;
  return m;
}

// Sign of the shuffle merging A before B into increasing order:
// dx_A ^ dx_B = sign * dx_{A|B}. A and B must be disjoint.
inline int merge_sign(IndexMask a, IndexMask b) {
  int inv = 0;
  for (int i = 0; i < kMaxDim; ++i) {
    if (b & (IndexMask{1} << i)) {
      // count elements of A above i
      inv += mask_count(a & ~((IndexMask{2} << i) - 1));
    }
  }
  return (inv % 2 == 0) ? 1 : -1;
}

// Sign s such that dx_J ^ dx_{J^c} = s * dx_1^...^dx_m, with J^c relative
// to the full mask of dimension m.
inline int complement_sign(IndexMask j, int m) {
  IndexMask full = (IndexMask{1} << m) - 1;
  return merge_sign(j, full & ~j);
}

// All increasing p-subsets of {0..m-1}, in lexicographic order.
const std::vector<IndexMask>& combinations(int m, int p);

// Position of mask within combinations(m, p).
int combination_position(int m, int p, IndexMask mask);

// Sign and sorted mask for an arbitrary (possibly unsorted) index tuple;
// returns 0 sign when the tuple has a repeated index.
int tuple_sign(const std::vector<int>& tuple, IndexMask* mask_out);

// Determinant of a k x k matrix stored row-major (k <= kMaxDim).
double det_small(const double* m, int k);

std::string to_string(const Vec& v);

}  // namespace currents

#endif
