#include "currents/lebesgue.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

#include "currents/errors.hpp"
#include "currents/quadrature.hpp"

namespace currents {

namespace {

struct GridStats {
  double max_density = 0;
  double peak_fraction = 0;
};

GridStats grid_mass(const CellChain& T, const std::vector<int>& axes,
                    const Box& plane_box, int res) {
  const int k = T.k;
  const int d = static_cast<int>(axes.size());
  std::vector<double> mass(static_cast<std::size_t>(std::pow(res, d)), 0.0);
  const int samples_per_axis = std::max(8 * res / 4, 32);

  for (const auto& cell : T.cells) {
    std::array<int, kMaxDim> idx{};
    Vec u(k);
    std::vector<double> J(cell.m * k);
    const double du = 1.0 / samples_per_axis;
    while (true) {
      for (int a = 0; a < k; ++a) u[a] = (idx[a] + 0.5) * du;
      Vec x = cell.eval(u);
      cell.jacobian(u, J.data());
      // k-volume factor sqrt(det J^T J)
      double G[kMaxDim * kMaxDim];
      for (int a = 0; a < k; ++a)
        for (int b = 0; b < k; ++b) {
          double s = 0;
          for (int i = 0; i < cell.m; ++i) s += J[i * k + a] * J[i * k + b];
          G[a * k + b] = s;
        }
      double vol = std::sqrt(std::max(det_small(G, k), 0.0));
      double w = std::abs(cell.weight) * vol * std::pow(du, k);
      // bin
      long bin = 0;
      bool inside = true;
      for (int a = 0; a < d; ++a) {
        double lo = plane_box.lo[a], hi = plane_box.hi[a];
        double t = (x[axes[a]] - lo) / std::max(hi - lo, 1e-300);
        int cellidx = static_cast<int>(t * res);
        if (cellidx < 0 || cellidx >= res) {
          inside = false;
          break;
        }
        bin = bin * res + cellidx;
      }
      if (inside) mass[bin] += w;

      int a = 0;
      while (a < k && ++idx[a] == samples_per_axis) {
        idx[a] = 0;
        ++a;
      }
      if (a == k) break;
    }
  }

  double total = 0, peak = 0;
  for (double v : mass) {
    total += v;
    peak = std::max(peak, v);
  }
  double cellvol = 1.0;
  for (int a = 0; a < d; ++a) cellvol *= plane_box.width(a) / res;
  GridStats st;
  st.max_density = peak / std::max(cellvol, 1e-300);
  st.peak_fraction = total > 0 ? peak / total : 0.0;
  return st;
}

}  // namespace

DensityReport lebesgue_diagnostic(const CellChain& T, IndexMask plane_mask,
                                  int grid_resolution) {
  std::vector<int> axes = mask_indices(plane_mask);
  if (static_cast<int>(axes.size()) != T.k)
    throw DimensionMismatch("projection plane dimension must equal m - p");
  for (int a : axes)
    if (a >= T.m) throw DimensionMismatch("projection axis out of range");

  Box bbox = T.bounding_box();
  Box plane;
  plane.lo = Vec(static_cast<int>(axes.size()));
  plane.hi = Vec(static_cast<int>(axes.size()));
  for (std::size_t i = 0; i < axes.size(); ++i) {
    double pad = 1e-9 + 1e-9 * std::abs(bbox.hi[axes[i]] - bbox.lo[axes[i]]);
    plane.lo[static_cast<int>(i)] = bbox.lo[axes[i]] - pad;
    plane.hi[static_cast<int>(i)] = bbox.hi[axes[i]] + pad;
  }

  int res = std::max(grid_resolution, 4);
  GridStats coarse = grid_mass(T, axes, plane, res);
  GridStats fine = grid_mass(T, axes, plane, 2 * res);

  DensityReport r;
  r.max_density = fine.max_density;
  r.max_density_coarse = coarse.max_density;
  r.peak_fraction = fine.peak_fraction;
  r.suspect_atom = coarse.peak_fraction > 0.5 && fine.peak_fraction > 0.5;
  double growth =
      fine.max_density / std::max(coarse.max_density, 1e-300);
  r.integrable_singularity = !r.suspect_atom && growth > 1.25;
  if (r.suspect_atom)
    r.note = "mass concentrates in a single grid cell at two refinements";
  else if (r.integrable_singularity)
    r.note = "max density grows under refinement without concentration";
  else
    r.note = "density bounded";
  return r;
}

}  // namespace currents
