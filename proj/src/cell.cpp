#include "currents/cell.hpp"

#include <algorithm>
#include <cmath>

#include "currents/errors.hpp"
#include "currents/quadrature.hpp"

namespace currents {

Vec Cell::eval(const Vec& u) const {
  Vec x(m);
  for (int i = 0; i < m; ++i) x[i] = comps[i].eval(u);
  return x;
}

void Cell::jacobian(const Vec& u, double* J) const {
  if (jac_cache_.size() != static_cast<std::size_t>(m * k)) {
    jac_cache_.clear();
    jac_cache_.reserve(static_cast<std::size_t>(m) * k);
    for (int i = 0; i < m; ++i)
      for (int j = 0; j < k; ++j) jac_cache_.push_back(comps[i].partial(j));
  }
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < k; ++j) J[i * k + j] = jac_cache_[i * k + j].eval(u);
}

Box Cell::bounding_box() const { return image_box(Box::unit(k)); }

Box Cell::image_box(const Box& param_box) const {
  Box b;
  b.lo = Vec(m);
  b.hi = Vec(m);
  for (int i = 0; i < m; ++i) {
    Interval r = comps[i].eval_interval(param_box);
    b.lo[i] = r.lo;
    b.hi[i] = r.hi;
  }
  return b;
}

double Cell::jacobian_sup() const {
  double s = 0;
  Box unit = Box::unit(k);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < k; ++j) {
      Interval r = comps[i].partial(j).eval_interval(unit);
      s = std::max(s, std::max(std::abs(r.lo), std::abs(r.hi)));
    }
  return s;
}

bool Cell::same_parametrization(const Cell& o) const {
  if (m != o.m || k != o.k) return false;
  for (int i = 0; i < m; ++i)
    if (!(comps[i] == o.comps[i])) return false;
  return true;
}

void validate_cell_immersed(const Cell& c) {
  if (c.k == 0) return;
  if (c.k > c.m) throw ValidationError("cell parameter dimension exceeds ambient");
  const auto& nodes = gl_nodes(4);
  std::vector<double> J(c.m * c.k);
  std::array<int, kMaxDim> idx{};
  Vec u(c.k);
  while (true) {
    for (int d = 0; d < c.k; ++d) u[d] = nodes[idx[d]];
    c.jacobian(u, J.data());
    // Gram determinant of the k columns
    double G[kMaxDim * kMaxDim];
    double scale = 0;
    for (int a = 0; a < c.k; ++a)
      for (int b = 0; b < c.k; ++b) {
        double s = 0;
        for (int i = 0; i < c.m; ++i) s += J[i * c.k + a] * J[i * c.k + b];
        G[a * c.k + b] = s;
        if (a == b) scale = std::max(scale, s);
      }
    double det = det_small(G, c.k);
    if (!(det > 1e-10 * std::pow(std::max(scale, 1e-300), c.k)))
      throw ValidationError("degenerate cell: Jacobian rank below k at a node");
    int d = 0;
    while (d < c.k && ++idx[d] == 4) {
      idx[d] = 0;
      ++d;
    }
    if (d == c.k) break;
  }
}

Box CellChain::bounding_box() const {
  if (cells.empty()) return Box::cube(m, 0, 0);
  Box b = cells[0].bounding_box();
  for (std::size_t i = 1; i < cells.size(); ++i)
    b = b.hull(cells[i].bounding_box());
  return b;
}

CellChain CellChain::scaled(double s) const {
  CellChain c = *this;
  for (auto& cell : c.cells) cell.weight *= s;
  return c;
}

CellChain CellChain::reversed() const {
  CellChain c = *this;
  for (auto& cell : c.cells) cell.orientation = -cell.orientation;
  return c;
}

void CellChain::validate() const {
  for (const auto& c : cells) {
    if (c.m != m || c.k != k)
      throw DimensionMismatch("chain cells disagree on (m,k)");
    if (static_cast<int>(c.comps.size()) != m)
      throw DimensionMismatch("cell component count");
    if (c.orientation != 1 && c.orientation != -1)
      throw ValidationError("cell orientation must be +1 or -1");
    validate_cell_immersed(c);
  }
  if (compact_flag) {
    Box b = bounding_box();
    for (int i = 0; i < m; ++i)
      if (!std::isfinite(b.lo[i]) || !std::isfinite(b.hi[i]))
        throw ValidationError("compact chain with unbounded box");
  }
}

CellChain concat(const CellChain& a, const CellChain& b) {
  if (a.m != b.m || a.k != b.k)
    throw DimensionMismatch("cannot concatenate chains of different (m,k)");
  CellChain c = a;
  for (const auto& cell : b.cells) c.cells.push_back(cell);
  c.compact_flag = a.compact_flag && b.compact_flag;
  c.margin = std::min(a.margin, b.margin);
  return c;
}

namespace {

// Face u_axis = side of the unit cube, remaining variables keep their order.
Cell face_cell(const Cell& c, int axis, double side) {
  Cell f;
  f.m = c.m;
  f.k = c.k - 1;
  f.weight = c.weight;
  f.orientation = c.orientation;
  f.comps.reserve(c.m);
  for (int i = 0; i < c.m; ++i)
    f.comps.push_back(c.comps[i].substitute(axis, side));
  return f;
}

// Induced sign for the face u_a = s of [0,1]^k.
int face_sign(int axis, double side) {
  int s = (axis % 2 == 0) ? 1 : -1;
  return side == 1.0 ? s : -s;
}

}  // namespace

CellChain boundary(const CellChain& chain) {
  CellChain out;
  out.m = chain.m;
  out.k = std::max(chain.k - 1, 0);
  out.compact_flag = chain.compact_flag;
  out.margin = chain.margin;
  if (chain.k == 0) return out;

  std::vector<Cell> faces;
  for (const auto& c : chain.cells) {
    for (int a = 0; a < chain.k; ++a) {
      for (double side : {1.0, 0.0}) {
        Cell f = face_cell(c, a, side);
        f.weight = c.weight;
        f.orientation = c.orientation * face_sign(a, side);
        faces.push_back(std::move(f));
      }
    }
  }
  // cancel identically parametrized faces by summing signed weights
  std::vector<bool> used(faces.size(), false);
  for (std::size_t i = 0; i < faces.size(); ++i) {
    if (used[i]) continue;
    double sw = faces[i].weight * faces[i].orientation;
    for (std::size_t j = i + 1; j < faces.size(); ++j) {
      if (used[j]) continue;
      if (faces[i].same_parametrization(faces[j])) {
        sw += faces[j].weight * faces[j].orientation;
        used[j] = true;
      }
    }
    if (sw != 0.0) {
      Cell f = faces[i];
      f.weight = std::abs(sw);
      f.orientation = sw > 0 ? 1 : -1;
      out.cells.push_back(std::move(f));
    }
  }
  return out;
}

bool is_closed(const CellChain& chain) {
  return boundary(chain).cells.empty();
}

}  // namespace currents
