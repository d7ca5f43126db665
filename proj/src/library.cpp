#include "currents/library.hpp"

#include <cmath>

#include "currents/errors.hpp"

namespace currents {

namespace {

Polynomial affine_1d(int nvars, int var, double at0, double at1) {
  // value at0 + (at1-at0) * u_var
  Polynomial p = Polynomial::constant(nvars, at0);
  Polynomial ramp = Polynomial::variable(nvars, var).scaled(at1 - at0);
  return p + ramp;
}

Cell make_cell(int m, int k, std::vector<Polynomial> comps, double weight,
               int orientation) {
  Cell c;
  c.m = m;
  c.k = k;
  c.comps = std::move(comps);
  c.weight = weight;
  c.orientation = orientation;
  validate_cell_immersed(c);
  return c;
}

}  // namespace

CellChain make_segment(const Vec& a, const Vec& b, double weight) {
  int m = a.size();
  std::vector<Polynomial> comps;
  for (int i = 0; i < m; ++i) comps.push_back(affine_1d(1, 0, a[i], b[i]));
  CellChain c;
  c.m = m;
  c.k = 1;
  c.cells.push_back(make_cell(m, 1, std::move(comps), weight, +1));
  return c;
}

CellChain make_axis_segment(int m, int axis, double t0, double t1,
                            const Vec& base, double weight) {
  Vec a = base, b = base;
  a.n = m;
  b.n = m;
  a[axis] = t0;
  b[axis] = t1;
  return make_segment(a, b, weight);
}

CellChain make_monomial_curve(int m, int k, int first, int second, double half) {
  // parameter u in [0,1] -> t = half*(2u-1); x_first = t^k, x_second = t
  Polynomial t = affine_1d(1, 0, -half, half);
  Polynomial tk = Polynomial::constant(1, 1.0);
  for (int i = 0; i < k; ++i) tk = tk * t;
  std::vector<Polynomial> comps;
  for (int i = 0; i < m; ++i) comps.push_back(Polynomial::constant(1, 0.0));
  comps[first] = tk;
  comps[second] = t;
  CellChain c;
  c.m = m;
  c.k = 1;
  c.cells.push_back(make_cell(m, 1, std::move(comps), 1.0, +1));
  return c;
}

CellChain make_oval(double cx, double cy, double rx, double ry) {
  // upper arc runs left to right, lower arc right to left
  auto arc = [&](int dir) {
    Polynomial t = affine_1d(1, 0, -1.0 * dir, 1.0 * dir);  // dir = +1 or -1
    Polynomial x = Polynomial::constant(1, cx) + t.scaled(rx);
    Polynomial hump = Polynomial::constant(1, 1.0) - t * t;  // 1 - t^2
    Polynomial y = Polynomial::constant(1, cy) + hump.scaled(ry * dir);
    return std::vector<Polynomial>{x, y};
  };
  CellChain c;
  c.m = 2;
  c.k = 1;
  c.cells.push_back(make_cell(2, 1, arc(+1), 1.0, +1));
  c.cells.push_back(make_cell(2, 1, arc(-1), 1.0, +1));
  return c;
}

CellChain make_plane_patch(int m, int axis_a, int axis_b, const Box& extent,
                           const Vec& base, double weight) {
  std::vector<Polynomial> comps;
  for (int i = 0; i < m; ++i) comps.push_back(Polynomial::constant(2, base[i]));
  comps[axis_a] = affine_1d(2, 0, extent.lo[0], extent.hi[0]);
  comps[axis_b] = affine_1d(2, 1, extent.lo[1], extent.hi[1]);
  CellChain c;
  c.m = m;
  c.k = 2;
  c.cells.push_back(make_cell(m, 2, std::move(comps), weight, +1));
  return c;
}

CellChain make_cuboid_boundary(const Box& box) {
  if (box.dim() != 3) throw DimensionMismatch("cuboid boundary expects m = 3");
  std::vector<Polynomial> comps;
  for (int i = 0; i < 3; ++i)
    comps.push_back(affine_1d(3, i, box.lo[i], box.hi[i]));
  CellChain solid;
  solid.m = 3;
  solid.k = 3;
  Cell c;
  c.m = 3;
  c.k = 3;
  c.comps = std::move(comps);
  c.weight = 1.0;
  c.orientation = +1;
  solid.cells.push_back(std::move(c));
  return boundary(solid);
}

CellChain make_complex_graph_curve(int pow, double half) {
  // z1 = u' + i v', z2 = z1^pow; complex orientation of the z1 chart
  Polynomial re = affine_1d(2, 0, -half, half);
  Polynomial im = affine_1d(2, 1, -half, half);
  Polynomial zr = Polynomial::constant(2, 1.0);
  Polynomial zi = Polynomial::constant(2, 0.0);
  for (int i = 0; i < pow; ++i) {
    Polynomial nr = zr * re - zi * im;
    Polynomial ni = zr * im + zi * re;
    zr = nr;
    zi = ni;
  }
  std::vector<Polynomial> comps{re, im, zr, zi};
  CellChain c;
  c.m = 4;
  c.k = 2;
  c.cells.push_back(make_cell(4, 2, std::move(comps), 1.0, +1));
  return c;
}

CellChain make_complex_line(double half) {
  Polynomial re = affine_1d(2, 0, -half, half);
  Polynomial im = affine_1d(2, 1, -half, half);
  std::vector<Polynomial> comps{re, im, Polynomial::constant(2, 0.0),
                                Polynomial::constant(2, 0.0)};
  CellChain c;
  c.m = 4;
  c.k = 2;
  c.cells.push_back(make_cell(4, 2, std::move(comps), 1.0, +1));
  return c;
}

CellChain make_product_chain(const CellChain& a, const CellChain& b) {
  CellChain c;
  c.m = a.m + b.m;
  c.k = a.k + b.k;
  c.compact_flag = a.compact_flag && b.compact_flag;
  c.margin = std::min(a.margin, b.margin);
  for (const auto& ca : a.cells) {
    for (const auto& cb : b.cells) {
      std::vector<Polynomial> comps;
      std::vector<Polynomial> lift_a, lift_b;
      for (int j = 0; j < a.k; ++j)
        lift_a.push_back(Polynomial::variable(c.k, j));
      for (int j = 0; j < b.k; ++j)
        lift_b.push_back(Polynomial::variable(c.k, a.k + j));
      for (int i = 0; i < a.m; ++i)
        comps.push_back(a.k == 0
                            ? Polynomial::constant(c.k, ca.comps[i].eval(Vec(0)))
                            : ca.comps[i].compose(lift_a));
      for (int i = 0; i < b.m; ++i)
        comps.push_back(b.k == 0
                            ? Polynomial::constant(c.k, cb.comps[i].eval(Vec(0)))
                            : cb.comps[i].compose(lift_b));
      c.cells.push_back(make_cell(c.m, c.k, std::move(comps),
                                  ca.weight * cb.weight,
                                  ca.orientation * cb.orientation));
    }
  }
  return c;
}

CellChain make_diagonal(int m, const Box& box) {
  std::vector<Polynomial> comps;
  for (int i = 0; i < m; ++i)
    comps.push_back(affine_1d(m, i, box.lo[i], box.hi[i]));
  std::vector<Polynomial> both = comps;
  for (int i = 0; i < m; ++i) both.push_back(comps[i]);
  CellChain c;
  c.m = 2 * m;
  c.k = m;
  c.cells.push_back(make_cell(2 * m, m, std::move(both), 1.0, +1));
  return c;
}

CellChain make_graph(const CellChain& base,
                     const std::vector<Polynomial>& f_components) {
  CellChain c;
  c.m = base.m + static_cast<int>(f_components.size());
  c.k = base.k;
  c.compact_flag = base.compact_flag;
  c.margin = base.margin;
  for (const auto& cell : base.cells) {
    std::vector<Polynomial> comps = cell.comps;
    for (const auto& f : f_components) comps.push_back(f.compose(cell.comps));
    c.cells.push_back(
        make_cell(c.m, c.k, std::move(comps), cell.weight, cell.orientation));
  }
  return c;
}

CellChain& set_truncation_margin(CellChain& c, double margin) {
  c.margin = margin;
  return c;
}

SmoothForm make_bump_test_function(int m, const Vec& center, double radius) {
  FieldPtr f = make_bump_field(center, radius);
  return SmoothForm::zero_form(m, f);
}

SmoothForm make_plateau_window(int m, const Box& inner, double ramp) {
  Box outer = inner.expanded(ramp);
  FieldPtr f = make_plateau_field(inner, outer);
  return SmoothForm::zero_form(m, f, outer);
}

SmoothForm make_monomial_form(int m, IndexMask mask, Polynomial coeff,
                              const Box& inner, double ramp) {
  int p = mask_count(mask);
  Box outer = inner.expanded(ramp);
  FieldPtr cutoff = make_plateau_field(inner, outer);
  std::vector<FieldPtr> cs;
  for (IndexMask k : combinations(m, p)) {
    if (k == mask)
      cs.push_back(make_product_field(make_polynomial_field(coeff), cutoff));
    else
      cs.push_back(make_constant_field(0.0));
  }
  return SmoothForm(m, p, std::move(cs), outer);
}

SmoothForm make_random_test_form(std::mt19937_64& rng, int m, int p,
                                 const Box& inner, double ramp) {
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  Box outer = inner.expanded(ramp);
  FieldPtr cutoff = make_plateau_field(inner, outer);
  std::vector<FieldPtr> cs;
  for (std::size_t ci = 0; ci < combinations(m, p).size(); ++ci) {
    Polynomial poly(m);
    poly.add_term(u(rng), std::vector<int>(m, 0));
    for (int i = 0; i < m; ++i) {
      std::vector<int> e(m, 0);
      e[i] = 1;
      poly.add_term(u(rng), e);
      e[i] = 2;
      poly.add_term(u(rng), e);
    }
    cs.push_back(make_product_field(make_polynomial_field(poly), cutoff));
  }
  return SmoothForm(m, p, std::move(cs), outer);
}

}  // namespace currents
