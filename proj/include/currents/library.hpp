#ifndef CURRENTS_LIBRARY_HPP
#define CURRENTS_LIBRARY_HPP

#include <random>

#include "currents/cell.hpp"
#include "currents/form.hpp"
#include "currents/polynomial.hpp"

namespace currents {

// ------------------------------------------------------------------- chains

// Straight segment from a to b.
CellChain make_segment(const Vec& a, const Vec& b, double weight = 1.0);

// Axis-aligned segment: coordinate `axis` runs over [t0,t1], the others are
// fixed at `base`. Truncated stand-in for a line; margin must be set by the
// caller via set_truncation_margin.
CellChain make_axis_segment(int m, int axis, double t0, double t1,
                            const Vec& base, double weight = 1.0);

// x_first = x_second^k over x_second in [-half, half] (k >= 1), oriented by
// increasing x_second. Lives in the (first,second) coordinate plane of R^m.
CellChain make_monomial_curve(int m, int k, int first, int second, double half);

// Closed oval made of two parabolic arcs through (cx +- rx, cy); dyadic
// inputs keep the endpoints bitwise identical so the chain closes exactly.
CellChain make_oval(double cx, double cy, double rx, double ry);

// 2-cell patch of the plane spanned by two axes, at `base` elsewhere.
CellChain make_plane_patch(int m, int axis_a, int axis_b, const Box& extent,
                           const Vec& base, double weight = 1.0);

// Boundary of an axis-aligned cuboid: a closed surface (m = 3).
CellChain make_cuboid_boundary(const Box& box);

// Complex curve {z2 = z1^pow} in C^2 = R^4 with coordinates (x1,y1,x2,y2),
// parametrized over |Re z1|,|Im z1| <= half, complex orientation.
CellChain make_complex_graph_curve(int pow, double half);

// Complex line {z2 = 0} patch in R^4.
CellChain make_complex_line(double half);

// Product chain: cells sigma(u,v) = (sigma1(u), sigma2(v)).
CellChain make_product_chain(const CellChain& a, const CellChain& b);

// Diagonal {(x,x)} of box x box as an m-cell in R^{2m}.
CellChain make_diagonal(int m, const Box& box);

// Graph {(x, f(x))} of a polynomial map over the cells of `base`.
CellChain make_graph(const CellChain& base,
                     const std::vector<Polynomial>& f_components);

CellChain& set_truncation_margin(CellChain& c, double margin);

// -------------------------------------------------------------------- forms

// 0-form bump with peak value 1 at `center`.
SmoothForm make_bump_test_function(int m, const Vec& center, double radius);

// Smooth plateau 0-form: 1 on `inner`, 0 outside inner expanded by ramp.
SmoothForm make_plateau_window(int m, const Box& inner, double ramp);

// p-form with a single component b(x) dx_mask, times a plateau on `inner`.
SmoothForm make_monomial_form(int m, IndexMask mask, Polynomial coeff,
                              const Box& inner, double ramp);

// Seeded random polynomial-times-plateau test form (degree p, coefficients
// of total degree <= 2 with entries in [-1,1]).
SmoothForm make_random_test_form(std::mt19937_64& rng, int m, int p,
                                 const Box& inner, double ramp);

}  // namespace currents

#endif
