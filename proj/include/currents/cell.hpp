#ifndef CURRENTS_CELL_HPP
#define CURRENTS_CELL_HPP

#include <limits>
#include <vector>

#include "currents/geometry.hpp"
#include "currents/polynomial.hpp"

namespace currents {

// Oriented weighted cell: a componentwise-polynomial map [0,1]^k -> R^m.
struct Cell {
  int m = 0;
  int k = 0;
  std::vector<Polynomial> comps;  // m polynomials in k variables
  double weight = 1.0;
  int orientation = +1;

  Vec eval(const Vec& u) const;
  void jacobian(const Vec& u, double* J) const;  // row-major m x k
  Box bounding_box() const;
  Box image_box(const Box& param_box) const;  // interval hull of sigma(param_box)

  // Largest |dsigma/du| entry over the parameter cube; used to convert an
  // ambient feature scale to a parameter-space one.
  double jacobian_sup() const;

  bool same_parametrization(const Cell& o) const;

 private:
  // partial derivatives, built on first jacobian() call
  mutable std::vector<Polynomial> jac_cache_;

 public:
};

// Rejects cells whose Jacobian drops rank at interior sample nodes.
void validate_cell_immersed(const Cell& c);

// Homogeneous chain of k-cells in R^m: degree p = m - k as a current.
struct CellChain {
  int m = 0;
  int k = 0;
  std::vector<Cell> cells;
  bool compact_flag = true;
  // Distance from the represented content to the truncation boundary; the
  // mollifier scale must stay below it. Infinite for genuinely compact chains.
  double margin = std::numeric_limits<double>::infinity();

  int degree() const { return m - k; }
  Box bounding_box() const;
  CellChain scaled(double s) const;
  CellChain reversed() const;
  bool empty() const { return cells.empty(); }

  void validate() const;
};

CellChain concat(const CellChain& a, const CellChain& b);

// Chain of (k-1)-faces with induced orientations; identically parametrized
// opposite faces cancel exactly. k = 0 yields the empty chain.
CellChain boundary(const CellChain& chain);

bool is_closed(const CellChain& chain);

}  // namespace currents

#endif
