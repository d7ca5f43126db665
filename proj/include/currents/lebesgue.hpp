#ifndef CURRENTS_LEBESGUE_HPP
#define CURRENTS_LEBESGUE_HPP

#include <string>

#include "currents/cell.hpp"
#include "currents/geometry.hpp"

namespace currents {

// Advisory density report for the pushforward of a chain's mass measure
// under a coordinate-plane projection. Never blocks computation.
struct DensityReport {
  double max_density = 0.0;       // finest grid
  double max_density_coarse = 0.0;
  double peak_fraction = 0.0;     // share of mass in the heaviest cell
  bool suspect_atom = false;
  bool integrable_singularity = false;
  std::string note;
};

// plane_mask selects the m-p = k coordinate axes to project onto.
DensityReport lebesgue_diagnostic(const CellChain& T, IndexMask plane_mask,
                                  int grid_resolution);

}  // namespace currents

#endif
