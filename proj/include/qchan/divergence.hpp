#pragma once

// Quantum Jensen-Shannon divergence and the transmission distance it induces.

#include "qchan/state.hpp"

#include <vector>

namespace qchan {

// S((rho+sigma)/2) - S(rho)/2 - S(sigma)/2, clamped to [0, 1].
double qjsd(const DensityMatrix& rho, const DensityMatrix& sigma);

// Holevo-type ensemble divergence S(sum w_i rho_i) - sum w_i S(rho_i),
// clamped to [0, log2(number of states)].
double qjsd_ensemble(const std::vector<double>& weights,
                     const std::vector<DensityMatrix>& states);

// sqrt(QJSD); a metric on density matrices.
double transmission_distance(const DensityMatrix& rho, const DensityMatrix& sigma);

struct StateBounds {
  double lower = 0.0;           // T/sqrt(2)
  double value = 0.0;           // transmission distance
  double upper_trace = 0.0;     // sqrt(T)
  double upper_entropic = 0.0;  // entropic distance
  bool all_hold = false;
};

StateBounds state_bounds_report(const DensityMatrix& rho, const DensityMatrix& sigma);

}  // namespace qchan
