#pragma once

// Derivative-free maximizers used by the channel-divergence searches:
// a Fibonacci sphere lattice, a Nelder-Mead simplex, and golden-section
// refinement on a line.

#include "qchan/types.hpp"

#include <functional>
#include <vector>

namespace qchan {

// count quasi-uniform points on the unit sphere (golden-angle spiral).
std::vector<Vector3> fibonacci_sphere(int count);

struct SimplexOptions {
  int max_iters = 200;
  double tol = 1e-9;  // absolute spread of objective values across the simplex
  double step = 0.25; // initial simplex edge length
};

struct SimplexResult {
  Eigen::VectorXd x;
  double value = 0.0;
  long evaluations = 0;
  bool converged = false;
};

SimplexResult nelder_mead_max(const std::function<double(const Eigen::VectorXd&)>& objective,
                              const Eigen::VectorXd& start, const SimplexOptions& opts = {});

struct LinePoint {
  double x = 0.0;
  double value = 0.0;
};

// Maximum of a unimodal objective on [lo, hi] to a resolution of xtol.
LinePoint golden_section_max(const std::function<double(double)>& objective,
                             double lo, double hi, double xtol);

}  // namespace qchan
