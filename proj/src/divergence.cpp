#include "qchan/divergence.hpp"

#include <algorithm>
#include <cmath>

namespace qchan {

namespace {

double clamp_divergence(double value, double cap) {
  if (value < -1e-12 || value > cap + 1e-12) {
    throw std::logic_error("divergence fell outside its provable range");
  }
  return std::clamp(value, 0.0, cap);
}

}  // namespace

double qjsd(const DensityMatrix& rho, const DensityMatrix& sigma) {
  if (rho.dim() != sigma.dim()) {
    throw std::invalid_argument("QJSD needs states of equal dimension");
  }
  const double mixed = entropy_bits(state_spectrum((rho.mat() + sigma.mat()) / 2.0));
  // single subtraction of the commutative sum keeps the value exactly symmetric
  const double value =
      mixed - 0.5 * (von_neumann_entropy(rho) + von_neumann_entropy(sigma));
  return clamp_divergence(value, 1.0);
}

double qjsd_ensemble(const std::vector<double>& weights,
                     const std::vector<DensityMatrix>& states) {
  if (weights.empty() || weights.size() != states.size()) {
    throw std::invalid_argument("ensemble needs one weight per state");
  }
  double total = 0.0;
  for (double w : weights) {
    if (w < -1e-12) throw std::invalid_argument("ensemble weights must be nonnegative");
    total += w;
  }
  if (std::abs(total - 1.0) > 1e-10) {
    throw std::invalid_argument("ensemble weights must sum to 1");
  }
  const Eigen::Index dim = states.front().dim();
  Matrix average = Matrix::Zero(dim, dim);
  double mean_entropy = 0.0;
  for (std::size_t i = 0; i < states.size(); ++i) {
    if (states[i].dim() != dim) {
      throw std::invalid_argument("ensemble states must share one dimension");
    }
    average += weights[i] * states[i].mat();
    if (weights[i] > 0.0) mean_entropy += weights[i] * von_neumann_entropy(states[i]);
  }
  const double value = entropy_bits(state_spectrum(average)) - mean_entropy;
  return clamp_divergence(value, std::log2(static_cast<double>(states.size())));
}

double transmission_distance(const DensityMatrix& rho, const DensityMatrix& sigma) {
  return std::sqrt(qjsd(rho, sigma));
}

StateBounds state_bounds_report(const DensityMatrix& rho, const DensityMatrix& sigma) {
  StateBounds report;
  const double t = trace_distance(rho, sigma);
  report.lower = t / std::sqrt(2.0);
  report.value = transmission_distance(rho, sigma);
  report.upper_trace = std::sqrt(t);
  report.upper_entropic = entropic_distance(rho, sigma);
  const double slack = 1e-9;
  report.all_hold = report.lower <= report.value + slack &&
                    report.value <= report.upper_trace + slack &&
                    report.value <= report.upper_entropic + slack;
  return report;
}

}  // namespace qchan
