// Qubit Hamiltonian evolution H = h0 + h . sigma under isotropic decoherence:
// the induced Bloch map, distinguishability of two axes as a function of the
// evolution time, and the measurement error-probability benchmark.
#pragma once

#include <vector>

#include "qchan/channel.hpp"
#include "qchan/metrics.hpp"
#include "qchan/optimize.hpp"

namespace qchan {

struct HamiltonianSpec {
  double h0 = 0.0;        // energy offset; only contributes a global phase
  Vector3 axis = Vector3::UnitZ();

  HamiltonianSpec(double offset, const Vector3& direction);
};

// Cross-product generator [h]x with [h]x v = h x v.
Matrix3 axis_cross(const Vector3& h);

// Bloch rotation produced by exp(-i t h.sigma): rotation about h by angle 2t.
Matrix3 unitary_distortion(const Vector3& h, double t);

// Same rotation via the matrix exponential exp(2t [h]x); cross-check route.
Matrix3 unitary_distortion_expm(const Vector3& h, double t);

Matrix unitary_matrix(const HamiltonianSpec& spec, double t);

// Isotropic decay at rate gamma on top of the rotation: r -> e^(-gamma t) R r.
FanoForm decohered_channel(const Vector3& h, double gamma, double t);

std::vector<Vector3> bloch_trajectory(const HamiltonianSpec& spec, double gamma,
                                      const Vector3& start,
                                      const std::vector<double>& times);

// Tr[R1(t)^T R2(t)] for two rotation axes an angle theta apart.
double tr_lambda_product(double theta, double t);

// First time the noiseless axes-at-theta pair is maximally distinguishable.
double noiseless_t_max(double theta);

// Best single-shot discrimination error for one rotation against the identity
// frame, probing in the rotation plane: (1 - e^(-gamma t) |sin t|) / 2.
double error_probability(double gamma, double t);

// Minimizer of the error probability over t: arctan(1/gamma), pi/2 at gamma=0.
double error_t_opt(double gamma);

enum class ScanMeasure { transmission_iso, transmission_k1, error_prob };

struct TimeScan {
  double t_star = 0.0;
  double value = 0.0;               // measure at t_star (error probability for error_prob)
  std::vector<LinePoint> curve;     // measure sampled on the time grid
};

// Scans t in (0, pi] for the axes z and (sin theta, 0, cos theta) at equal
// decay rate gamma, then refines the best grid cell by golden section.
// transmission_* measures are maximized; error_prob is minimized.
TimeScan optimal_time_scan(double theta, double gamma, ScanMeasure measure,
                           int t_points = 512);

}  // namespace qchan
