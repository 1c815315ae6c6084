#include "qchan/hamiltonian.hpp"

#include <unsupported/Eigen/MatrixFunctions>

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace qchan {

HamiltonianSpec::HamiltonianSpec(double offset, const Vector3& direction)
    : h0(offset), axis(direction) {
  if (std::abs(axis.norm() - 1.0) > 1e-12) {
    throw std::invalid_argument("Hamiltonian axis must be a unit vector");
  }
}

Matrix3 axis_cross(const Vector3& h) {
  Matrix3 cross;
  cross << 0.0, -h[2], h[1],
           h[2], 0.0, -h[0],
          -h[1], h[0], 0.0;
  return cross;
}

Matrix3 unitary_distortion(const Vector3& h, double t) {
  const double c = std::cos(2.0 * t);
  const double s = std::sin(2.0 * t);
  const Matrix3 outer = h * h.transpose();
  return c * (Matrix3::Identity() - outer) + s * axis_cross(h) + outer;
}

Matrix3 unitary_distortion_expm(const Vector3& h, double t) {
  return Matrix3(2.0 * t * axis_cross(h)).exp();
}

Matrix unitary_matrix(const HamiltonianSpec& spec, double t) {
  Matrix h_sigma = Matrix::Zero(2, 2);
  for (int i = 0; i < 3; ++i) h_sigma += spec.axis[i] * pauli(i + 1);
  const Complex phase = std::exp(Complex(0.0, -spec.h0 * t));
  return phase * (std::cos(t) * Matrix::Identity(2, 2) -
                  Complex(0.0, 1.0) * std::sin(t) * h_sigma);
}

FanoForm decohered_channel(const Vector3& h, double gamma, double t) {
  if (gamma < 0.0) throw std::invalid_argument("decay rate must be nonnegative");
  if (t < 0.0) throw std::invalid_argument("evolution time must be nonnegative");
  FanoForm fano;
  fano.distortion = std::exp(-gamma * t) * unitary_distortion(h.normalized(), t);
  return fano;
}

std::vector<Vector3> bloch_trajectory(const HamiltonianSpec& spec, double gamma,
                                      const Vector3& start,
                                      const std::vector<double>& times) {
  std::vector<Vector3> points;
  points.reserve(times.size());
  for (double t : times) {
    points.push_back(std::exp(-gamma * t) * unitary_distortion(spec.axis, t) * start);
  }
  return points;
}

double tr_lambda_product(double theta, double t) {
  const double st = std::sin(t);
  const double s2t = std::sin(2.0 * t);
  return 2.0 * std::cos(2.0 * theta) * st * st * st * st +
         2.0 * std::cos(theta) * s2t * s2t + std::cos(2.0 * t) +
         0.75 * std::cos(4.0 * t) + 1.25;
}

double noiseless_t_max(double theta) {
  const double c = std::cos(theta);
  if (c >= 0.0) return std::numbers::pi / 2.0;
  return 0.5 * std::acos((c + 1.0) / (c - 1.0));
}

double error_probability(double gamma, double t) {
  return 0.5 * (1.0 - std::exp(-gamma * t) * std::abs(std::sin(t)));
}

double error_t_opt(double gamma) {
  if (gamma < 0.0) throw std::invalid_argument("decay rate must be nonnegative");
  if (gamma == 0.0) return std::numbers::pi / 2.0;
  return std::atan(1.0 / gamma);
}

TimeScan optimal_time_scan(double theta, double gamma, ScanMeasure measure,
                           int t_points) {
  if (t_points < 8) throw std::invalid_argument("time grid too coarse");
  const Vector3 h1 = Vector3::UnitZ();
  const Vector3 h2(std::sin(theta), 0.0, std::cos(theta));

  // Score is maximized; for the error probability that means its negative.
  auto score = [&](double t) {
    switch (measure) {
      case ScanMeasure::transmission_iso:
        return d_t_iso(decohered_channel(h1, gamma, t), decohered_channel(h2, gamma, t));
      case ScanMeasure::transmission_k1: {
        const double alpha = std::exp(-gamma * t);
        return entropic_divergence_scaled_rotation(alpha, unitary_distortion(h1, t),
                                                   alpha, unitary_distortion(h2, t))
            .value;
      }
      case ScanMeasure::error_prob:
        return -error_probability(gamma, t);
    }
    return 0.0;
  };
  const double sign = measure == ScanMeasure::error_prob ? -1.0 : 1.0;

  const double step = std::numbers::pi / t_points;
  TimeScan scan;
  scan.curve.reserve(t_points);
  int best_k = 1;
  double best_score = -std::numeric_limits<double>::infinity();
  for (int k = 1; k <= t_points; ++k) {
    const double t = k * step;
    const double s = score(t);
    scan.curve.push_back({t, sign * s});
    if (s > best_score) {
      best_score = s;
      best_k = k;
    }
  }

  const double lo = (best_k - 1) * step;
  const double hi = std::min((best_k + 1) * step, std::numbers::pi);
  const LinePoint refined = golden_section_max(score, lo, hi, 1e-8);
  if (refined.value > best_score) {
    scan.t_star = refined.x;
    scan.value = sign * refined.value;
  } else {
    scan.t_star = best_k * step;
    scan.value = sign * best_score;
  }
  return scan;
}

}  // namespace qchan
