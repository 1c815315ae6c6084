#include "qchan/state.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <utility>

namespace qchan {

namespace {

const Complex kI{0.0, 1.0};

Eigen::SelfAdjointEigenSolver<Matrix> solve_hermitian(const Matrix& a) {
  Eigen::SelfAdjointEigenSolver<Matrix> solver(hermitized(a));
  if (solver.info() != Eigen::Success) {
    throw std::runtime_error("eigendecomposition failed");
  }
  return solver;
}

}  // namespace

const Matrix& pauli(int alpha) {
  static const Matrix s0 = (Matrix(2, 2) << 1, 0, 0, 1).finished();
  static const Matrix s1 = (Matrix(2, 2) << 0, 1, 1, 0).finished();
  static const Matrix s2 = (Matrix(2, 2) << 0, -kI, kI, 0).finished();
  static const Matrix s3 = (Matrix(2, 2) << 1, 0, 0, -1).finished();
  switch (alpha) {
    case 0: return s0;
    case 1: return s1;
    case 2: return s2;
    case 3: return s3;
    default: throw std::invalid_argument("pauli index must be in 0..3");
  }
}

DensityMatrix::DensityMatrix(Matrix m) {
  if (m.rows() != m.cols() || m.rows() < 1) {
    throw std::invalid_argument("density matrix must be square and nonempty");
  }
  if ((m - m.adjoint()).cwiseAbs().maxCoeff() > kHermitianTol) {
    throw InvariantError("density matrix is not Hermitian");
  }
  if (std::abs(m.trace() - Complex(1.0)) > kTraceTol) {
    throw InvariantError("density matrix trace deviates from 1");
  }
  Eigen::SelfAdjointEigenSolver<Matrix> solver(hermitized(m), Eigen::EigenvaluesOnly);
  if (solver.eigenvalues().minCoeff() < -kPositivityTol) {
    throw InvariantError("density matrix has a negative eigenvalue");
  }
  m_ = std::move(m);
}

DensityMatrix DensityMatrix::unchecked(Matrix m) {
  DensityMatrix rho;
  rho.m_ = std::move(m);
  return rho;
}

PureState::PureState(Vector amplitudes) {
  if (amplitudes.size() < 1) throw std::invalid_argument("empty state vector");
  if (std::abs(amplitudes.norm() - 1.0) > 1e-12) {
    throw InvariantError("pure state amplitudes are not normalized");
  }
  v_ = std::move(amplitudes);
}

PureState PureState::normalized(Vector amplitudes) {
  const double n = amplitudes.norm();
  if (n < 1e-12) throw std::invalid_argument("cannot normalize a near-zero vector");
  PureState psi;
  psi.v_ = amplitudes / n;
  return psi;
}

DensityMatrix PureState::projector() const {
  return DensityMatrix::unchecked(v_ * v_.adjoint());
}

Eigen::VectorXd state_spectrum(const Matrix& a) {
  Eigen::SelfAdjointEigenSolver<Matrix> solver(hermitized(a), Eigen::EigenvaluesOnly);
  Eigen::VectorXd vals = solver.eigenvalues();
  for (Eigen::Index i = 0; i < vals.size(); ++i) {
    if (vals[i] < kEigenHardFloor) {
      throw InvariantError("spectrum entry below the negativity floor");
    }
    if (vals[i] <= kEigenFloor) vals[i] = 0.0;
  }
  return vals;
}

double entropy_bits(const Eigen::VectorXd& spectrum) {
  double s = 0.0;
  for (Eigen::Index i = 0; i < spectrum.size(); ++i) {
    const double p = spectrum[i];
    if (p < kEigenHardFloor) {
      throw InvariantError("negative weight in a spectrum");
    }
    if (p <= kEigenFloor) continue;
    s -= p * std::log2(p);
  }
  return s;
}

double von_neumann_entropy(const DensityMatrix& rho) {
  return entropy_bits(state_spectrum(rho.mat()));
}

double relative_entropy(const DensityMatrix& rho, const DensityMatrix& sigma) {
  if (rho.dim() != sigma.dim()) {
    throw std::invalid_argument("relative entropy needs states of equal dimension");
  }
  const auto rho_solver = solve_hermitian(rho.mat());
  const auto sigma_solver = solve_hermitian(sigma.mat());

  double value = 0.0;
  const Eigen::VectorXd& rv = rho_solver.eigenvalues();
  for (Eigen::Index i = 0; i < rv.size(); ++i) {
    if (rv[i] > kEigenFloor) value += rv[i] * std::log2(rv[i]);
  }
  const Eigen::VectorXd& sv = sigma_solver.eigenvalues();
  for (Eigen::Index j = 0; j < sv.size(); ++j) {
    const Vector basis = sigma_solver.eigenvectors().col(j);
    const double weight = std::real((basis.adjoint() * rho.mat() * basis)(0, 0));
    if (sv[j] <= kEigenFloor) {
      if (weight > 1e-10) return std::numeric_limits<double>::infinity();
      continue;
    }
    value -= weight * std::log2(sv[j]);
  }
  return value;
}

double trace_distance(const DensityMatrix& rho, const DensityMatrix& sigma) {
  if (rho.dim() != sigma.dim()) {
    throw std::invalid_argument("trace distance needs states of equal dimension");
  }
  Eigen::SelfAdjointEigenSolver<Matrix> solver(hermitized(rho.mat() - sigma.mat()),
                                               Eigen::EigenvaluesOnly);
  return 0.5 * solver.eigenvalues().cwiseAbs().sum();
}

double fidelity(const DensityMatrix& rho, const DensityMatrix& sigma) {
  if (rho.dim() != sigma.dim()) {
    throw std::invalid_argument("fidelity needs states of equal dimension");
  }
  const auto solver = solve_hermitian(rho.mat());
  Eigen::VectorXd vals = solver.eigenvalues().cwiseMax(0.0);
  const Matrix sqrt_rho =
      solver.eigenvectors() * vals.cwiseSqrt().asDiagonal() * solver.eigenvectors().adjoint();
  Eigen::SelfAdjointEigenSolver<Matrix> inner(hermitized(sqrt_rho * sigma.mat() * sqrt_rho),
                                              Eigen::EigenvaluesOnly);
  const double root_sum = inner.eigenvalues().cwiseMax(0.0).cwiseSqrt().sum();
  return std::clamp(root_sum * root_sum, 0.0, 1.0);
}

double binary_entropy(double x) {
  if (x < -1e-12 || x > 1.0 + 1e-12) {
    throw std::invalid_argument("binary entropy argument outside [0, 1]");
  }
  x = std::clamp(x, 0.0, 1.0);
  double s = 0.0;
  if (x > 0.0) s -= x * std::log2(x);
  if (x < 1.0) s -= (1.0 - x) * std::log2(1.0 - x);
  return s;
}

double entropic_distance(const DensityMatrix& rho, const DensityMatrix& sigma) {
  const double root_f = std::sqrt(fidelity(rho, sigma));
  return std::sqrt(binary_entropy(0.5 * (1.0 - root_f)));
}

DensityMatrix tensor(const DensityMatrix& a, const DensityMatrix& b) {
  return DensityMatrix::unchecked(kron(a.mat(), b.mat()));
}

DensityMatrix partial_trace(const DensityMatrix& joint, int traced_factor,
                            Eigen::Index dim_first, Eigen::Index dim_second) {
  if (traced_factor != 0 && traced_factor != 1) {
    throw std::invalid_argument("traced_factor must be 0 or 1");
  }
  if (joint.dim() != dim_first * dim_second) {
    throw std::invalid_argument("factor dimensions do not multiply to the joint dimension");
  }
  const Matrix& m = joint.mat();
  if (traced_factor == 0) {
    Matrix out = Matrix::Zero(dim_second, dim_second);
    for (Eigen::Index j = 0; j < dim_second; ++j)
      for (Eigen::Index jp = 0; jp < dim_second; ++jp)
        for (Eigen::Index i = 0; i < dim_first; ++i)
          out(j, jp) += m(i * dim_second + j, i * dim_second + jp);
    return DensityMatrix::unchecked(std::move(out));
  }
  Matrix out = Matrix::Zero(dim_first, dim_first);
  for (Eigen::Index i = 0; i < dim_first; ++i)
    for (Eigen::Index ip = 0; ip < dim_first; ++ip)
      for (Eigen::Index j = 0; j < dim_second; ++j)
        out(i, ip) += m(i * dim_second + j, ip * dim_second + j);
  return DensityMatrix::unchecked(std::move(out));
}

DensityMatrix bloch_to_state(const Vector3& r) {
  if (r.norm() > 1.0 + kPositivityTol) {
    throw InvariantError("Bloch vector longer than 1");
  }
  Matrix m = pauli(0);
  for (int i = 0; i < 3; ++i) m += r[i] * pauli(i + 1);
  return DensityMatrix::unchecked(m / 2.0);
}

Vector3 state_to_bloch(const DensityMatrix& rho) {
  if (rho.dim() != 2) throw std::invalid_argument("Bloch coordinates need a qubit state");
  Vector3 r;
  for (int i = 0; i < 3; ++i) r[i] = std::real((rho.mat() * pauli(i + 1)).trace());
  return r;
}

PureState bloch_pure(const Vector3& direction) {
  const double n = direction.norm();
  if (n < 1e-12) throw std::invalid_argument("Bloch direction must be nonzero");
  const Vector3 u = direction / n;
  const double theta = std::acos(std::clamp(u[2], -1.0, 1.0));
  const double phi = std::atan2(u[1], u[0]);
  Vector v(2);
  v << std::cos(theta / 2.0), std::exp(kI * phi) * std::sin(theta / 2.0);
  return PureState::normalized(std::move(v));
}

}  // namespace qchan
