#pragma once

// Density matrices and the entropic quantities defined on them.
// All entropies are in bits (base-2 logarithms throughout).

#include "qchan/types.hpp"

#include <unsupported/Eigen/KroneckerProduct>

namespace qchan {

template <typename DerivedA, typename DerivedB>
Matrix kron(const Eigen::MatrixBase<DerivedA>& a, const Eigen::MatrixBase<DerivedB>& b) {
  return Eigen::kroneckerProduct(a.derived(), b.derived());
}

template <typename Derived>
Matrix hermitized(const Eigen::MatrixBase<Derived>& a) {
  return (a.derived() + a.derived().adjoint()) / 2.0;
}

// Unit-trace positive semidefinite Hermitian matrix. The checked constructor
// rejects anything violating those invariants; unchecked() is for outputs that
// are valid by construction (CPTP images, convex mixtures, tensor products).
class DensityMatrix {
 public:
  explicit DensityMatrix(Matrix m);
  static DensityMatrix unchecked(Matrix m);

  const Matrix& mat() const { return m_; }
  Eigen::Index dim() const { return m_.rows(); }

 private:
  DensityMatrix() = default;
  Matrix m_;
};

class PureState {
 public:
  explicit PureState(Vector amplitudes);          // requires unit norm within 1e-12
  static PureState normalized(Vector amplitudes); // rescales; rejects near-zero vectors

  const Vector& amplitudes() const { return v_; }
  Eigen::Index dim() const { return v_.size(); }
  DensityMatrix projector() const;

 private:
  PureState() = default;
  Vector v_;
};

// Eigenvalues of the Hermitian part of a, ascending, with entries at or below
// the floor clamped to zero. Entries below the hard floor throw.
Eigen::VectorXd state_spectrum(const Matrix& a);

// -sum(p log2 p) over the positive entries of a spectrum or distribution.
double entropy_bits(const Eigen::VectorXd& spectrum);

double von_neumann_entropy(const DensityMatrix& rho);

// S(rho || sigma) in bits; +infinity when supp(rho) is not contained in supp(sigma).
double relative_entropy(const DensityMatrix& rho, const DensityMatrix& sigma);

double trace_distance(const DensityMatrix& rho, const DensityMatrix& sigma);

// Uhlmann fidelity (Tr sqrt(sqrt(rho) sigma sqrt(rho)))^2, clamped to [0, 1].
double fidelity(const DensityMatrix& rho, const DensityMatrix& sigma);

// H2(x) = -x log2 x - (1-x) log2(1-x); x may stray from [0,1] by at most 1e-12.
double binary_entropy(double x);

// sqrt(H2((1 - sqrt(F))/2)), an upper bound on the transmission distance.
double entropic_distance(const DensityMatrix& rho, const DensityMatrix& sigma);

DensityMatrix tensor(const DensityMatrix& a, const DensityMatrix& b);

// Traces out one factor of a bipartite state; traced_factor is 0 (first) or 1 (second).
DensityMatrix partial_trace(const DensityMatrix& joint, int traced_factor,
                            Eigen::Index dim_first, Eigen::Index dim_second);

// rho = (1 + r . sigma)/2; requires |r| <= 1 within tolerance.
DensityMatrix bloch_to_state(const Vector3& r);
Vector3 state_to_bloch(const DensityMatrix& rho);

// Spinor along a Bloch direction (the direction is normalized first).
PureState bloch_pure(const Vector3& direction);

}  // namespace qchan
