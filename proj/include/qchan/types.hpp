#pragma once

#include <Eigen/Dense>

#include <complex>
#include <stdexcept>

namespace qchan {

template <typename Scalar>
using Mat = Eigen::Matrix<std::complex<Scalar>, Eigen::Dynamic, Eigen::Dynamic>;
template <typename Scalar>
using Vec = Eigen::Matrix<std::complex<Scalar>, Eigen::Dynamic, 1>;

using Complex = std::complex<double>;
using Matrix = Mat<double>;
using Vector = Vec<double>;
using Matrix3 = Eigen::Matrix3d;
using Vector3 = Eigen::Vector3d;
using Vector4 = Eigen::Vector4d;

// Shared numerical tolerances.
inline constexpr double kHermitianTol = 1e-10;
inline constexpr double kTraceTol = 1e-10;
inline constexpr double kPositivityTol = 1e-10;   // eigenvalues above -this pass as nonnegative
inline constexpr double kEigenFloor = 1e-12;      // spectrum entries at or below this are treated as zero
inline constexpr double kEigenHardFloor = -1e-8;  // spectrum entries below this are rejected outright
inline constexpr double kChannelTol = 1e-9;       // trace preservation, unitality, Choi marginals

// Malformed structural input: JSON schema problems, out-of-range scalar parameters.
struct SchemaError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Violated physical invariant: broken normalization, non-CP or non-TP maps.
struct InvariantError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// An iterative solver exhausted its budget without reaching tolerance.
struct ConvergenceError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Pauli basis, alpha in 0..3: identity, sigma_x, sigma_y, sigma_z.
const Matrix& pauli(int alpha);

}  // namespace qchan
