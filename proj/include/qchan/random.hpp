#pragma once

// Seedable samplers for states and unitaries.

#include "qchan/state.hpp"

#include <random>

namespace qchan {

using Rng = std::mt19937_64;

// Matrix of iid standard complex Gaussians.
Matrix ginibre(Eigen::Index rows, Eigen::Index cols, Rng& rng);

// G G^dag / Tr(G G^dag): full-rank random mixed state.
DensityMatrix ginibre_state(Eigen::Index dim, Rng& rng);

PureState random_pure(Eigen::Index dim, Rng& rng);

// Haar-distributed unitary (QR of a Ginibre matrix with phase correction).
Matrix random_unitary(Eigen::Index dim, Rng& rng);

// Uniform point on the probability simplex with n entries.
Eigen::VectorXd random_simplex(int n, Rng& rng);

}  // namespace qchan
