#include "qchan/random.hpp"

#include <cmath>

namespace qchan {

Matrix ginibre(Eigen::Index rows, Eigen::Index cols, Rng& rng) {
  std::normal_distribution<double> gauss(0.0, 1.0);
  Matrix g(rows, cols);
  for (Eigen::Index i = 0; i < rows; ++i)
    for (Eigen::Index j = 0; j < cols; ++j) {
      const double re = gauss(rng);
      const double im = gauss(rng);
      g(i, j) = Complex(re, im);
    }
  return g;
}

DensityMatrix ginibre_state(Eigen::Index dim, Rng& rng) {
  const Matrix g = ginibre(dim, dim, rng);
  Matrix rho = g * g.adjoint();
  rho /= rho.trace();
  return DensityMatrix::unchecked(hermitized(rho));
}

PureState random_pure(Eigen::Index dim, Rng& rng) {
  return PureState::normalized(ginibre(dim, 1, rng));
}

Matrix random_unitary(Eigen::Index dim, Rng& rng) {
  const Matrix g = ginibre(dim, dim, rng);
  Eigen::HouseholderQR<Matrix> qr(g);
  Matrix q = qr.householderQ();
  const Matrix r = qr.matrixQR().triangularView<Eigen::Upper>();
  for (Eigen::Index j = 0; j < dim; ++j) {
    const Complex d = r(j, j);
    q.col(j) *= d / std::abs(d);
  }
  return q;
}

Eigen::VectorXd random_simplex(int n, Rng& rng) {
  if (n < 1) throw std::invalid_argument("simplex dimension must be positive");
  std::exponential_distribution<double> expo(1.0);
  Eigen::VectorXd p(n);
  for (int i = 0; i < n; ++i) p[i] = expo(rng);
  p /= p.sum();
  return p;
}

}  // namespace qchan
