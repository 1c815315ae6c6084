#include "qchan/channel.hpp"

#include "qchan/divergence.hpp"
#include "qchan/optimize.hpp"

#include <algorithm>
#include <cmath>
#include <utility>

namespace qchan {

namespace {

constexpr Eigen::Index kMaxDim = 16;

void require_qubit(Eigen::Index dim, const char* what) {
  if (dim != 2) {
    throw std::invalid_argument(std::string(what) + " is defined for qubit channels only");
  }
}

// Sign picked up by sigma_a under transposition: sigma_y flips.
double transpose_sign(int axis) { return axis == 1 ? -1.0 : 1.0; }

}  // namespace

KrausChannel::KrausChannel(std::vector<Matrix> ops) {
  if (ops.empty()) throw std::invalid_argument("Kraus set must be nonempty");
  const Eigen::Index dim = ops.front().rows();
  if (dim < 2 || dim > kMaxDim) {
    throw std::invalid_argument("Kraus operators must act on dimension 2..16");
  }
  Matrix sum = Matrix::Zero(dim, dim);
  for (const Matrix& k : ops) {
    if (k.rows() != dim || k.cols() != dim) {
      throw std::invalid_argument("Kraus operators must be square and equally sized");
    }
    sum += k.adjoint() * k;
  }
  if ((sum - Matrix::Identity(dim, dim)).cwiseAbs().maxCoeff() > kChannelTol) {
    throw InvariantError("Kraus set is not trace preserving");
  }
  ops_ = std::move(ops);
}

bool KrausChannel::unital(double tol) const {
  const Eigen::Index d = dim();
  Matrix sum = Matrix::Zero(d, d);
  for (const Matrix& k : ops_) sum += k * k.adjoint();
  return (sum - Matrix::Identity(d, d)).cwiseAbs().maxCoeff() <= tol;
}

bool fano_outputs_positive(const FanoForm& fano, int sample_count) {
  for (const Vector3& r : fibonacci_sphere(sample_count)) {
    if ((fano.distortion * r + fano.translation).norm() > 1.0 + kChannelTol) return false;
  }
  return true;
}

PauliChannel PauliChannel::from_probabilities(const Vector4& p) {
  Vector4 q = p;
  for (int a = 0; a < 4; ++a) {
    if (q[a] < -kPositivityTol) {
      throw InvariantError("Pauli mixture probability is negative");
    }
    q[a] = std::max(q[a], 0.0);
  }
  if (std::abs(q.sum() - 1.0) > kTraceTol) {
    throw InvariantError("Pauli mixture probabilities must sum to 1");
  }
  q /= q.sum();
  PauliChannel channel;
  channel.p_ = q;
  channel.c_ = Vector3(q[0] + q[1] - q[2] - q[3],
                       q[0] - q[1] + q[2] - q[3],
                       q[0] - q[1] - q[2] + q[3]);
  return channel;
}

PauliChannel PauliChannel::from_distortion(const Vector3& c) {
  const Vector4 p(1.0 + c[0] + c[1] + c[2],
                  1.0 + c[0] - c[1] - c[2],
                  1.0 - c[0] + c[1] - c[2],
                  1.0 - c[0] - c[1] + c[2]);
  PauliChannel channel = from_probabilities(p / 4.0);
  channel.c_ = c;  // keep the caller's exact diagonal
  return channel;
}

FanoForm PauliChannel::fano() const {
  FanoForm fano;
  fano.distortion = c_.asDiagonal();
  return fano;
}

KrausChannel PauliChannel::kraus() const {
  std::vector<Matrix> ops;
  ops.reserve(4);
  for (int a = 0; a < 4; ++a) ops.push_back(std::sqrt(p_[a]) * pauli(a));
  return KrausChannel(std::move(ops));
}

ChoiState make_choi(DensityMatrix state, Eigen::Index source_dim) {
  if (state.dim() != source_dim * source_dim) {
    throw std::invalid_argument("Choi state dimension must be the source dimension squared");
  }
  const DensityMatrix marginal = partial_trace(state, 0, source_dim, source_dim);
  const Matrix expected = Matrix::Identity(source_dim, source_dim) /
                          static_cast<double>(source_dim);
  if ((marginal.mat() - expected).cwiseAbs().maxCoeff() > kChannelTol) {
    throw InvariantError("Choi state marginal is not maximally mixed");
  }
  return ChoiState{std::move(state), source_dim};
}

Eigen::Index channel_dim(const Channel& channel) {
  return std::visit(
      [](const auto& c) -> Eigen::Index {
        using T = std::decay_t<decltype(c)>;
        if constexpr (std::is_same_v<T, KrausChannel>) return c.dim();
        else return 2;
      },
      channel);
}

PureState max_entangled(Eigen::Index dim) {
  if (dim < 2 || dim > kMaxDim) throw std::invalid_argument("dimension must be in 2..16");
  Vector v = Vector::Zero(dim * dim);
  for (Eigen::Index i = 0; i < dim; ++i) v[i * dim + i] = 1.0;
  return PureState::normalized(std::move(v));
}

ChoiState choi_of(const KrausChannel& channel) {
  const Eigen::Index dim = channel.dim();
  const Vector phi = max_entangled(dim).amplitudes();
  const Matrix id = Matrix::Identity(dim, dim);
  Matrix choi = Matrix::Zero(dim * dim, dim * dim);
  for (const Matrix& k : channel.ops()) {
    const Vector v = kron(k, id) * phi;
    choi += v * v.adjoint();
  }
  return make_choi(DensityMatrix(hermitized(choi)), dim);
}

ChoiState choi_of(const FanoForm& channel) {
  Matrix choi = kron(pauli(0), pauli(0));
  for (int i = 0; i < 3; ++i) {
    choi += channel.translation[i] * kron(pauli(i + 1), pauli(0));
  }
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      const double coeff = channel.distortion(i, j) * transpose_sign(j);
      choi += coeff * kron(pauli(i + 1), pauli(j + 1));
    }
  // The checked constructor enforces positivity, i.e. complete positivity of the map.
  return make_choi(DensityMatrix(choi / 4.0), 2);
}

ChoiState choi_of(const PauliChannel& channel) { return choi_of(channel.kraus()); }

ChoiState choi_of(const Channel& channel) {
  return std::visit([](const auto& c) { return choi_of(c); }, channel);
}

DensityMatrix apply(const KrausChannel& channel, const DensityMatrix& rho) {
  if (rho.dim() != channel.dim()) {
    throw std::invalid_argument("state dimension does not match the channel");
  }
  Matrix out = Matrix::Zero(rho.dim(), rho.dim());
  for (const Matrix& k : channel.ops()) out += k * rho.mat() * k.adjoint();
  return DensityMatrix::unchecked(hermitized(out));
}

DensityMatrix apply(const FanoForm& channel, const DensityMatrix& rho) {
  require_qubit(rho.dim(), "the affine Bloch form");
  const Vector3 r = channel.distortion * state_to_bloch(rho) + channel.translation;
  if (r.norm() > 1.0 + kPositivityTol) {
    throw InvariantError("affine Bloch form mapped a state outside the ball");
  }
  return bloch_to_state(r);
}

DensityMatrix apply(const PauliChannel& channel, const DensityMatrix& rho) {
  return apply(channel.kraus(), rho);
}

DensityMatrix apply(const Channel& channel, const DensityMatrix& rho) {
  return std::visit([&](const auto& c) { return apply(c, rho); }, channel);
}

KrausChannel kraus_of(const Channel& channel) {
  if (const auto* kraus = std::get_if<KrausChannel>(&channel)) return *kraus;
  if (const auto* mixture = std::get_if<PauliChannel>(&channel)) return mixture->kraus();

  // Affine form: read the operators off the Choi spectrum.
  const FanoForm& fano = std::get<FanoForm>(channel);
  const ChoiState choi = choi_of(fano);
  Eigen::SelfAdjointEigenSolver<Matrix> solver(hermitized(choi.state.mat()));
  if (solver.info() != Eigen::Success) throw std::runtime_error("eigendecomposition failed");
  const Eigen::Index dim = choi.source_dim;
  std::vector<Matrix> ops;
  for (Eigen::Index k = 0; k < solver.eigenvalues().size(); ++k) {
    const double weight = solver.eigenvalues()[k];
    if (weight <= kEigenFloor) continue;
    const Vector v = solver.eigenvectors().col(k);
    Matrix op(dim, dim);
    for (Eigen::Index a = 0; a < dim; ++a)
      for (Eigen::Index b = 0; b < dim; ++b) op(a, b) = v[a * dim + b];
    ops.push_back(std::sqrt(weight * static_cast<double>(dim)) * op);
  }
  return KrausChannel(std::move(ops));
}

FanoForm fano_of(const Channel& channel) {
  require_qubit(channel_dim(channel), "the affine Bloch form");
  if (const auto* fano = std::get_if<FanoForm>(&channel)) return *fano;
  if (const auto* mixture = std::get_if<PauliChannel>(&channel)) return mixture->fano();

  const KrausChannel& kraus = std::get<KrausChannel>(channel);
  Matrix heated = Matrix::Zero(2, 2);  // image of the identity
  for (const Matrix& k : kraus.ops()) heated += k * k.adjoint();
  FanoForm fano;
  for (int i = 0; i < 3; ++i) {
    fano.translation[i] = 0.5 * std::real((pauli(i + 1) * heated).trace());
    Matrix column = Matrix::Zero(2, 2);  // image of sigma_j by linearity
    for (const Matrix& k : kraus.ops()) column += k * pauli(i + 1) * k.adjoint();
    for (int j = 0; j < 3; ++j) {
      fano.distortion(j, i) = 0.5 * std::real((pauli(j + 1) * column).trace());
    }
  }
  return fano;
}

KrausChannel compose(const Channel& second, const Channel& first) {
  const KrausChannel s = kraus_of(second);
  const KrausChannel f = kraus_of(first);
  if (s.dim() != f.dim()) {
    throw std::invalid_argument("composed channels must share one dimension");
  }
  std::vector<Matrix> ops;
  ops.reserve(s.ops().size() * f.ops().size());
  for (const Matrix& a : s.ops())
    for (const Matrix& b : f.ops()) ops.push_back(a * b);
  return KrausChannel(std::move(ops));
}

KrausChannel adjoint_channel(const Channel& channel) {
  const KrausChannel kraus = kraus_of(channel);
  std::vector<Matrix> ops;
  ops.reserve(kraus.ops().size());
  for (const Matrix& k : kraus.ops()) ops.push_back(k.transpose());
  return KrausChannel(std::move(ops));  // trace preservation holds iff the input is unital
}

KrausChannel extend(const Channel& channel, Eigen::Index ancilla_dim) {
  if (ancilla_dim < 1) throw std::invalid_argument("ancilla dimension must be positive");
  const KrausChannel kraus = kraus_of(channel);
  if (kraus.dim() * ancilla_dim > kMaxDim) {
    throw std::invalid_argument("extended channel exceeds the supported dimension");
  }
  if (ancilla_dim == 1) return kraus;
  const Matrix id = Matrix::Identity(ancilla_dim, ancilla_dim);
  std::vector<Matrix> ops;
  ops.reserve(kraus.ops().size());
  for (const Matrix& k : kraus.ops()) ops.push_back(kron(k, id));
  return KrausChannel(std::move(ops));
}

KrausChannel unitary_channel(const Matrix& u) {
  if (u.rows() != u.cols()) throw std::invalid_argument("unitary must be square");
  const Matrix gram = u.adjoint() * u;
  if ((gram - Matrix::Identity(u.rows(), u.cols())).cwiseAbs().maxCoeff() > kChannelTol) {
    throw std::invalid_argument("matrix is not unitary");
  }
  return KrausChannel({u});
}

PauliChannel identity_channel() { return PauliChannel::from_distortion(Vector3(1, 1, 1)); }

PauliChannel phase_flip(double x) {
  if (x < 0.0 || x > 1.0) throw SchemaError("phase flip strength must lie in [0, 1]");
  return PauliChannel::from_distortion(Vector3(1.0 - x, 1.0 - x, 1.0));
}

PauliChannel depolarizing(double x) {
  if (x < 0.0 || x > 1.0) throw SchemaError("depolarizing strength must lie in [0, 1]");
  return PauliChannel::from_distortion(Vector3(1.0 - x, 1.0 - x, 1.0 - x));
}

PauliChannel random_pauli(Rng& rng) {
  const Eigen::VectorXd p = random_simplex(4, rng);
  return PauliChannel::from_probabilities(Vector4(p[0], p[1], p[2], p[3]));
}

PauliChannel random_pauli(std::uint64_t seed) {
  Rng rng(seed);
  return random_pauli(rng);
}

KrausChannel random_kraus_channel(Eigen::Index dim, int op_count, Rng& rng) {
  if (op_count < 1) throw std::invalid_argument("need at least one Kraus operator");
  if (dim < 2 || dim * op_count > 4 * kMaxDim) {
    throw std::invalid_argument("random channel dimensions out of range");
  }
  // Columns of a random isometry, sliced into blocks.
  const Matrix g = ginibre(dim * op_count, dim, rng);
  Eigen::HouseholderQR<Matrix> qr(g);
  const Matrix q = Matrix(qr.householderQ()).leftCols(dim);
  std::vector<Matrix> ops;
  ops.reserve(op_count);
  for (int i = 0; i < op_count; ++i) ops.push_back(q.middleRows(i * dim, dim));
  return KrausChannel(std::move(ops));
}

Matrix3 random_rotation(Rng& rng) {
  return fano_of(Channel(unitary_channel(random_unitary(2, rng)))).distortion;
}

ChainingCounterexample chaining_counterexample() {
  // E1 replaces every input with |0><0|, F2 with |1><1|; E2 dephases in the
  // computational basis. F1 = E1, so the first step costs nothing, yet the
  // compositions E2.E1 = E1 and F2.F1 = F2 are perfectly distinguishable.
  Matrix ket0 = Matrix::Zero(2, 2), flip0 = Matrix::Zero(2, 2);
  ket0(0, 0) = 1.0;
  flip0(0, 1) = 1.0;
  Matrix ket1 = Matrix::Zero(2, 2), flip1 = Matrix::Zero(2, 2);
  ket1(1, 1) = 1.0;
  flip1(1, 0) = 1.0;

  const KrausChannel e1({ket0, flip0});
  const PauliChannel e2 = phase_flip(1.0);
  const KrausChannel f1 = e1;
  const KrausChannel f2({ket1, flip1});

  ChainingCounterexample record{
      choi_of(e1), choi_of(e2), choi_of(f1), choi_of(f2), 0.0, 0.0, 0.0, false};
  const ChoiState left = choi_of(compose(e2, e1));
  const ChoiState right = choi_of(compose(f2, f1));
  record.composed_distance = transmission_distance(left.state, right.state);
  record.first_step = transmission_distance(record.e1.state, record.f1.state);
  record.second_step = transmission_distance(record.e2.state, record.f2.state);
  record.violated =
      record.composed_distance > record.first_step + record.second_step + 1e-9;
  return record;
}

}  // namespace qchan
