#pragma once

// Quantum channel representations (Kraus, affine Bloch form, Pauli mixtures,
// Choi states) and the conversions between them.
//
// Convention used everywhere: the Choi state of a channel E on dimension N is
// (E x id)(|Phi><Phi|) with |Phi> = sum_i |i>|i> / sqrt(N), the channel acting
// on the FIRST tensor factor. Tracing out that factor of a valid Choi state
// leaves the maximally mixed marginal 1/N.

#include "qchan/random.hpp"
#include "qchan/state.hpp"

#include <variant>
#include <vector>

namespace qchan {

// Kraus set {K_i} with sum K_i^dag K_i = 1 (trace preservation enforced).
class KrausChannel {
 public:
  explicit KrausChannel(std::vector<Matrix> ops);

  const std::vector<Matrix>& ops() const { return ops_; }
  Eigen::Index dim() const { return ops_.front().rows(); }
  bool unital(double tol = kChannelTol) const;  // sum K_i K_i^dag = 1

 private:
  std::vector<Matrix> ops_;
};

// Qubit channel in affine Bloch form r -> distortion * r + translation.
struct FanoForm {
  Matrix3 distortion = Matrix3::Identity();
  Vector3 translation = Vector3::Zero();
};

// |distortion * r + translation| <= 1 + tol for a sample of unit vectors.
// Necessary for positivity; complete positivity is checked via the Choi state.
bool fano_outputs_positive(const FanoForm& fano, int sample_count = 128);

// Mixture of Pauli unitaries, kept simultaneously as the probability vector
// p = (p_0, p_1, p_2, p_3) over (1, x, y, z) and as the diagonal Bloch
// distortion c = (c_1, c_2, c_3). Valid iff c lies in the tetrahedron with
// vertices (1,1,1), (1,-1,-1), (-1,1,-1), (-1,-1,1), i.e. iff all p_a >= 0.
class PauliChannel {
 public:
  static PauliChannel from_probabilities(const Vector4& p);
  static PauliChannel from_distortion(const Vector3& c);

  const Vector4& probabilities() const { return p_; }
  const Vector3& distortion_diagonal() const { return c_; }

  FanoForm fano() const;
  KrausChannel kraus() const;  // {sqrt(p_a) sigma_a}

 private:
  PauliChannel() = default;
  Vector4 p_;
  Vector3 c_;
};

// Choi state with its source dimension; the factory checks the marginal.
struct ChoiState {
  DensityMatrix state;
  Eigen::Index source_dim;
};

ChoiState make_choi(DensityMatrix state, Eigen::Index source_dim);

using Channel = std::variant<PauliChannel, FanoForm, KrausChannel>;

Eigen::Index channel_dim(const Channel& channel);

// |Phi> = sum_i |i>|i> / sqrt(dim).
PureState max_entangled(Eigen::Index dim);

KrausChannel kraus_of(const Channel& channel);  // FanoForm route goes via the Choi spectrum
FanoForm fano_of(const Channel& channel);       // qubit channels only

ChoiState choi_of(const KrausChannel& channel);
ChoiState choi_of(const FanoForm& channel);  // rejects non-CP forms
ChoiState choi_of(const PauliChannel& channel);
ChoiState choi_of(const Channel& channel);

DensityMatrix apply(const KrausChannel& channel, const DensityMatrix& rho);
DensityMatrix apply(const FanoForm& channel, const DensityMatrix& rho);
DensityMatrix apply(const PauliChannel& channel, const DensityMatrix& rho);
DensityMatrix apply(const Channel& channel, const DensityMatrix& rho);

// second after first: (second . first)(rho).
KrausChannel compose(const Channel& second, const Channel& first);

// Kraus operators transposed entrywise; trace-preserving iff the input is unital.
KrausChannel adjoint_channel(const Channel& channel);

// E x id_ancilla.
KrausChannel extend(const Channel& channel, Eigen::Index ancilla_dim);

KrausChannel unitary_channel(const Matrix& u);

PauliChannel identity_channel();
PauliChannel phase_flip(double x);    // c = (1-x, 1-x, 1)
PauliChannel depolarizing(double x);  // c = (1-x, 1-x, 1-x)

PauliChannel random_pauli(Rng& rng);  // flat measure on the probability simplex
PauliChannel random_pauli(std::uint64_t seed);
KrausChannel random_kraus_channel(Eigen::Index dim, int op_count, Rng& rng);
Matrix3 random_rotation(Rng& rng);  // Bloch rotation of a Haar-random qubit unitary

// Two channel pairs whose composed transmission distance exceeds the sum of
// the stepwise distances, showing the distance does not chain in general.
struct ChainingCounterexample {
  ChoiState e1, e2, f1, f2;
  double composed_distance = 0.0;   // d_t between the Choi states of E2.E1 and F2.F1
  double first_step = 0.0;          // d_t^iso(E1, F1)
  double second_step = 0.0;         // d_t^iso(E2, F2)
  bool violated = false;            // composed > first + second
};

ChainingCounterexample chaining_counterexample();

}  // namespace qchan
