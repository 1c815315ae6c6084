// Distances between channels: divergence of Choi states, entanglement-assisted
// divergence maximized over k-copy probe states, and closed forms for qubit
// Pauli mixtures, scaled rotations, and unital trace-norm distance.
#pragma once

#include <cstdint>

#include "qchan/channel.hpp"
#include "qchan/divergence.hpp"
#include "qchan/optimize.hpp"

namespace qchan {

// Transmission distance between the Choi states of two channels (same dim).
double d_t_iso(const Channel& e, const Channel& f);

// Classical closed form for two Pauli mixtures: Jensen-Shannon divergence of
// the probability vectors, since both Choi states are Bell-diagonal.
double d_t_pauli_iso(const PauliChannel& p, const PauliChannel& q);

struct ChoiDistances {
  double trace = 0;       // trace distance between Choi states
  double fid = 0;         // fidelity
  double bures = 0;       // sqrt(2 - 2 sqrt(F))
  double entropic = 0;    // sqrt(H2((1 - sqrt(F)) / 2))
};

ChoiDistances choi_map_distances(const Channel& e, const Channel& f);

// Sandwich T/(2 sqrt 2) <= d_t_iso <= min(sqrt T, D_E) evaluated on Choi states.
struct MapBounds {
  double lower = 0;
  double value = 0;
  double upper_trace = 0;
  double upper_entropic = 0;
  bool upper_trace_active = false;  // which upper bound is the binding one
  bool all_hold = false;
};

MapBounds map_bounds_report(const Channel& e, const Channel& f);

enum class DivMethod { closed_form, grid_refine };

struct DivergenceResult {
  double value = 0;
  DivMethod method = DivMethod::grid_refine;
  long evaluations = 0;
  Vector argmax;        // optimal probe state amplitudes
  int axis = -1;        // winning Bloch axis for the Pauli closed form
  int tied_axes = 1;
  bool converged = true;
};

struct GridRefineOptions {
  int grid = 2048;   // Fibonacci-sphere candidates
  int starts = 8;    // best candidates polished by Nelder-Mead
  int iters = 200;
  double tol = 1e-9;
};

struct RestartOptions {
  int restarts = 32;
  int iters = 600;
  double tol = 1e-9;
  std::uint64_t seed = 1;
};

// sup over single-qubit pure probes of d_t(E(psi), F(psi)).  Fibonacci-sphere
// scan of the Bloch sphere followed by simplex polish from the best cells.
DivergenceResult entropic_divergence_k1(const Channel& e, const Channel& f,
                                        const GridRefineOptions& opts = {});

// Same objective with a k-qubit ancilla: probes range over pure states of
// dim * 2^(k-1)... more precisely over C^(d * k_anc) where the channel acts on
// the first factor.  `ancilla_dim` multiplies the probe space; ancilla_dim = 1
// reduces to the k1 scan.
DivergenceResult entropic_divergence_k(const Channel& e, const Channel& f,
                                       Eigen::Index ancilla_dim,
                                       const RestartOptions& opts = {});

// Closed form for two Pauli mixtures restricted to one-qubit probes:
// max over axes i of f(cbar_i^2) - [f(c_i^2) + f(c'_i^2)] / 2 with
// f(x) = H2((1 - sqrt x)/2) and cbar the midpoint distortion.
DivergenceResult entropic_divergence_pauli_closed(const PauliChannel& p,
                                                  const PauliChannel& q);

// Closed form for channels with distortion alpha_i R_i (R_i rotations, no
// translation): the optimum over pure probes has an explicit overlap r_opt.
DivergenceResult entropic_divergence_scaled_rotation(double alpha1, const Matrix3& r1,
                                                     double alpha2, const Matrix3& r2);

// Trace-norm analogue for unital qubit channels: half the largest singular
// value of the distortion difference.
double trace_channel_divergence_unital(const Channel& e, const Channel& f);

// Brute-force counterpart used to validate the closed form above.
DivergenceResult trace_divergence_k1_numeric(const Channel& e, const Channel& f,
                                             const GridRefineOptions& opts = {});

// Empirical check of the chain rule
//   d_t((E x 1)(rho), (F x 1)(sigma)) <= d_t(rho, sigma) + d_k
// over random bipartite state pairs, plus the sampled estimate of the
// amortized divergence sup {output distance - input distance}, which
// collapses to d_k itself.
struct ChainRuleReport {
  double d_k = 0;
  double max_violation = 0;        // most positive (lhs - input distance) - d_k
  double amortized_estimate = 0;   // largest sampled output-minus-input distance
  int samples = 0;
};

ChainRuleReport chain_rule_check(const Channel& e, const Channel& f,
                                 Eigen::Index ancilla_dim, int samples,
                                 std::uint64_t seed, double d_k_known = -1.0);

// Triangle-style chaining with a bistochastic reference map D:
// d(E2 E1, F2 D) <= d(E1, D) + d(E2, F2).
struct BistochasticChainReport {
  double lhs = 0;
  double first_leg = 0;
  double second_leg = 0;
  bool holds = false;
};

BistochasticChainReport bistochastic_chain_check(const Channel& e1, const Channel& e2,
                                                 const Channel& f2, const Channel& reference);

}  // namespace qchan
