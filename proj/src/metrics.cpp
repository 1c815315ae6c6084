#include "qchan/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>
#include <utility>

namespace qchan {

namespace {

// Entropy of a qubit state as a function of its squared Bloch length.
double entropy_from_sq_length(double x) {
  return binary_entropy((1.0 - std::sqrt(std::clamp(x, 0.0, 1.0))) / 2.0);
}

struct BlochScan {
  double value = 0.0;
  Vector3 direction = Vector3::UnitZ();
  long evaluations = 0;
  bool converged = false;
};

// Fibonacci-sphere sweep over pure-qubit probes, then simplex polish from the
// best cells. The simplex runs over unnormalized R^3 vectors so there are no
// coordinate poles.
BlochScan bloch_grid_refine(const std::function<double(const Vector3&)>& objective,
                            const GridRefineOptions& opts) {
  long evals = 0;
  auto eval_dir = [&](const Vector3& dir) {
    ++evals;
    return objective(dir);
  };

  const std::vector<Vector3> grid = fibonacci_sphere(opts.grid);
  std::vector<std::pair<double, int>> scores;
  scores.reserve(grid.size());
  for (int i = 0; i < static_cast<int>(grid.size()); ++i) {
    scores.emplace_back(eval_dir(grid[i]), i);
  }
  const int starts = std::min<int>(opts.starts, static_cast<int>(scores.size()));
  std::partial_sort(scores.begin(), scores.begin() + starts, scores.end(),
                    [](const auto& a, const auto& b) { return a.first > b.first; });

  auto param_objective = [&](const Eigen::VectorXd& x) {
    const double norm = x.norm();
    if (norm < 1e-8) return -1.0;
    return eval_dir(Vector3(x[0], x[1], x[2]) / norm);
  };

  SimplexOptions simplex;
  simplex.max_iters = opts.iters;
  simplex.tol = opts.tol;

  BlochScan best;
  bool have = false;
  for (int s = 0; s < starts; ++s) {
    Eigen::VectorXd x0 = grid[scores[s].second];
    const SimplexResult run = nelder_mead_max(param_objective, x0, simplex);
    if (!have || run.value > best.value) {
      best.value = run.value;
      best.direction = Vector3(run.x[0], run.x[1], run.x[2]).normalized();
      best.converged = run.converged;
      have = true;
    }
  }
  best.evaluations = evals;
  return best;
}

void require_same_dim(const Channel& e, const Channel& f) {
  if (channel_dim(e) != channel_dim(f)) {
    throw std::invalid_argument("channel dimensions differ");
  }
}

void require_rotation(const Matrix3& r) {
  if ((r.transpose() * r - Matrix3::Identity()).norm() > 1e-9 ||
      std::abs(r.determinant() - 1.0) > 1e-9) {
    throw std::invalid_argument("distortion matrix is not a rotation");
  }
}

}  // namespace

double d_t_iso(const Channel& e, const Channel& f) {
  require_same_dim(e, f);
  return transmission_distance(choi_of(e).state, choi_of(f).state);
}

double d_t_pauli_iso(const PauliChannel& p, const PauliChannel& q) {
  const Eigen::VectorXd a = p.probabilities();
  const Eigen::VectorXd b = q.probabilities();
  const double jsd =
      entropy_bits((a + b) / 2.0) - 0.5 * (entropy_bits(a) + entropy_bits(b));
  return std::sqrt(std::clamp(jsd, 0.0, 1.0));
}

ChoiDistances choi_map_distances(const Channel& e, const Channel& f) {
  require_same_dim(e, f);
  const DensityMatrix rho = choi_of(e).state;
  const DensityMatrix sigma = choi_of(f).state;
  ChoiDistances out;
  out.trace = trace_distance(rho, sigma);
  out.fid = fidelity(rho, sigma);
  out.bures = std::sqrt(std::max(0.0, 2.0 - 2.0 * std::sqrt(out.fid)));
  out.entropic = entropic_distance(rho, sigma);
  return out;
}

MapBounds map_bounds_report(const Channel& e, const Channel& f) {
  require_same_dim(e, f);
  const DensityMatrix rho = choi_of(e).state;
  const DensityMatrix sigma = choi_of(f).state;
  const double t = trace_distance(rho, sigma);
  MapBounds bounds;
  bounds.lower = t / (2.0 * std::numbers::sqrt2);
  bounds.value = transmission_distance(rho, sigma);
  bounds.upper_trace = std::sqrt(t);
  bounds.upper_entropic = entropic_distance(rho, sigma);
  bounds.upper_trace_active = bounds.upper_trace <= bounds.upper_entropic;
  const double upper = std::min(bounds.upper_trace, bounds.upper_entropic);
  bounds.all_hold =
      bounds.lower <= bounds.value + 1e-9 && bounds.value <= upper + 1e-9;
  return bounds;
}

DivergenceResult entropic_divergence_k1(const Channel& e, const Channel& f,
                                        const GridRefineOptions& opts) {
  require_same_dim(e, f);
  if (channel_dim(e) != 2) {
    throw std::invalid_argument("single-qubit probe scan needs qubit channels");
  }
  const BlochScan scan = bloch_grid_refine(
      [&](const Vector3& dir) {
        const DensityMatrix probe = bloch_pure(dir).projector();
        return qjsd(apply(e, probe), apply(f, probe));
      },
      opts);
  DivergenceResult res;
  res.value = std::sqrt(std::clamp(scan.value, 0.0, 1.0));
  res.method = DivMethod::grid_refine;
  res.evaluations = scan.evaluations;
  res.argmax = bloch_pure(scan.direction).amplitudes();
  res.converged = scan.converged;
  return res;
}

DivergenceResult entropic_divergence_k(const Channel& e, const Channel& f,
                                       Eigen::Index ancilla_dim,
                                       const RestartOptions& opts) {
  require_same_dim(e, f);
  if (ancilla_dim < 1) throw std::invalid_argument("ancilla dimension must be positive");
  const Eigen::Index dim = channel_dim(e);
  const Eigen::Index probe_dim = dim * ancilla_dim;
  if (probe_dim == 2) return entropic_divergence_k1(e, f);

  const KrausChannel lifted_e = extend(e, ancilla_dim);
  const KrausChannel lifted_f = extend(f, ancilla_dim);

  long evals = 0;
  auto objective = [&](const Eigen::VectorXd& x) {
    Vector v(probe_dim);
    for (Eigen::Index i = 0; i < probe_dim; ++i) v[i] = Complex(x[i], x[probe_dim + i]);
    if (v.norm() < 1e-8) return -1.0;
    const DensityMatrix probe = PureState::normalized(std::move(v)).projector();
    ++evals;
    return qjsd(apply(lifted_e, probe), apply(lifted_f, probe));
  };

  std::vector<Vector> starts;
  {
    // maximally entangled across the shared levels
    const Eigen::Index m = std::min(dim, ancilla_dim);
    Vector v = Vector::Zero(probe_dim);
    for (Eigen::Index i = 0; i < m; ++i) v[i * ancilla_dim + i] = 1.0;
    starts.push_back(v / std::sqrt(static_cast<double>(m)));
  }
  if (dim == 2) {
    // best unassisted probe, ancilla in |0>
    const DivergenceResult base = entropic_divergence_k1(e, f);
    Vector v = Vector::Zero(probe_dim);
    v[0] = base.argmax[0];
    v[ancilla_dim] = base.argmax[1];
    starts.push_back(v);
  }
  for (Eigen::Index b = 0; b < std::min<Eigen::Index>(probe_dim, 4); ++b) {
    Vector v = Vector::Zero(probe_dim);
    v[b] = 1.0;
    starts.push_back(v);
  }
  Rng rng(opts.seed);
  while (static_cast<int>(starts.size()) < opts.restarts) {
    starts.push_back(random_pure(probe_dim, rng).amplitudes());
  }

  SimplexOptions simplex;
  simplex.max_iters = opts.iters;
  simplex.tol = opts.tol;

  DivergenceResult res;
  res.method = DivMethod::grid_refine;
  double best = -std::numeric_limits<double>::infinity();
  for (const Vector& start : starts) {
    Eigen::VectorXd x0(2 * probe_dim);
    for (Eigen::Index i = 0; i < probe_dim; ++i) {
      x0[i] = start[i].real();
      x0[probe_dim + i] = start[i].imag();
    }
    const SimplexResult run = nelder_mead_max(objective, x0, simplex);
    if (run.value > best) {
      best = run.value;
      Vector v(probe_dim);
      for (Eigen::Index i = 0; i < probe_dim; ++i) {
        v[i] = Complex(run.x[i], run.x[probe_dim + i]);
      }
      res.argmax = PureState::normalized(std::move(v)).amplitudes();
      res.converged = run.converged;
    }
  }
  res.value = std::sqrt(std::clamp(best, 0.0, 1.0));
  res.evaluations = evals;
  return res;
}

DivergenceResult entropic_divergence_pauli_closed(const PauliChannel& p,
                                                  const PauliChannel& q) {
  const Vector3& cp = p.distortion_diagonal();
  const Vector3& cq = q.distortion_diagonal();
  const Vector3 mid = (cp + cq) / 2.0;
  Vector3 vals;
  for (int i = 0; i < 3; ++i) {
    vals[i] = entropy_from_sq_length(mid[i] * mid[i]) -
              0.5 * (entropy_from_sq_length(cp[i] * cp[i]) +
                     entropy_from_sq_length(cq[i] * cq[i]));
  }
  int axis = 0;
  for (int i = 1; i < 3; ++i) {
    if (vals[i] > vals[axis]) axis = i;
  }
  int tied = 0;
  for (int i = 0; i < 3; ++i) {
    if (vals[i] >= vals[axis] - 1e-12) ++tied;
  }
  DivergenceResult res;
  res.value = std::sqrt(std::max(vals[axis], 0.0));
  res.method = DivMethod::closed_form;
  res.evaluations = 3;
  res.argmax = bloch_pure(Vector3::Unit(axis)).amplitudes();
  res.axis = axis;
  res.tied_axes = tied;
  res.converged = true;
  return res;
}

DivergenceResult entropic_divergence_scaled_rotation(double alpha1, const Matrix3& r1,
                                                     double alpha2, const Matrix3& r2) {
  if (alpha1 < -1e-12 || alpha1 > 1.0 + 1e-12 || alpha2 < -1e-12 || alpha2 > 1.0 + 1e-12) {
    throw std::invalid_argument("scale factors must lie in [0, 1]");
  }
  require_rotation(r1);
  require_rotation(r2);

  DivergenceResult res;
  res.method = DivMethod::closed_form;
  res.evaluations = 1;
  res.converged = true;
  if (alpha1 == alpha2 && (r1 - r2).norm() == 0.0) {
    res.value = 0.0;
    res.argmax = bloch_pure(Vector3::UnitZ()).amplitudes();
    return res;
  }

  // The probe enters only through the averaged output length, which is
  // minimized (entropy maximized) along the softest direction of the mean map.
  const double overlap = (r1.transpose() * r2).trace();
  const double r_opt = std::clamp(
      (alpha1 * alpha1 + alpha2 * alpha2 + alpha1 * alpha2 * (overlap - 1.0)) / 4.0,
      0.0, 1.0);
  const double inner =
      entropy_from_sq_length(r_opt) - 0.5 * (entropy_from_sq_length(alpha1 * alpha1) +
                                             entropy_from_sq_length(alpha2 * alpha2));
  res.value = std::sqrt(std::max(inner, 0.0));

  const Matrix3 mean = (alpha1 * r1 + alpha2 * r2) / 2.0;
  const Matrix3 gram = mean.transpose() * mean;
  Eigen::SelfAdjointEigenSolver<Matrix3> solver(
      Matrix3((gram + gram.transpose()) / 2.0));
  res.argmax = bloch_pure(solver.eigenvectors().col(0)).amplitudes();
  return res;
}

double trace_channel_divergence_unital(const Channel& e, const Channel& f) {
  const FanoForm fano_e = fano_of(e);
  const FanoForm fano_f = fano_of(f);
  if (fano_e.translation.norm() > 1e-9 || fano_f.translation.norm() > 1e-9) {
    throw std::invalid_argument("trace divergence closed form needs unital channels");
  }
  const Matrix3 delta = fano_e.distortion - fano_f.distortion;
  const Matrix3 gram = delta.transpose() * delta;
  Eigen::SelfAdjointEigenSolver<Matrix3> solver(
      Matrix3((gram + gram.transpose()) / 2.0));
  return 0.5 * std::sqrt(std::max(solver.eigenvalues().maxCoeff(), 0.0));
}

DivergenceResult trace_divergence_k1_numeric(const Channel& e, const Channel& f,
                                             const GridRefineOptions& opts) {
  require_same_dim(e, f);
  if (channel_dim(e) != 2) {
    throw std::invalid_argument("single-qubit probe scan needs qubit channels");
  }
  const BlochScan scan = bloch_grid_refine(
      [&](const Vector3& dir) {
        const DensityMatrix probe = bloch_pure(dir).projector();
        return trace_distance(apply(e, probe), apply(f, probe));
      },
      opts);
  DivergenceResult res;
  res.value = scan.value;
  res.method = DivMethod::grid_refine;
  res.evaluations = scan.evaluations;
  res.argmax = bloch_pure(scan.direction).amplitudes();
  res.converged = scan.converged;
  return res;
}

ChainRuleReport chain_rule_check(const Channel& e, const Channel& f,
                                 Eigen::Index ancilla_dim, int samples,
                                 std::uint64_t seed, double d_k_known) {
  require_same_dim(e, f);
  const Eigen::Index dim = channel_dim(e);
  ChainRuleReport report;
  report.samples = samples;
  if (d_k_known >= 0.0) {
    report.d_k = d_k_known;
  } else if (std::holds_alternative<PauliChannel>(e) &&
             std::holds_alternative<PauliChannel>(f) && ancilla_dim >= dim) {
    // Bell-diagonal Choi states: the maximally entangled probe is optimal.
    report.d_k = d_t_pauli_iso(std::get<PauliChannel>(e), std::get<PauliChannel>(f));
  } else {
    report.d_k = entropic_divergence_k(e, f, ancilla_dim).value;
  }

  const KrausChannel lifted_e = extend(e, ancilla_dim);
  const KrausChannel lifted_f = extend(f, ancilla_dim);
  Rng rng(seed);
  double worst = -std::numeric_limits<double>::infinity();
  double amortized = 0.0;
  for (int s = 0; s < samples; ++s) {
    const DensityMatrix rho = ginibre_state(dim * ancilla_dim, rng);
    const DensityMatrix sigma = ginibre_state(dim * ancilla_dim, rng);
    const double output_dist =
        transmission_distance(apply(lifted_e, rho), apply(lifted_f, sigma));
    const double gap = output_dist - transmission_distance(rho, sigma);
    amortized = std::max(amortized, gap);
    worst = std::max(worst, gap - report.d_k);
  }
  report.max_violation = samples > 0 ? worst : 0.0;
  report.amortized_estimate = samples > 0 ? amortized : 0.0;
  return report;
}

BistochasticChainReport bistochastic_chain_check(const Channel& e1, const Channel& e2,
                                                 const Channel& f2,
                                                 const Channel& reference) {
  if (!kraus_of(reference).unital()) {
    throw std::invalid_argument("reference map must be bistochastic");
  }
  BistochasticChainReport report;
  report.lhs = d_t_iso(compose(e2, e1), compose(f2, reference));
  report.first_leg = d_t_iso(e1, reference);
  report.second_leg = d_t_iso(e2, f2);
  report.holds = report.lhs <= report.first_leg + report.second_leg + 1e-9;
  return report;
}

}  // namespace qchan
