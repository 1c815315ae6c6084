#include "commands.hpp"

#include <chrono>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <numbers>
#include <sstream>

#include <json.hpp>

#include "qchan/hamiltonian.hpp"
#include "qchan/json_io.hpp"
#include "qchan/metrics.hpp"

namespace qchan::cli {

namespace {

using nlohmann::ordered_json;

std::string num9(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.9g", v);
  return buf;
}

void write_text(const std::string& path, const std::string& text) {
  if (path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream file(path);
  if (!file) throw std::runtime_error("cannot open output file " + path);
  file << text;
}

// Fixed-column numeric table rendered as CSV or a JSON array of row objects.
class Table {
 public:
  explicit Table(std::vector<std::string> columns) : columns_(std::move(columns)) {}

  void add_row(std::vector<double> values) { rows_.push_back(std::move(values)); }

  std::string csv() const {
    std::ostringstream out;
    for (std::size_t c = 0; c < columns_.size(); ++c) {
      out << (c ? "," : "") << columns_[c];
    }
    out << '\n';
    for (const auto& row : rows_) {
      for (std::size_t c = 0; c < row.size(); ++c) {
        out << (c ? "," : "") << num9(row[c]);
      }
      out << '\n';
    }
    return out.str();
  }

  ordered_json json_rows() const {
    ordered_json arr = ordered_json::array();
    for (const auto& row : rows_) {
      ordered_json obj;
      for (std::size_t c = 0; c < row.size(); ++c) obj[columns_[c]] = row[c];
      arr.push_back(std::move(obj));
    }
    return arr;
  }

 private:
  std::vector<std::string> columns_;
  std::vector<std::vector<double>> rows_;
};

void emit_table(const Table& table, const GlobalOptions& global) {
  if (global.format == "json") {
    write_text(global.out, table.json_rows().dump(2) + "\n");
  } else {
    write_text(global.out, table.csv());
  }
}

void put_argmax(ordered_json& out, const Vector& amplitudes) {
  std::vector<double> re, im;
  re.reserve(amplitudes.size());
  im.reserve(amplitudes.size());
  for (Eigen::Index i = 0; i < amplitudes.size(); ++i) {
    re.push_back(amplitudes[i].real());
    im.push_back(amplitudes[i].imag());
  }
  out["argmax_re"] = re;
  out["argmax_im"] = im;
}

const char* method_name(DivMethod method) {
  return method == DivMethod::closed_form ? "closed_form" : "grid_refine";
}

bool both_pauli(const Channel& a, const Channel& b) {
  return std::holds_alternative<PauliChannel>(a) && std::holds_alternative<PauliChannel>(b);
}

bool unital_qubit_pair(const Channel& a, const Channel& b) {
  if (channel_dim(a) != 2 || channel_dim(b) != 2) return false;
  return fano_of(a).translation.norm() <= 1e-9 && fano_of(b).translation.norm() <= 1e-9;
}

}  // namespace

int run_distance(const DistanceOptions& opt, const GlobalOptions& global) {
  const Channel a = load_channel(opt.channel_a);
  const Channel b = load_channel(opt.channel_b);

  GridRefineOptions grid;
  if (opt.iters > 0) grid.iters = opt.iters;
  RestartOptions restarts;
  restarts.seed = global.seed;
  if (opt.iters > 0) restarts.iters = opt.iters;
  if (opt.restarts > 0) restarts.restarts = opt.restarts;

  const auto t0 = std::chrono::steady_clock::now();
  ordered_json out;
  out["measure"] = opt.measure;
  int exit_code = 0;

  auto fill_result = [&](const DivergenceResult& res) {
    out["value"] = res.value;
    out["method"] = method_name(res.method);
    put_argmax(out, res.argmax);
    if (res.axis >= 0) out["axis"] = res.axis;
    out["evaluations"] = res.evaluations;
    out["converged"] = res.converged;
    if (!res.converged) exit_code = 4;
  };

  if (opt.measure == "d_t_iso") {
    out["value"] = d_t_iso(a, b);
    out["method"] = "choi";
  } else if (opt.measure == "d_t_K1") {
    if (both_pauli(a, b)) {
      fill_result(entropic_divergence_pauli_closed(std::get<PauliChannel>(a),
                                                   std::get<PauliChannel>(b)));
    } else {
      fill_result(entropic_divergence_k1(a, b, grid));
    }
  } else if (opt.measure == "d_t_K") {
    const Eigen::Index k = opt.k > 0 ? opt.k : channel_dim(a);
    out["k"] = static_cast<int>(k);
    if (both_pauli(a, b) && k >= channel_dim(a)) {
      out["value"] =
          d_t_pauli_iso(std::get<PauliChannel>(a), std::get<PauliChannel>(b));
      out["method"] = "closed_form";
    } else {
      fill_result(entropic_divergence_k(a, b, k, restarts));
    }
  } else if (opt.measure == "d_tr_K1") {
    if (unital_qubit_pair(a, b)) {
      out["value"] = trace_channel_divergence_unital(a, b);
      out["method"] = "closed_form";
    } else {
      fill_result(trace_divergence_k1_numeric(a, b, grid));
    }
  } else if (opt.measure == "T" || opt.measure == "F" || opt.measure == "D_B" ||
             opt.measure == "D_E") {
    const ChoiDistances dist = choi_map_distances(a, b);
    out["method"] = "choi";
    if (opt.measure == "T") out["value"] = dist.trace;
    if (opt.measure == "F") out["value"] = dist.fid;
    if (opt.measure == "D_B") out["value"] = dist.bures;
    if (opt.measure == "D_E") out["value"] = dist.entropic;
  } else if (opt.measure == "bounds") {
    const MapBounds bounds = map_bounds_report(a, b);
    out["value"] = bounds.value;
    out["method"] = "choi";
    out["lower"] = bounds.lower;
    out["upper_trace"] = bounds.upper_trace;
    out["upper_entropic"] = bounds.upper_entropic;
    out["upper_trace_active"] = bounds.upper_trace_active;
    out["all_hold"] = bounds.all_hold;
  } else {
    throw SchemaError("unknown measure \"" + opt.measure + "\"");
  }

  const std::chrono::duration<double, std::milli> elapsed =
      std::chrono::steady_clock::now() - t0;
  out["elapsed_ms"] = elapsed.count();
  write_text(global.out, out.dump(2) + "\n");
  return exit_code;
}

int run_tetra_surface(const TetraSurfaceOptions& opt, const GlobalOptions& global) {
  if (opt.center != "depolarizing0" && opt.center != "identity") {
    throw SchemaError("center must be depolarizing0 or identity");
  }
  if (opt.measure != "d_t_iso" && opt.measure != "d_t_K1") {
    throw SchemaError("measure must be d_t_iso or d_t_K1");
  }
  if (opt.band <= 0.0) throw SchemaError("band width must be positive");
  if (opt.grid < 2 || opt.grid > 256) throw SchemaError("grid must lie in [2, 256]");

  std::vector<double> radii = opt.radii;
  if (radii.empty()) {
    if (opt.center == "identity") {
      radii = {0.8, 0.6, 0.4, 0.2};
    } else if (opt.measure == "d_t_iso") {
      radii = {0.56, 0.42, 0.28, 0.14};
    } else {
      radii = {0.4, 0.3, 0.2, 0.1};
    }
  }
  for (double r : radii) {
    if (!(r > 0.0 && r < 1.0)) throw SchemaError("radius must lie in (0, 1)");
  }

  const PauliChannel center = opt.center == "identity"
                                  ? identity_channel()
                                  : PauliChannel::from_distortion(Vector3::Zero());

  // Distances are radius-independent: evaluate the lattice once, band after.
  struct LatticePoint {
    Vector3 c;
    double distance;
  };
  std::vector<LatticePoint> points;
  for (int i = 0; i < opt.grid; ++i) {
    for (int j = 0; j < opt.grid; ++j) {
      for (int k = 0; k < opt.grid; ++k) {
        const Vector3 c(-1.0 + 2.0 * i / (opt.grid - 1), -1.0 + 2.0 * j / (opt.grid - 1),
                        -1.0 + 2.0 * k / (opt.grid - 1));
        const Vector4 p(1.0 + c[0] + c[1] + c[2], 1.0 + c[0] - c[1] - c[2],
                        1.0 - c[0] + c[1] - c[2], 1.0 - c[0] - c[1] + c[2]);
        if (p.minCoeff() < -4.0e-10) continue;  // outside the tetrahedron
        const PauliChannel sample = PauliChannel::from_distortion(c);
        const double d = opt.measure == "d_t_iso"
                             ? d_t_pauli_iso(center, sample)
                             : entropic_divergence_pauli_closed(center, sample).value;
        points.push_back({c, d});
      }
    }
  }

  Table table({"radius", "c1", "c2", "c3", "distance"});
  for (double radius : radii) {
    for (const LatticePoint& point : points) {
      if (std::abs(point.distance - radius) <= opt.band) {
        table.add_row({radius, point.c[0], point.c[1], point.c[2], point.distance});
      }
    }
  }
  emit_table(table, global);
  return 0;
}

int run_teleport_noise(const TeleportNoiseOptions& opt, const GlobalOptions& global) {
  if (opt.x_grid < 2) throw SchemaError("x-grid needs at least two points");

  Table table({"x", "dtiso_pf_I", "dtiso_pf_D", "dtiso_I_D", "T_pf_I", "T_pf_D",
               "T_I_D", "dtK1"});
  const PauliChannel id = identity_channel();
  std::vector<std::string> violations;

  for (int i = 0; i < opt.x_grid; ++i) {
    const double x = static_cast<double>(i) / (opt.x_grid - 1);
    const PauliChannel pf = phase_flip(x);
    const PauliChannel dep = depolarizing(x);

    const double dtiso_pf_i = d_t_pauli_iso(pf, id);
    const double dtiso_pf_d = d_t_pauli_iso(pf, dep);
    const double dtiso_i_d = d_t_pauli_iso(id, dep);
    const double t_pf_i = choi_map_distances(pf, id).trace;
    const double t_pf_d = choi_map_distances(pf, dep).trace;
    const double t_i_d = choi_map_distances(id, dep).trace;
    const double dtk1 = entropic_divergence_pauli_closed(pf, id).value;
    table.add_row({x, dtiso_pf_i, dtiso_pf_d, dtiso_i_d, t_pf_i, t_pf_d, t_i_d, dtk1});

    if (std::abs(t_pf_i - t_pf_d) > 1e-10) {
      violations.push_back("T(pf,I) != T(pf,D) at x=" + num9(x));
    }
    // Strict orderings hold on the open interval; at x=1 the first pair ties.
    if (x > 1e-12 && x < 1.0 - 1e-12) {
      if (!(dtiso_pf_i < dtiso_pf_d && dtiso_pf_d < dtiso_i_d)) {
        violations.push_back("d_t_iso ordering violated at x=" + num9(x));
      }
      if (!(t_pf_i < t_i_d)) {
        violations.push_back("trace-distance ordering violated at x=" + num9(x));
      }
    }
  }

  emit_table(table, global);
  if (!violations.empty()) {
    for (const std::string& v : violations) std::cerr << "check failed: " << v << "\n";
    return 1;
  }
  return 0;
}

int run_hamiltonian(const HamiltonianOptions& opt, const GlobalOptions& global) {
  if (opt.theta < 0.0 || opt.theta > std::numbers::pi) {
    throw SchemaError("theta must lie in [0, pi]");
  }
  std::vector<double> gammas = opt.gammas;
  if (gammas.empty()) gammas = {0.0, 0.3, 0.6, 0.9, 1.2, 1.5, 1.8};
  for (double g : gammas) {
    if (g < 0.0) throw SchemaError("gamma must be nonnegative");
  }
  if (opt.t_grid < 8) throw SchemaError("t-grid too coarse");

  const Vector3 h1 = Vector3::UnitZ();
  const Vector3 h2(std::sin(opt.theta), 0.0, std::cos(opt.theta));

  Table table({"gamma", "t", "d_t_iso", "d_t_K1", "D_B", "p_error"});
  for (double gamma : gammas) {
    for (int k = 0; k <= opt.t_grid; ++k) {
      const double t = k * std::numbers::pi / opt.t_grid;
      const FanoForm e1 = decohered_channel(h1, gamma, t);
      const FanoForm e2 = decohered_channel(h2, gamma, t);
      const double iso = d_t_iso(e1, e2);
      const double alpha = std::exp(-gamma * t);
      const double k1 = entropic_divergence_scaled_rotation(
                            alpha, unitary_distortion(h1, t), alpha,
                            unitary_distortion(h2, t))
                            .value;
      const double bures = choi_map_distances(e1, e2).bures;
      table.add_row({gamma, t, iso, k1, bures, error_probability(gamma, t)});
    }
  }

  struct SummaryRow {
    double gamma;
    const char* measure;
    double t_star;
    double value;
  };
  std::vector<SummaryRow> summary;
  const std::pair<ScanMeasure, const char*> measures[] = {
      {ScanMeasure::transmission_iso, "d_t_iso"},
      {ScanMeasure::transmission_k1, "d_t_K1"},
      {ScanMeasure::error_prob, "p_error"},
  };
  for (double gamma : gammas) {
    for (const auto& [measure, name] : measures) {
      const TimeScan scan = optimal_time_scan(opt.theta, gamma, measure);
      summary.push_back({gamma, name, scan.t_star, scan.value});
    }
  }

  if (global.format == "json") {
    ordered_json doc;
    doc["rows"] = table.json_rows();
    ordered_json times = ordered_json::array();
    for (const SummaryRow& row : summary) {
      ordered_json obj;
      obj["gamma"] = row.gamma;
      obj["measure"] = row.measure;
      obj["t_star"] = row.t_star;
      obj["value"] = row.value;
      times.push_back(std::move(obj));
    }
    doc["optimal_times"] = std::move(times);
    write_text(global.out, doc.dump(2) + "\n");
  } else {
    std::ostringstream out;
    out << table.csv() << "\ngamma,measure,t_star,value\n";
    for (const SummaryRow& row : summary) {
      out << num9(row.gamma) << ',' << row.measure << ',' << num9(row.t_star) << ','
          << num9(row.value) << '\n';
    }
    write_text(global.out, out.str());
  }
  return 0;
}

int run_bounds_scatter(const BoundsScatterOptions& opt, const GlobalOptions& global) {
  if (opt.pairs < 1) throw SchemaError("pair count must be positive");

  Rng rng(global.seed);
  Table table({"sqrtT", "DE", "dtiso"});
  int trace_side = 0;
  int entropic_side = 0;
  int failures = 0;
  for (int i = 0; i < opt.pairs; ++i) {
    const PauliChannel p = random_pauli(rng);
    const PauliChannel q = random_pauli(rng);
    const MapBounds bounds = map_bounds_report(p, q);
    table.add_row({bounds.upper_trace, bounds.upper_entropic, bounds.value});
    if (bounds.value > std::min(bounds.upper_trace, bounds.upper_entropic) + 1e-9) {
      ++failures;
    }
    if (bounds.upper_trace < bounds.upper_entropic) {
      ++trace_side;
    } else if (bounds.upper_trace > bounds.upper_entropic) {
      ++entropic_side;
    }
  }

  emit_table(table, global);
  std::cerr << "sqrtT < DE on " << trace_side << " pairs, sqrtT > DE on "
            << entropic_side << " pairs\n";
  if (failures > 0) {
    std::cerr << "check failed: upper bound violated on " << failures << " pairs\n";
    return 1;
  }
  return 0;
}

}  // namespace qchan::cli
