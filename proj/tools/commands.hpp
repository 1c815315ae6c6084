// Command implementations behind the qchan CLI. Each run_* returns the
// process exit code: 0 success, 2 malformed input, 3 violated channel
// invariant, 4 optimizer non-convergence (mapping done in main for thrown
// errors; non-convergence is signalled by the returned code).
#pragma once

#include <string>
#include <vector>

namespace qchan::cli {

struct GlobalOptions {
  unsigned long long seed = 1;
  std::string out;            // empty writes to stdout
  std::string format = "csv"; // csv | json (single-result commands always emit JSON)
};

struct DistanceOptions {
  std::string channel_a;
  std::string channel_b;
  std::string measure = "d_t_iso";
  int k = 0;         // ancilla dimension for d_t_K; 0 means the system dimension
  int iters = 0;     // simplex iteration budget override; 0 keeps the default
  int restarts = 0;  // restart count override for d_t_K; 0 keeps the default
};

struct TetraSurfaceOptions {
  std::string center = "depolarizing0";  // depolarizing0 | identity
  std::string measure = "d_t_iso";       // d_t_iso | d_t_K1
  std::vector<double> radii;             // empty picks the defaults for (center, measure)
  int grid = 64;
  double band = 0.01;
};

struct TeleportNoiseOptions {
  int x_grid = 101;  // rows; grid spans [0, 1] inclusive
};

struct HamiltonianOptions {
  double theta;                // set in main; default pi/2
  std::vector<double> gammas;  // empty picks {0, 0.3, ..., 1.8}
  int t_grid = 256;
};

struct BoundsScatterOptions {
  int pairs = 1000;
};

int run_distance(const DistanceOptions& opt, const GlobalOptions& global);
int run_tetra_surface(const TetraSurfaceOptions& opt, const GlobalOptions& global);
int run_teleport_noise(const TeleportNoiseOptions& opt, const GlobalOptions& global);
int run_hamiltonian(const HamiltonianOptions& opt, const GlobalOptions& global);
int run_bounds_scatter(const BoundsScatterOptions& opt, const GlobalOptions& global);

}  // namespace qchan::cli
