#include <exception>
#include <iostream>
#include <numbers>

#include <CLI11.hpp>

#include "commands.hpp"
#include "qchan/types.hpp"

int main(int argc, char** argv) {
  CLI::App app{"entropic distinguishability measures between quantum channels"};
  app.require_subcommand(1);
  app.fallthrough();

  qchan::cli::GlobalOptions global;
  app.add_option("--seed", global.seed, "seed for sampling and optimizer restarts")
      ->capture_default_str();
  app.add_option("--out", global.out, "write output to this file instead of stdout");
  app.add_option("--format", global.format, "tabular output format")
      ->check(CLI::IsMember({"csv", "json"}))
      ->capture_default_str();

  auto* distance = app.add_subcommand(
      "distance", "distance between two channels given as JSON files");
  qchan::cli::DistanceOptions distance_opt;
  distance->add_option("channel_a", distance_opt.channel_a, "first channel file")
      ->required();
  distance->add_option("channel_b", distance_opt.channel_b, "second channel file")
      ->required();
  distance
      ->add_option("--measure", distance_opt.measure,
                   "d_t_iso (Choi states), d_t_K1 / d_t_K (divergence over probe "
                   "states), d_tr_K1 (trace-norm analogue), T, F, D_B, D_E "
                   "(Choi-state distances), bounds (sandwich report)")
      ->check(CLI::IsMember({"d_t_iso", "d_t_K1", "d_t_K", "d_tr_K1", "T", "F",
                             "D_B", "D_E", "bounds"}))
      ->capture_default_str();
  distance->add_option("--k", distance_opt.k,
                       "ancilla dimension for d_t_K (default: system dimension)");
  distance->add_option("--iters", distance_opt.iters,
                       "simplex iteration budget for numeric measures");
  distance->add_option("--restarts", distance_opt.restarts,
                       "optimizer restarts for d_t_K");

  auto* tetra = app.add_subcommand(
      "tetra-surface", "level sets of the distance to a center channel over the "
                       "Pauli-channel tetrahedron");
  qchan::cli::TetraSurfaceOptions tetra_opt;
  tetra->add_option("--center", tetra_opt.center, "depolarizing0 | identity")
      ->capture_default_str();
  tetra->add_option("--measure", tetra_opt.measure, "d_t_iso | d_t_K1")
      ->capture_default_str();
  tetra->add_option("--radius", tetra_opt.radii,
                    "level-set radii in (0,1); defaults depend on center/measure");
  tetra->add_option("--grid", tetra_opt.grid, "lattice points per axis")
      ->check(CLI::Range(2, 256))
      ->capture_default_str();
  tetra->add_option("--band", tetra_opt.band, "half-width of the level-set band")
      ->capture_default_str();

  auto* teleport = app.add_subcommand(
      "teleport-noise", "distance curves for phase-flip noise against identity "
                        "and depolarizing references");
  qchan::cli::TeleportNoiseOptions teleport_opt;
  teleport->add_option("--x-grid", teleport_opt.x_grid, "grid points on [0, 1]")
      ->check(CLI::Range(2, 100000))
      ->capture_default_str();

  auto* hamiltonian = app.add_subcommand(
      "hamiltonian", "distinguishability of two Hamiltonian axes under "
                     "decoherence, with optimal probing times");
  qchan::cli::HamiltonianOptions hamiltonian_opt;
  hamiltonian_opt.theta = std::numbers::pi / 2.0;
  hamiltonian->add_option("--theta", hamiltonian_opt.theta,
                          "angle between the rotation axes, in [0, pi]")
      ->capture_default_str();
  hamiltonian->add_option("--gamma", hamiltonian_opt.gammas,
                          "decay rates (default 0 0.3 ... 1.8)");
  hamiltonian->add_option("--t-grid", hamiltonian_opt.t_grid, "time samples on (0, pi]")
      ->check(CLI::Range(8, 100000))
      ->capture_default_str();

  auto* scatter = app.add_subcommand(
      "bounds-scatter", "upper-bound scatter (sqrt T vs entropic distance) over "
                        "random Pauli-channel pairs");
  qchan::cli::BoundsScatterOptions scatter_opt;
  scatter->add_option("--pairs", scatter_opt.pairs, "number of sampled pairs")
      ->check(CLI::Range(1, 10000000))
      ->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);  // --help and friends
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (distance->parsed()) return qchan::cli::run_distance(distance_opt, global);
    if (tetra->parsed()) return qchan::cli::run_tetra_surface(tetra_opt, global);
    if (teleport->parsed()) return qchan::cli::run_teleport_noise(teleport_opt, global);
    if (hamiltonian->parsed()) return qchan::cli::run_hamiltonian(hamiltonian_opt, global);
    if (scatter->parsed()) return qchan::cli::run_bounds_scatter(scatter_opt, global);
  } catch (const qchan::SchemaError& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return 2;
  } catch (const qchan::InvariantError& e) {
    std::cerr << "invariant violated: " << e.what() << "\n";
    return 3;
  } catch (const qchan::ConvergenceError& e) {
    std::cerr << "optimizer did not converge: " << e.what() << "\n";
    return 4;
  } catch (const std::invalid_argument& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
