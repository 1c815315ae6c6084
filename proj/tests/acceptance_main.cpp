// Acceptance gate: every release-blocking numerical claim, one line each.
// Exits nonzero if any criterion fails.

#include "qchan/hamiltonian.hpp"
#include "qchan/metrics.hpp"
#include "qchan/random.hpp"

#include <chrono>
#include <cmath>
#include <cstdarg>
#include <cstdio>
#include <numbers>
#include <string>
#include <vector>

using namespace qchan;

namespace {

constexpr double kPi = std::numbers::pi;

struct Stopwatch {
  std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();
  double seconds() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  }
};

std::string fmt(const char* f, ...) {
  char buf[512];
  va_list args;
  va_start(args, f);
  std::vsnprintf(buf, sizeof buf, f, args);
  va_end(args);
  return buf;
}

FanoForm random_unital_qubit(Rng& rng) {
  FanoForm fano;
  fano.distortion = random_rotation(rng) *
                    Matrix3(random_pauli(rng).distortion_diagonal().asDiagonal()) *
                    random_rotation(rng);
  return fano;
}

}  // namespace

int main() {
  int failures = 0;
  auto report = [&](int n, bool ok, const std::string& detail) {
    std::printf("criterion %2d: %s (%s)\n", n, ok ? "PASS" : "FAIL", detail.c_str());
    std::fflush(stdout);
    if (!ok) ++failures;
  };

  // 1. metric axioms for the Choi transmission distance on Pauli channels
  {
    Stopwatch watch;
    Rng rng(12345);
    bool symmetric = true, nonneg = true, indisc = true;
    double worst_triangle = 0.0;
    for (int i = 0; i < 1000; ++i) {
      const Channel a{random_pauli(rng)};
      const Channel b{random_pauli(rng)};
      const Channel c{random_pauli(rng)};
      const double ab = d_t_iso(a, b);
      const double bc = d_t_iso(b, c);
      const double ac = d_t_iso(a, c);
      symmetric = symmetric && ab == d_t_iso(b, a);
      nonneg = nonneg && ab >= 0.0 && bc >= 0.0 && ac >= 0.0;
      worst_triangle = std::max(worst_triangle, ac - ab - bc);
      const double t_ab = choi_map_distances(a, b).trace;
      indisc = indisc && ((ab < 1e-8) == (t_ab < 1e-8));
      indisc = indisc && d_t_iso(a, a) < 1e-12 && choi_map_distances(a, a).trace < 1e-12;
    }
    const double elapsed = watch.seconds();
    const bool ok = symmetric && nonneg && indisc && worst_triangle <= 1e-9 && elapsed < 10.0;
    report(1, ok,
           fmt("symmetry %s, worst triangle slack %.2e, indiscernibles %s, %.2f s",
               symmetric ? "exact" : "BROKEN", worst_triangle, indisc ? "ok" : "BROKEN",
               elapsed));
  }

  // 2. closed form vs single-probe brute force for Pauli pairs
  {
    Stopwatch watch;
    Rng rng(777);
    double worst = 0.0;
    for (int i = 0; i < 100; ++i) {
      const PauliChannel p = random_pauli(rng);
      const PauliChannel q = random_pauli(rng);
      const double closed = entropic_divergence_pauli_closed(p, q).value;
      const double numeric = entropic_divergence_k1(Channel(p), Channel(q)).value;
      worst = std::max(worst, std::abs(closed - numeric));
    }
    const double elapsed = watch.seconds();
    const bool ok = worst <= 1e-6 && elapsed < 60.0;
    report(2, ok, fmt("100 pairs, worst |closed - numeric| = %.2e, %.2f s", worst, elapsed));
  }

  // 3. unital trace-divergence closed form vs Bloch-sphere brute force
  {
    Rng rng(999);
    double worst = 0.0;
    for (int i = 0; i < 100; ++i) {
      const Channel e{random_unital_qubit(rng)};
      const Channel f{random_unital_qubit(rng)};
      const double closed = trace_channel_divergence_unital(e, f);
      const double numeric = trace_divergence_k1_numeric(e, f).value;
      worst = std::max(worst, std::abs(closed - numeric));
    }
    report(3, worst <= 1e-6, fmt("100 pairs, worst |closed - numeric| = %.2e", worst));
  }

  // 4. scaled-rotation closed form vs brute force, and exact zero on equal inputs
  {
    Rng rng(2024);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    std::uniform_real_distribution<double> angle(0.0, kPi);
    double worst = 0.0;
    bool zero_ok = true;
    for (int i = 0; i < 50; ++i) {
      const double a1 = unit(rng), a2 = unit(rng);
      const double theta = angle(rng), t = angle(rng);
      const Matrix3 r1 = unitary_distortion(Vector3::UnitZ(), t);
      const Matrix3 r2 =
          unitary_distortion(Vector3(std::sin(theta), 0.0, std::cos(theta)), t);
      const double closed = entropic_divergence_scaled_rotation(a1, r1, a2, r2).value;
      FanoForm f1, f2;
      f1.distortion = a1 * r1;
      f2.distortion = a2 * r2;
      const double numeric = entropic_divergence_k1(Channel(f1), Channel(f2)).value;
      worst = std::max(worst, std::abs(closed - numeric));
      zero_ok = zero_ok && entropic_divergence_scaled_rotation(a1, r1, a1, r1).value == 0.0;
    }
    report(4, worst <= 1e-6 && zero_ok,
           fmt("50 tuples, worst |closed - numeric| = %.2e, equal inputs %s", worst,
               zero_ok ? "exactly 0" : "NONZERO"));
  }

  // 5. depolarizing anchor values and the linear trace-divergence ramp
  {
    const Channel id{identity_channel()};
    const Channel dep1{depolarizing(1.0)};

    Eigen::VectorXd spec4(4);
    spec4 << 5.0 / 8.0, 1.0 / 8.0, 1.0 / 8.0, 1.0 / 8.0;
    const double iso_oracle = std::sqrt(entropy_bits(spec4) - 1.0);
    const double iso = d_t_iso(id, dep1);

    const double k1_oracle = std::sqrt(binary_entropy(0.25) - 0.5 * binary_entropy(0.5));
    const double k1 = entropic_divergence_k1(id, dep1).value;

    double worst_ramp = 0.0;
    for (int k = 1; k <= 99; ++k) {
      const double x = k / 100.0;
      worst_ramp = std::max(
          worst_ramp,
          std::abs(trace_channel_divergence_unital(id, Channel(depolarizing(x))) - x / 2.0));
    }

    // the x/2 ramp is exact up to representation rounding of 1 - (1 - x); a few
    // ulps at 0.5 scale is the attainable meaning of "exact" here
    const bool ok = std::abs(iso - iso_oracle) <= 1e-9 && std::abs(iso - 0.740807) <= 1e-6 &&
                    std::abs(k1 - k1_oracle) <= 1e-6 && std::abs(k1 - 0.557923) <= 1e-6 &&
                    worst_ramp <= 1e-15;
    report(5, ok,
           fmt("iso %.9f vs %.9f, K1 %.9f vs %.9f, ramp deviation %.2e", iso, iso_oracle,
               k1, k1_oracle, worst_ramp));
  }

  // 6. phase-flip / depolarizing orderings across the strength grid
  {
    bool iso_order = true, trace_rel = true, chain = true;
    for (int k = 1; k <= 99; ++k) {
      const double x = k / 100.0;
      const Channel pf{phase_flip(x)};
      const Channel dep{depolarizing(x)};
      const Channel id{identity_channel()};

      const double d1 = d_t_iso(pf, id);
      const double d2 = d_t_iso(pf, dep);
      const double d3 = d_t_iso(id, dep);
      iso_order = iso_order && d1 < d2 && d2 < d3;

      const double t1 = choi_map_distances(pf, id).trace;
      const double t2 = choi_map_distances(pf, dep).trace;
      const double t3 = choi_map_distances(id, dep).trace;
      trace_rel = trace_rel && std::abs(t1 - t2) <= 1e-10 && t1 < t3 && t2 < t3;

      const double q1 =
          entropic_divergence_pauli_closed(phase_flip(x), identity_channel()).value;
      const double q2 =
          entropic_divergence_pauli_closed(phase_flip(x), depolarizing(x)).value;
      const double q3 =
          entropic_divergence_pauli_closed(identity_channel(), depolarizing(x)).value;
      chain = chain && std::abs(q1 - q2) <= 1e-9 && std::abs(q2 - q3) <= 1e-9 &&
              std::abs(q1 - d1) <= 1e-9;
    }
    report(6, iso_order && trace_rel && chain,
           fmt("iso ordering %s, trace relations %s, single-probe chain %s",
               iso_order ? "ok" : "BROKEN", trace_rel ? "ok" : "BROKEN",
               chain ? "ok" : "BROKEN"));
  }

  // 7. lower/upper sandwich on random pairs, with both upper bounds binding somewhere
  {
    Rng rng(31337);
    bool hold = true;
    int trace_binds = 0, entropic_binds = 0;
    for (int i = 0; i < 1000; ++i) {
      const MapBounds b = map_bounds_report(Channel(random_pauli(rng)),
                                            Channel(random_pauli(rng)));
      hold = hold && b.lower <= b.value + 1e-9 && b.value <= b.upper_trace + 1e-9 &&
             b.value <= b.upper_entropic + 1e-9;
      if (b.upper_trace < b.upper_entropic) {
        ++trace_binds;
      } else if (b.upper_trace > b.upper_entropic) {
        ++entropic_binds;
      }
    }
    const bool ok = hold && trace_binds > 0 && entropic_binds > 0;
    report(7, ok,
           fmt("1000 pairs, bounds %s, sqrtT binding on %d, entropic on %d",
               hold ? "hold" : "BROKEN", trace_binds, entropic_binds));
  }

  // 8. chain rule and amortization collapse on sampled bipartite inputs
  {
    Stopwatch watch;
    bool ok = true;
    double worst_violation = -1.0, worst_excess = -1.0;
    const std::pair<Channel, Channel> pairs[] = {
        {Channel(identity_channel()), Channel(depolarizing(0.5))},
        {Channel(phase_flip(0.3)), Channel(depolarizing(0.7))},
    };
    for (const auto& [e, f] : pairs) {
      const ChainRuleReport r = chain_rule_check(e, f, 2, 500, 20260817);
      ok = ok && r.max_violation <= 1e-9 && r.amortized_estimate <= r.d_k + 1e-6;
      worst_violation = std::max(worst_violation, r.max_violation);
      worst_excess = std::max(worst_excess, r.amortized_estimate - r.d_k);
    }
    const double elapsed = watch.seconds();
    ok = ok && elapsed < 300.0;
    report(8, ok,
           fmt("500 samples x 2 pairs, worst violation %.2e, amortized excess %.2e, %.1f s",
               worst_violation, worst_excess, elapsed));
  }

  // 9. ancilla-assisted optimizer reaches the Choi value for Pauli pairs
  {
    Rng rng(4242);
    double worst = 0.0;
    for (int i = 0; i < 25; ++i) {
      const PauliChannel p = random_pauli(rng);
      const PauliChannel q = random_pauli(rng);
      const double assisted = entropic_divergence_k(Channel(p), Channel(q), 2).value;
      worst = std::max(worst, std::abs(assisted - d_t_pauli_iso(p, q)));
    }
    report(9, worst <= 2e-3, fmt("25 pairs, worst |K=2 - choi| = %.2e", worst));
  }

  // 10. optimal probing times for two-axis Hamiltonian discrimination
  {
    const TimeScan head = optimal_time_scan(kPi, 0.0, ScanMeasure::transmission_iso);
    const bool head_ok =
        std::abs(head.t_star - kPi / 4.0) <= 1e-6 && head.value >= 1.0 - 1e-6;

    const std::vector<double> gammas = {0.0, 0.3, 0.6, 0.9, 1.2, 1.5, 1.8};
    std::vector<double> t_stars;
    bool monotone = true;
    for (double gamma : gammas) {
      t_stars.push_back(
          optimal_time_scan(kPi / 2.0, gamma, ScanMeasure::transmission_iso).t_star);
      if (t_stars.size() > 1 && t_stars.back() > t_stars[t_stars.size() - 2] + 1e-9) {
        monotone = false;
      }
    }

    bool below_error_opt = true;
    for (std::size_t i = 1; i < gammas.size(); ++i) {  // positive rates only
      below_error_opt =
          below_error_opt && t_stars[i] <= std::atan(1.0 / gammas[i]) + 1e-3;
    }
    const double t_star_2 =
        optimal_time_scan(kPi / 2.0, 2.0, ScanMeasure::transmission_iso).t_star;
    below_error_opt = below_error_opt && t_star_2 <= std::atan(0.5) + 1e-3;

    report(10, head_ok && monotone && below_error_opt,
           fmt("t* = %.7f at theta=pi (want pi/4), monotone %s, below arctan(1/gamma) %s",
               head.t_star, monotone ? "yes" : "NO", below_error_opt ? "yes" : "NO"));
  }

  if (failures == 0) {
    std::printf("all 10 criteria passed\n");
  } else {
    std::printf("%d criteria failed\n", failures);
  }
  return failures == 0 ? 0 : 1;
}
