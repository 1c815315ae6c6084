#include "qchan/optimize.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace qchan {

std::vector<Vector3> fibonacci_sphere(int count) {
  if (count < 1) throw std::invalid_argument("lattice needs at least one point");
  const double golden_angle = std::numbers::pi * (3.0 - std::sqrt(5.0));
  std::vector<Vector3> points;
  points.reserve(count);
  for (int i = 0; i < count; ++i) {
    const double z = 1.0 - (2.0 * i + 1.0) / count;
    const double r = std::sqrt(std::max(0.0, 1.0 - z * z));
    const double phi = golden_angle * i;
    points.emplace_back(r * std::cos(phi), r * std::sin(phi), z);
  }
  return points;
}

SimplexResult nelder_mead_max(const std::function<double(const Eigen::VectorXd&)>& objective,
                              const Eigen::VectorXd& start, const SimplexOptions& opts) {
  const Eigen::Index n = start.size();
  if (n < 1) throw std::invalid_argument("simplex needs a nonempty start point");

  SimplexResult result;
  auto eval = [&](const Eigen::VectorXd& x) {
    ++result.evaluations;
    return objective(x);
  };

  std::vector<Eigen::VectorXd> xs(n + 1, start);
  std::vector<double> fs(n + 1);
  for (Eigen::Index i = 0; i < n; ++i) xs[i + 1][i] += opts.step;
  for (Eigen::Index i = 0; i <= n; ++i) fs[i] = eval(xs[i]);

  std::vector<Eigen::Index> order(n + 1);
  for (int iter = 0; iter < opts.max_iters; ++iter) {
    for (Eigen::Index i = 0; i <= n; ++i) order[i] = i;
    std::sort(order.begin(), order.end(),
              [&](Eigen::Index a, Eigen::Index b) { return fs[a] > fs[b]; });
    const Eigen::Index best = order[0], worst = order[n], second_worst = order[n - 1];

    if (fs[best] - fs[worst] < opts.tol) {
      result.converged = true;
      break;
    }

    Eigen::VectorXd centroid = Eigen::VectorXd::Zero(n);
    for (Eigen::Index i = 0; i <= n; ++i)
      if (i != worst) centroid += xs[i];
    centroid /= static_cast<double>(n);

    const Eigen::VectorXd reflected = centroid + (centroid - xs[worst]);
    const double f_reflected = eval(reflected);
    if (f_reflected > fs[best]) {
      const Eigen::VectorXd expanded = centroid + 2.0 * (centroid - xs[worst]);
      const double f_expanded = eval(expanded);
      if (f_expanded > f_reflected) {
        xs[worst] = expanded;
        fs[worst] = f_expanded;
      } else {
        xs[worst] = reflected;
        fs[worst] = f_reflected;
      }
      continue;
    }
    if (f_reflected > fs[second_worst]) {
      xs[worst] = reflected;
      fs[worst] = f_reflected;
      continue;
    }
    const Eigen::VectorXd contracted = centroid + 0.5 * (xs[worst] - centroid);
    const double f_contracted = eval(contracted);
    if (f_contracted > fs[worst]) {
      xs[worst] = contracted;
      fs[worst] = f_contracted;
      continue;
    }
    for (Eigen::Index i = 0; i <= n; ++i) {  // shrink toward the best vertex
      if (i == best) continue;
      xs[i] = xs[best] + 0.5 * (xs[i] - xs[best]);
      fs[i] = eval(xs[i]);
    }
  }

  Eigen::Index best = 0;
  for (Eigen::Index i = 1; i <= n; ++i)
    if (fs[i] > fs[best]) best = i;
  result.x = xs[best];
  result.value = fs[best];
  return result;
}

LinePoint golden_section_max(const std::function<double(double)>& objective,
                             double lo, double hi, double xtol) {
  if (!(hi > lo)) throw std::invalid_argument("golden section needs lo < hi");
  const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
  double a = lo, b = hi;
  double c = b - inv_phi * (b - a);
  double d = a + inv_phi * (b - a);
  double fc = objective(c), fd = objective(d);
  while (b - a > xtol) {
    if (fc > fd) {
      b = d;
      d = c;
      fd = fc;
      c = b - inv_phi * (b - a);
      fc = objective(c);
    } else {
      a = c;
      c = d;
      fc = fd;
      d = a + inv_phi * (b - a);
      fd = objective(d);
    }
  }
  const double x = (a + b) / 2.0;
  return {x, objective(x)};
}

}  // namespace qchan
