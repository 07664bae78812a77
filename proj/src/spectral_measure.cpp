#include "momentdist/spectral_measure.hpp"

#include <algorithm>
#include <cmath>
#include <ostream>
#include <string>

#include "momentdist/error.hpp"

namespace momentdist {

double DiscreteMeasure::total_weight() const {
  double total = 0.0;
  for (const Atom& atom : atoms) total += atom.omega;
  return total;
}

DiscreteMeasure spectral_measure(const Eigen::MatrixXd& a, const Eigen::VectorXd& xi, const MeasureOptions& options) {
  if (a.rows() != a.cols() || a.rows() != xi.size()) throw InputError("spectral_measure: size mismatch");
  if (a.rows() == 0) throw InputError("spectral_measure: empty matrix");
  if (static_cast<std::size_t>(a.rows()) > options.dense_threshold) {
    throw InputError("spectral_measure: " + std::to_string(a.rows()) + " rows exceeds the dense threshold of " +
                     std::to_string(options.dense_threshold) + "; use the moment pipeline for large graphs");
  }
  if ((a - a.transpose()).cwiseAbs().maxCoeff() > 1e-10) throw InputError("spectral_measure: matrix is not symmetric");
  if (std::abs(xi.norm() - 1.0) > 1e-10) throw InputError("spectral_measure: state vector is not a unit vector");

  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(a);
  const Eigen::VectorXd& lambda = solver.eigenvalues();
  const Eigen::VectorXd proj = solver.eigenvectors().transpose() * xi;

  DiscreteMeasure mu;
  mu.merge_tol = options.relative_merge_tol * lambda.cwiseAbs().maxCoeff();

  const Eigen::Index n = lambda.size();
  Eigen::Index start = 0;
  while (start < n) {
    Eigen::Index end = start + 1;
    while (end < n && lambda(end) - lambda(end - 1) <= mu.merge_tol) ++end;
    double omega = 0.0;
    double location = 0.0;
    for (Eigen::Index i = start; i < end; ++i) {
      omega += proj(i) * proj(i);
      location += lambda(i);
    }
    location /= static_cast<double>(end - start);
    if (std::abs(location) <= mu.merge_tol) location = 0.0;
    if (omega > options.weight_floor) mu.atoms.push_back({location, omega});
    start = end;
  }
  return mu;
}

double measure_moment(const DiscreteMeasure& mu, std::size_t k) {
  double total = 0.0;
  for (const Atom& atom : mu.atoms) total += atom.omega * std::pow(atom.lambda, static_cast<double>(k));
  return total;
}

DiscreteMeasure graph_spectral_measure(const Graph& g, const MeasureOptions& options) {
  const std::size_t n = g.num_vertices();
  if (n == 0) throw InputError("spectral measure of a graph with no vertices");
  if (n > options.dense_threshold) {
    throw InputError("graph has " + std::to_string(n) + " vertices, above the dense threshold of " +
                     std::to_string(options.dense_threshold) + "; use vector-state moments instead");
  }
  const Eigen::VectorXd e = Eigen::VectorXd::Constant(static_cast<Eigen::Index>(n), 1.0 / std::sqrt(double(n)));
  return spectral_measure(to_dense(g), e, options);
}

void write_stem_csv(std::ostream& out, const DiscreteMeasure& mu) {
  const auto old_precision = out.precision(12);
  out << "lambda,omega\n";
  for (const Atom& atom : mu.atoms) out << atom.lambda << ',' << atom.omega << '\n';
  out.precision(old_precision);
}

RealizedMeasure realize_measure(const std::vector<Atom>& atoms, std::optional<Eigen::VectorXd> xi) {
  const auto k = static_cast<Eigen::Index>(atoms.size());
  if (k == 0) throw InputError("realize_measure: no atoms");
  double total = 0.0;
  for (const Atom& atom : atoms) {
    if (atom.omega < 0.0) throw InputError("realize_measure: negative weight");
    total += atom.omega;
  }
  if (std::abs(total - 1.0) > 1e-10) throw InputError("realize_measure: weights must sum to 1");
  for (std::size_t i = 0; i < atoms.size(); ++i) {
    for (std::size_t j = i + 1; j < atoms.size(); ++j) {
      if (atoms[i].lambda == atoms[j].lambda) throw InputError("realize_measure: repeated atom location");
    }
  }

  Eigen::VectorXd target = xi.value_or(Eigen::VectorXd::Constant(k, 1.0 / std::sqrt(double(k))));
  if (target.size() != k) throw InputError("realize_measure: state vector has the wrong size");
  if (std::abs(target.norm() - 1.0) > 1e-10) throw InputError("realize_measure: state vector is not a unit vector");

  Eigen::VectorXd v(k);
  Eigen::VectorXd lambda(k);
  for (Eigen::Index i = 0; i < k; ++i) {
    v(i) = std::sqrt(atoms[static_cast<std::size_t>(i)].omega);
    lambda(i) = atoms[static_cast<std::size_t>(i)].lambda;
  }
  v /= v.norm();

  // Householder reflection H = I - 2 u u^T with H v = target.
  Eigen::MatrixXd u_map = Eigen::MatrixXd::Identity(k, k);
  const Eigen::VectorXd diff = v - target;
  if (diff.norm() > 1e-14) {
    const Eigen::VectorXd u = diff / diff.norm();
    u_map -= 2.0 * u * u.transpose();
  }
  Eigen::MatrixXd a = u_map * lambda.asDiagonal() * u_map.transpose();
  a = 0.5 * (a + a.transpose());
  return {std::move(a), std::move(target)};
}

}  // namespace momentdist
