#pragma once

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <vector>

#include <Eigen/Dense>

#include "momentdist/graph.hpp"

namespace momentdist {

struct Atom {
  double lambda = 0.0;
  double omega = 0.0;
};

/// Finitely supported probability measure sum_i omega_i delta_{lambda_i},
/// atoms sorted by increasing lambda.
struct DiscreteMeasure {
  std::vector<Atom> atoms;
  /// Absolute tolerance that was used to merge eigenvalues.
  double merge_tol = 0.0;

  std::size_t size() const noexcept { return atoms.size(); }
  double total_weight() const;
};

struct MeasureOptions {
  /// Eigenvalues closer than relative_merge_tol * max|lambda| share an atom.
  double relative_merge_tol = 1e-8;
  /// Atoms with omega <= weight_floor are dropped.
  double weight_floor = 1e-12;
  std::size_t dense_threshold = 4096;
};

/// Spectral distribution of symmetric A in the vector state xi: one atom per
/// eigenvalue cluster, weighted by the squared norm of the projection of xi
/// onto that eigenspace. Throws InputError when A is not symmetric, xi is not
/// a unit vector (1e-10) or A is larger than dense_threshold.
DiscreteMeasure spectral_measure(const Eigen::MatrixXd& a, const Eigen::VectorXd& xi,
                                 const MeasureOptions& options = {});

/// sum_i omega_i lambda_i^k
double measure_moment(const DiscreteMeasure& mu, std::size_t k);

/// Measure of the adjacency matrix in the normalised all-ones state.
DiscreteMeasure graph_spectral_measure(const Graph& g, const MeasureOptions& options = {});

/// CSV with header "lambda,omega" and one row per atom.
void write_stem_csv(std::ostream& out, const DiscreteMeasure& mu);

struct RealizedMeasure {
  Eigen::MatrixXd a;
  Eigen::VectorXd xi;
};

/// Symmetric matrix and unit vector whose spectral distribution is the given
/// list of atoms: A = U diag(lambda) U^T with U an orthogonal map sending
/// (sqrt(omega_i)) to xi. The default xi is the normalised all-ones vector.
/// Throws InputError on negative weights, weights not summing to 1 (1e-10),
/// repeated locations or a xi of the wrong size or norm.
RealizedMeasure realize_measure(const std::vector<Atom>& atoms, std::optional<Eigen::VectorXd> xi = std::nullopt);

}  // namespace momentdist
