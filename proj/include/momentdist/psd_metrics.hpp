#pragma once

#include <cstddef>
#include <string_view>

#include <Eigen/Dense>

#include "momentdist/graph.hpp"
#include "momentdist/hankel.hpp"
#include "momentdist/moments.hpp"

namespace momentdist {

enum class Metric {
  frobenius,
  affine_invariant,
  log_frobenius,
  cholesky_frobenius,
  j_divergence,
};

enum class Scaling { none, log1p };

std::string_view to_string(Metric metric);
std::string_view to_string(Scaling scaling);
/// Accepts the to_string spellings, with '_' and '-' interchangeable.
/// Throws ConfigError on unknown names.
Metric parse_metric(std::string_view name);
Scaling parse_scaling(std::string_view name);

/// Every metric except Frobenius needs positive definite arguments.
constexpr bool requires_positive_definite(Metric metric) { return metric != Metric::frobenius; }

struct DistanceConfig {
  std::size_t degree = 4;
  Metric metric = Metric::affine_invariant;
  /// Added to the diagonal of every moment matrix when > 0.
  double eps = 0.0;
  Scaling scaling = Scaling::none;
  /// A matrix counts as singular when its smallest eigenvalue is
  /// <= singular_tol * trace.
  double singular_tol = 1e-10;
  StateKind state = StateKind::uniform_vector;
  unsigned threads = 1;

  /// Throws ConfigError.
  void validate() const;
};

/// ||a - b||_2 over all entries. Throws InputError on a size mismatch.
double frobenius_dist(const Eigen::MatrixXd& a, const Eigen::MatrixXd& b);

/// ||log(a^{-1/2} b a^{-1/2})||_2. Throws SingularMatrixError if either
/// argument is numerically singular (see DistanceConfig::singular_tol).
double affine_invariant_dist(const Eigen::MatrixXd& a, const Eigen::MatrixXd& b, double singular_tol = 1e-10);

/// ||log a - log b||_2.
double log_frobenius_dist(const Eigen::MatrixXd& a, const Eigen::MatrixXd& b, double singular_tol = 1e-10);

/// ||L_a - L_b||_2 with L the lower Cholesky factor.
double cholesky_frobenius_dist(const Eigen::MatrixXd& a, const Eigen::MatrixXd& b, double singular_tol = 1e-10);

/// (1/2) sqrt(tr(a^{-1} b + b^{-1} a) - 2k) for k x k arguments.
double j_divergence_dist(const Eigen::MatrixXd& a, const Eigen::MatrixXd& b, double singular_tol = 1e-10);

double metric_distance(Metric metric, const Eigen::MatrixXd& a, const Eigen::MatrixXd& b,
                       double singular_tol = 1e-10);

/// Smallest eigenvalue of a symmetric matrix.
double smallest_eigenvalue(const Eigen::MatrixXd& m);
bool is_numerically_singular(const Eigen::MatrixXd& m, double singular_tol = 1e-10);

struct GraphDistance {
  double value = 0.0;
  /// The configured metric needed a positive definite matrix and got a
  /// singular one, so the value is the Frobenius distance.
  bool fell_back = false;
};

/// Degree-cfg.degree moment matrix of g in cfg.state, plus eps I.
MomentMatrix graph_moment_matrix(const Graph& g, const DistanceConfig& cfg);

/// Applies the configured metric, the Frobenius fallback and the scaling.
GraphDistance compare_moment_matrices(const MomentMatrix& a, const MomentMatrix& b, const DistanceConfig& cfg);

GraphDistance graph_distance(const Graph& g1, const Graph& g2, const DistanceConfig& cfg = {});

}  // namespace momentdist
