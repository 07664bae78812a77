#include "momentdist/psd_metrics.hpp"

#include <cmath>
#include <sstream>
#include <string>

#include "momentdist/error.hpp"

namespace momentdist {

std::string_view to_string(Metric metric) {
  switch (metric) {
    case Metric::frobenius: return "frobenius";
    case Metric::affine_invariant: return "affine-invariant";
    case Metric::log_frobenius: return "log-frobenius";
    case Metric::cholesky_frobenius: return "cholesky-frobenius";
    case Metric::j_divergence: return "j-divergence";
  }
  return "unknown";
}

std::string_view to_string(Scaling scaling) {
  return scaling == Scaling::log1p ? "log1p" : "none";
}

namespace {

std::string dashed(std::string_view name) {
  std::string s(name);
  for (char& c : s) {
    if (c == '_') c = '-';
  }
  return s;
}

void check_sizes(const Eigen::MatrixXd& a, const Eigen::MatrixXd& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols() || a.rows() != a.cols()) {
    throw InputError("metric arguments must be square matrices of the same size");
  }
}

void require_positive_definite(const Eigen::MatrixXd& m, double singular_tol) {
  const double smallest = smallest_eigenvalue(m);
  if (smallest <= singular_tol * m.trace()) {
    std::ostringstream msg;
    msg << "matrix is numerically singular (smallest eigenvalue " << smallest << ", trace " << m.trace() << ")";
    throw SingularMatrixError(smallest, msg.str());
  }
}

// f(m) for symmetric m via its eigendecomposition.
template <class F>
Eigen::MatrixXd spectral_function(const Eigen::MatrixXd& m, F f) {
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(m);
  const Eigen::VectorXd mapped = solver.eigenvalues().unaryExpr(f);
  return solver.eigenvectors() * mapped.asDiagonal() * solver.eigenvectors().transpose();
}

}  // namespace

Metric parse_metric(std::string_view name) {
  const std::string s = dashed(name);
  if (s == "frobenius") return Metric::frobenius;
  if (s == "affine-invariant" || s == "affine" || s == "geodesic") return Metric::affine_invariant;
  if (s == "log-frobenius") return Metric::log_frobenius;
  if (s == "cholesky-frobenius" || s == "cholesky") return Metric::cholesky_frobenius;
  if (s == "j-divergence") return Metric::j_divergence;
  throw ConfigError("unknown metric '" + std::string(name) + "'");
}

Scaling parse_scaling(std::string_view name) {
  if (name == "none") return Scaling::none;
  if (name == "log1p") return Scaling::log1p;
  throw ConfigError("unknown scaling '" + std::string(name) + "'");
}

void DistanceConfig::validate() const {
  if (degree < 1) throw ConfigError("moment matrix degree must be at least 1");
  if (!(eps >= 0.0)) throw ConfigError("regularisation eps must be >= 0");
  if (!(singular_tol >= 0.0)) throw ConfigError("singular_tol must be >= 0");
  if (state != StateKind::uniform_vector && state != StateKind::trace) {
    throw ConfigError("graph distances use the vector or trace state");
  }
}

double smallest_eigenvalue(const Eigen::MatrixXd& m) {
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(m, Eigen::EigenvaluesOnly);
  return solver.eigenvalues()(0);
}

bool is_numerically_singular(const Eigen::MatrixXd& m, double singular_tol) {
  return smallest_eigenvalue(m) <= singular_tol * m.trace();
}

double frobenius_dist(const Eigen::MatrixXd& a, const Eigen::MatrixXd& b) {
  check_sizes(a, b);
  return (a - b).norm();
}

double affine_invariant_dist(const Eigen::MatrixXd& a, const Eigen::MatrixXd& b, double singular_tol) {
  check_sizes(a, b);
  require_positive_definite(a, singular_tol);
  require_positive_definite(b, singular_tol);
  const Eigen::MatrixXd s = spectral_function(a, [](double x) { return 1.0 / std::sqrt(x); });
  Eigen::MatrixXd w = s * b * s;
  w = 0.5 * (w + w.transpose());
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(w, Eigen::EigenvaluesOnly);
  double total = 0.0;
  for (double x : solver.eigenvalues()) {
    const double l = std::log(x);
    total += l * l;
  }
  return std::sqrt(total);
}

double log_frobenius_dist(const Eigen::MatrixXd& a, const Eigen::MatrixXd& b, double singular_tol) {
  check_sizes(a, b);
  require_positive_definite(a, singular_tol);
  require_positive_definite(b, singular_tol);
  auto log = [](double x) { return std::log(x); };
  return (spectral_function(a, log) - spectral_function(b, log)).norm();
}

double cholesky_frobenius_dist(const Eigen::MatrixXd& a, const Eigen::MatrixXd& b, double singular_tol) {
  check_sizes(a, b);
  require_positive_definite(a, singular_tol);
  require_positive_definite(b, singular_tol);
  const Eigen::MatrixXd la = Eigen::LLT<Eigen::MatrixXd>(a).matrixL();
  const Eigen::MatrixXd lb = Eigen::LLT<Eigen::MatrixXd>(b).matrixL();
  return (la - lb).norm();
}

double j_divergence_dist(const Eigen::MatrixXd& a, const Eigen::MatrixXd& b, double singular_tol) {
  check_sizes(a, b);
  require_positive_definite(a, singular_tol);
  require_positive_definite(b, singular_tol);
  const Eigen::LDLT<Eigen::MatrixXd> fa(a);
  const Eigen::LDLT<Eigen::MatrixXd> fb(b);
  const double t = fa.solve(b).trace() + fb.solve(a).trace() - 2.0 * static_cast<double>(a.rows());
  return 0.5 * std::sqrt(std::max(t, 0.0));
}

double metric_distance(Metric metric, const Eigen::MatrixXd& a, const Eigen::MatrixXd& b, double singular_tol) {
  switch (metric) {
    case Metric::frobenius: return frobenius_dist(a, b);
    case Metric::affine_invariant: return affine_invariant_dist(a, b, singular_tol);
    case Metric::log_frobenius: return log_frobenius_dist(a, b, singular_tol);
    case Metric::cholesky_frobenius: return cholesky_frobenius_dist(a, b, singular_tol);
    case Metric::j_divergence: return j_divergence_dist(a, b, singular_tol);
  }
  throw ConfigError("unknown metric");
}

MomentMatrix graph_moment_matrix(const Graph& g, const DistanceConfig& cfg) {
  const std::size_t order = order_for_degree(cfg.degree);
  const MomentSequence ms = cfg.state == StateKind::trace
                                ? trace_moments(g, order, TraceOptions{.threads = cfg.threads})
                                : vector_state_moments(g, order, cfg.threads);
  MomentMatrix m = build_moment_matrix(ms, cfg.degree);
  if (cfg.eps > 0.0) {
    Eigen::MatrixXd e = m.entries();
    e.diagonal().array() += cfg.eps;
    m = MomentMatrix(std::move(e));
  }
  return m;
}

GraphDistance compare_moment_matrices(const MomentMatrix& a, const MomentMatrix& b, const DistanceConfig& cfg) {
  GraphDistance out;
  if (a.entries() == b.entries()) return out;
  if (requires_positive_definite(cfg.metric) &&
      (is_numerically_singular(a.entries(), cfg.singular_tol) ||
       is_numerically_singular(b.entries(), cfg.singular_tol))) {
    out.value = frobenius_dist(a.entries(), b.entries());
    out.fell_back = true;
  } else {
    out.value = metric_distance(cfg.metric, a.entries(), b.entries(), cfg.singular_tol);
  }
  if (cfg.scaling == Scaling::log1p) out.value = std::log1p(out.value);
  return out;
}

GraphDistance graph_distance(const Graph& g1, const Graph& g2, const DistanceConfig& cfg) {
  cfg.validate();
  return compare_moment_matrices(graph_moment_matrix(g1, cfg), graph_moment_matrix(g2, cfg), cfg);
}

}  // namespace momentdist
