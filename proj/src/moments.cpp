#include "momentdist/moments.hpp"

#include <cmath>
#include <iostream>
#include <string>

#include "momentdist/error.hpp"
#include "momentdist/parallel.hpp"

namespace momentdist {

std::string_view to_string(StateKind kind) {
  switch (kind) {
    case StateKind::uniform_vector: return "vector";
    case StateKind::trace: return "trace";
    case StateKind::custom_vector: return "custom-vector";
    case StateKind::density: return "density";
  }
  return "unknown";
}

void DensityParams::validate(std::size_t n, double tol) const {
  const double nd = static_cast<double>(n);
  if (n == 0) throw InputError("density state on an empty graph");
  if (std::abs(nd * (p + q) - 1.0) > tol) throw InputError("density state needs n(p + q) = 1");
  if (p < -tol) throw InputError("density state needs p >= 0");
  if (p + q * nd < -tol) throw InputError("density state needs p + qn >= 0");
}

MomentSequence vector_state_moments(const Graph& g, std::size_t max_order, unsigned threads) {
  const std::size_t n = g.num_vertices();
  if (n == 0) throw InputError("vector state is undefined on a graph with no vertices");

  MomentSequence out{StateKind::uniform_vector, {}};
  out.values.reserve(max_order + 1);
  out.values.push_back(1.0);

  std::vector<double> w(n, 1.0);
  std::vector<double> next(n);
  const double nd = static_cast<double>(n);
  for (std::size_t k = 1; k <= max_order; ++k) {
    g.multiply(w, next, threads);
    w.swap(next);
    double total = 0.0;
    for (double x : w) total += x;
    out.values.push_back(total / nd);
  }
  return out;
}

namespace {

// tr(A^k) is an integer; snap once it is representable exactly.
double snap_integer(double value) {
  constexpr double kExactLimit = 9007199254740992.0;  // 2^53
  return std::abs(value) < kExactLimit ? std::round(value) : value;
}

std::vector<double> closed_walk_totals_dense(const Graph& g, std::size_t max_order) {
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(to_dense(g), Eigen::EigenvaluesOnly);
  const Eigen::VectorXd& lambda = solver.eigenvalues();
  std::vector<double> totals(max_order + 1, 0.0);
  Eigen::VectorXd power = Eigen::VectorXd::Ones(lambda.size());
  for (std::size_t k = 0; k <= max_order; ++k) {
    totals[k] = snap_integer(power.sum());
    power = power.cwiseProduct(lambda);
  }
  return totals;
}

std::vector<double> closed_walk_totals_sparse(const Graph& g, std::size_t max_order, unsigned threads) {
  const std::size_t n = g.num_vertices();
  std::clog << "warning: trace moments for " << n << " vertices use per-vertex product chains, O(n K |E|)\n";

  // diag[i * (K+1) + k] = (A^k)_{ii}
  const std::size_t stride = max_order + 1;
  std::vector<double> diag(n * stride, 0.0);
  constexpr std::size_t kBlock = 32;
  const std::size_t blocks = (n + kBlock - 1) / kBlock;
  parallel_for(blocks, threads, [&](std::size_t b) {
    std::vector<double> w(n), next(n);
    for (std::size_t i = b * kBlock; i < std::min(n, (b + 1) * kBlock); ++i) {
      std::fill(w.begin(), w.end(), 0.0);
      w[i] = 1.0;
      diag[i * stride] = 1.0;
      for (std::size_t k = 1; k <= max_order; ++k) {
        g.multiply(w, next);
        w.swap(next);
        diag[i * stride + k] = w[i];
      }
    }
  });

  std::vector<double> totals(stride, 0.0);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t k = 0; k < stride; ++k) totals[k] += diag[i * stride + k];
  }
  for (double& t : totals) t = snap_integer(t);
  return totals;
}

std::vector<double> closed_walk_totals(const Graph& g, std::size_t max_order, const TraceOptions& options) {
  if (g.num_vertices() <= options.dense_threshold) return closed_walk_totals_dense(g, max_order);
  return closed_walk_totals_sparse(g, max_order, resolve_threads(options.threads));
}

}  // namespace

MomentSequence trace_moments(const Graph& g, std::size_t max_order, const TraceOptions& options) {
  const std::size_t n = g.num_vertices();
  if (n == 0) throw InputError("trace state is undefined on a graph with no vertices");
  MomentSequence out{StateKind::trace, closed_walk_totals(g, max_order, options)};
  for (double& v : out.values) v /= static_cast<double>(n);
  return out;
}

MomentSequence xi_state_moments(const Eigen::MatrixXd& a, const Eigen::VectorXd& xi, std::size_t max_order) {
  if (a.rows() != a.cols() || a.rows() != xi.size()) throw InputError("xi_state_moments: size mismatch");
  if (a.size() > 0 && (a - a.transpose()).cwiseAbs().maxCoeff() > 1e-10) {
    throw InputError("xi_state_moments: matrix is not symmetric");
  }
  if (std::abs(xi.norm() - 1.0) > 1e-10) throw InputError("xi_state_moments: state vector is not a unit vector");

  MomentSequence out{StateKind::custom_vector, {}};
  out.values.reserve(max_order + 1);
  Eigen::VectorXd w = xi;
  for (std::size_t k = 0; k <= max_order; ++k) {
    out.values.push_back(xi.dot(w));
    if (k < max_order) w = a * w;
  }
  return out;
}

MomentSequence density_state_moments(const Graph& g, const DensityParams& params, std::size_t max_order,
                                     const TraceOptions& options) {
  const std::size_t n = g.num_vertices();
  params.validate(n);
  const double nd = static_cast<double>(n);

  // Skip whichever half of the state has zero weight.
  std::vector<double> trace_part(max_order + 1, 0.0);
  std::vector<double> vector_part(max_order + 1, 0.0);
  if (params.p != 0.0) trace_part = trace_moments(g, max_order, options).values;
  if (params.q != 0.0) vector_part = vector_state_moments(g, max_order, options.threads).values;

  MomentSequence out{StateKind::density, std::vector<double>(max_order + 1)};
  for (std::size_t k = 0; k <= max_order; ++k) {
    out.values[k] = nd * params.p * trace_part[k] + nd * params.q * vector_part[k];
  }
  return out;
}

}  // namespace momentdist
