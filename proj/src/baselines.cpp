#include "momentdist/baselines.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <sstream>

#include "momentdist/error.hpp"
#include "momentdist/moments.hpp"

namespace momentdist {

double euclidean_distance(const FeatureVector& a, const FeatureVector& b) {
  if (a.values.size() != b.values.size()) throw InputError("feature vectors have different lengths");
  double total = 0.0;
  for (std::size_t i = 0; i < a.values.size(); ++i) {
    const double d = a.values[i] - b.values[i];
    total += d * d;
  }
  return std::sqrt(total);
}

Eigen::MatrixXd cov_descriptor(const Graph& g, std::size_t k, bool center) {
  const std::size_t n = g.num_vertices();
  if (k < 2) throw InputError("cov descriptor needs k >= 2");
  if (n == 0) throw InputError("cov descriptor of a graph with no vertices");

  const auto rows = static_cast<Eigen::Index>(n);
  const auto cols = static_cast<Eigen::Index>(k);
  Eigen::MatrixXd x(rows, cols);
  std::vector<double> w(n, 1.0 / std::sqrt(static_cast<double>(n)));
  std::vector<double> next(n);
  for (Eigen::Index i = 0; i < cols; ++i) {
    g.multiply(w, next);
    w.swap(next);
    Eigen::Map<Eigen::VectorXd> col(w.data(), rows);
    const double norm = col.norm();
    if (norm > 0.0) col /= norm;
    x.col(i) = col;
  }
  if (center) x.colwise() -= x.rowwise().mean();
  return (x.transpose() * x) / static_cast<double>(n);
}

double default_jitter(const Eigen::MatrixXd& c1, const Eigen::MatrixXd& c2) {
  const double t = (c1.trace() + c2.trace()) / (2.0 * static_cast<double>(c1.rows()));
  return t > 0.0 ? 1e-8 * t : 1e-12;
}

namespace {

double log_det(const Eigen::MatrixXd& m) {
  const Eigen::LLT<Eigen::MatrixXd> llt(m);
  if (llt.info() != Eigen::Success) throw NumericError("Bhattacharyya distance: matrix is not positive definite");
  return 2.0 * llt.matrixLLT().diagonal().array().log().sum();
}

}  // namespace

double bhattacharyya_dist(const Eigen::MatrixXd& c1, const Eigen::MatrixXd& c2, std::optional<double> jitter) {
  if (c1.rows() != c2.rows() || c1.cols() != c2.cols() || c1.rows() != c1.cols()) {
    throw InputError("Bhattacharyya distance: size mismatch");
  }
  const double j = jitter.value_or(default_jitter(c1, c2));
  const Eigen::MatrixXd id = Eigen::MatrixXd::Identity(c1.rows(), c1.cols());
  const Eigen::MatrixXd s1 = c1 + j * id;
  const Eigen::MatrixXd s2 = c2 + j * id;
  const double d = 0.5 * log_det(0.5 * (s1 + s2)) - 0.25 * log_det(s1) - 0.25 * log_det(s2);
  return std::max(d, 0.0);
}

FeatureVector nclm_vector(const Graph& g) {
  const std::size_t n = g.num_vertices();
  if (g.num_edges() == 0) throw InputError("NCLM features are undefined for an edgeless graph");
  const MomentSequence ms = trace_moments(g, 7);
  const double nd = static_cast<double>(n);
  FeatureVector f{"nclm", {}};
  for (std::size_t i = 2; i <= 7; ++i) {
    // tr(A^i) / n^i = m_i / n^(i-1)
    const double walks = std::max(ms[i] * nd, 1.0);
    f.values.push_back(std::log(walks) - static_cast<double>(i) * std::log(nd));
  }
  return f;
}

FeatureVector top_k_eigenvalues(const Graph& g, std::size_t k, const EigsOptions& options) {
  const std::size_t n = g.num_vertices();
  FeatureVector f{"eigs", {}};
  if (n <= options.dense_threshold) {
    if (n > 0) {
      Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(to_dense(g), Eigen::EigenvaluesOnly);
      for (std::size_t i = 0; i < std::min(k, n); ++i) {
        f.values.push_back(solver.eigenvalues()(static_cast<Eigen::Index>(n - 1 - i)));
      }
    }
  } else {
    f.values = lanczos_largest(
        n, [&g](std::span<const double> x, std::span<double> y) { g.multiply(x, y); }, k, options.lanczos);
  }
  f.values.resize(k, 0.0);
  return f;
}

Graphlet3Counts graphlet3_counts(const Graph& g) {
  const std::uint64_t n = g.num_vertices();
  std::uint64_t triangles3 = 0;  // each triangle counted once per edge
  std::uint64_t one_edge = 0;
  std::uint64_t pairs = 0;
  for (Vertex u = 0; u < n; ++u) {
    const auto nu = g.neighbors(u);
    const std::uint64_t du = nu.size();
    pairs += du * (du - (du > 0 ? 1 : 0)) / 2;
    for (Vertex v : nu) {
      if (v <= u) continue;
      const auto nv = g.neighbors(v);
      std::uint64_t common = 0;
      auto a = nu.begin();
      auto b = nv.begin();
      while (a != nu.end() && b != nv.end()) {
        if (*a < *b) {
          ++a;
        } else if (*b < *a) {
          ++b;
        } else {
          ++common;
          ++a;
          ++b;
        }
      }
      triangles3 += common;
      // Third vertices adjacent to neither endpoint.
      one_edge += n - du - nv.size() + common;
    }
  }
  Graphlet3Counts c;
  c.triangle = triangles3 / 3;
  c.wedge = pairs - 3 * c.triangle;
  c.one_edge = one_edge;
  const std::uint64_t total = n < 3 ? 0 : n * (n - 1) * (n - 2) / 6;
  c.empty = total - c.triangle - c.wedge - c.one_edge;
  return c;
}

FeatureVector graphlet3_distribution(const Graph& g) {
  const std::size_t n = g.num_vertices();
  if (n < 3) throw InputError("3-graphlet distribution needs at least 3 vertices");
  const Graphlet3Counts c = graphlet3_counts(g);
  const double total = static_cast<double>(n) * static_cast<double>(n - 1) * static_cast<double>(n - 2) / 6.0;
  return {"gk3",
          {static_cast<double>(c.empty) / total, static_cast<double>(c.one_edge) / total,
           static_cast<double>(c.wedge) / total, static_cast<double>(c.triangle) / total}};
}

std::size_t classify_graphlet4(const Graph& g, Vertex a, Vertex b, Vertex c, Vertex d) {
  const Vertex vs[4] = {a, b, c, d};
  int deg[4] = {0, 0, 0, 0};
  int edges = 0;
  for (int i = 0; i < 4; ++i) {
    for (int j = i + 1; j < 4; ++j) {
      if (g.has_edge(vs[i], vs[j])) {
        ++edges;
        ++deg[i];
        ++deg[j];
      }
    }
  }
  const int max_deg = *std::max_element(deg, deg + 4);
  const int min_deg = *std::min_element(deg, deg + 4);
  // Order: 4K1, K4, co-diamond, diamond, co-paw, paw, 2K2, C4, claw, co-claw, P4
  switch (edges) {
    case 0: return 0;
    case 6: return 1;
    case 1: return 2;
    case 5: return 3;
    case 2: return max_deg == 2 ? 4 : 6;
    case 4: return max_deg == 3 ? 5 : 7;
    default:  // 3 edges
      if (max_deg == 3) return 8;
      return min_deg == 0 ? 9 : 10;
  }
}

FeatureVector graphlet4_distribution(const Graph& g, std::size_t samples, std::uint64_t seed) {
  const std::size_t n = g.num_vertices();
  if (n < 4) throw InputError("4-graphlet distribution needs at least 4 vertices");
  if (samples == 0) throw InputError("4-graphlet distribution needs at least one sample");
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<Vertex> pick(0, static_cast<Vertex>(n - 1));
  std::vector<std::uint64_t> counts(11, 0);
  for (std::size_t s = 0; s < samples; ++s) {
    Vertex v[4];
    for (int i = 0; i < 4; ++i) {
      bool fresh = false;
      while (!fresh) {
        v[i] = pick(rng);
        fresh = std::find(v, v + i, v[i]) == v + i;
      }
    }
    ++counts[classify_graphlet4(g, v[0], v[1], v[2], v[3])];
  }
  FeatureVector f{"gk4", {}};
  for (std::uint64_t c : counts) f.values.push_back(static_cast<double>(c) / static_cast<double>(samples));
  return f;
}

double wicker_distance(const Graph& g1, const Graph& g2, double k, const WickerOptions& options) {
  const std::size_t n = g1.num_vertices();
  if (g2.num_vertices() != n) throw InputError("Wicker distance needs graphs with the same number of vertices");
  if (n > options.dense_threshold) throw InputError("Wicker distance: graph exceeds the dense threshold");
  if (n == 0) return 0.0;
  const Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> s1(to_dense(g1));
  const Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> s2(to_dense(g2));
  const Eigen::MatrixXd overlap = (s1.eigenvectors().transpose() * s2.eigenvectors()).cwiseAbs();
  double total = 0.0;
  for (Eigen::Index i = 0; i < overlap.rows(); ++i) {
    const double l = s1.eigenvalues()(i);
    for (Eigen::Index j = 0; j < overlap.cols(); ++j) {
      const double o = overlap(i, j);
      if (o <= options.overlap_tol) continue;
      const double m = s2.eigenvalues()(j);
      const double scale = std::max(1.0, std::abs(l) + std::abs(m));
      const double num = (l - m) * (l - m);
      const double den = l + m;
      if (num <= 1e-18 * scale * scale) continue;
      if (std::abs(den) <= 1e-9 * scale) {
        std::ostringstream msg;
        msg << "Wicker distance: eigenvalues " << l << " and " << m
            << " sum to zero with eigenvector overlap " << o;
        throw NumericError(msg.str());
      }
      total += num / den * std::pow(o, k);
    }
  }
  return total;
}

}  // namespace momentdist
