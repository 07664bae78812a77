#pragma once

#include <cstddef>
#include <functional>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "momentdist/graph.hpp"
#include "momentdist/psd_metrics.hpp"

namespace momentdist {

struct DistanceMatrix {
  std::vector<std::string> labels;
  /// Symmetric, nonnegative, zero diagonal.
  Eigen::MatrixXd entries;
  /// Number of pairs that fell back from the configured metric to Frobenius.
  std::size_t fallbacks = 0;

  std::size_t size() const noexcept { return labels.size(); }
  double operator()(std::size_t i, std::size_t j) const {
    return entries(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j));
  }
};

/// Header "label,<labels...>", then one row per label.
void write_csv(std::ostream& out, const DistanceMatrix& d);
/// {"labels": [...], "entries": [[...], ...]}
void write_json(std::ostream& out, const DistanceMatrix& d);
/// Reads the write_json format. Throws InputError on a malformed document
/// or a matrix that is not square, symmetric and zero on the diagonal.
DistanceMatrix read_json(std::istream& in);

/// Moment matrices are computed once per graph, then every pair is
/// compared. Work is split over cfg.threads workers; the result does not
/// depend on the thread count. Throws InputError for fewer than two graphs
/// or a label list of the wrong length (an empty list means "g0", "g1", ...).
DistanceMatrix pairwise_distance_matrix(std::span<const Graph> graphs, const DistanceConfig& cfg,
                                        std::vector<std::string> labels = {});

/// Same assembly for an arbitrary symmetric pair function of item indices.
DistanceMatrix pairwise_from_function(std::size_t count, const std::function<double(std::size_t, std::size_t)>& dist,
                                      unsigned threads, std::vector<std::string> labels = {});

/// Euclidean distances between rows of a feature table.
DistanceMatrix euclidean_distance_matrix(const std::vector<std::vector<double>>& features, unsigned threads,
                                         std::vector<std::string> labels = {});

/// log(1 + x) entrywise.
DistanceMatrix log1p_scaled(DistanceMatrix d);

}  // namespace momentdist
