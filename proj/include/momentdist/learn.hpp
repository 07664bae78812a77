#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include <Eigen/Dense>

#include "momentdist/distance_matrix.hpp"

namespace momentdist {

/// K_ij = exp(-D_ij).
Eigen::MatrixXd kernel_from_distances(const Eigen::MatrixXd& d);
inline Eigen::MatrixXd kernel_from_distances(const DistanceMatrix& d) { return kernel_from_distances(d.entries); }

struct KMeansOptions {
  std::size_t restarts = 20;
  std::size_t max_iterations = 300;
  std::uint64_t seed = 0;
  unsigned threads = 1;
};

struct KMeansResult {
  std::vector<std::size_t> assignment;
  /// sum_x ||phi(x) - c(x)||^2 for the returned assignment.
  double objective = 0.0;
  /// Objective after seeding and after every iteration of the winning
  /// restart; non-increasing.
  std::vector<double> objective_trace;
  std::size_t best_restart = 0;
};

/// Lloyd iterations in the feature space of K. Each restart seeds with
/// k-means++ and runs until no point moves; a cluster that empties is given
/// the point farthest from its current centre. The lowest objective wins,
/// earliest restart on ties; the result depends only on K, k and the seed.
/// Throws InputError when K is not square, k < 1 or k > n.
KMeansResult kernel_kmeans(const Eigen::MatrixXd& kernel, std::size_t k, const KMeansOptions& options = {});

/// Largest fraction of points whose cluster maps to their label under a
/// one-to-one matching of cluster ids to label ids. Exhaustive search for up
/// to 6 ids, Hungarian method above. Throws InputError on length mismatch.
double clustering_accuracy(std::span<const std::size_t> assignment, std::span<const std::size_t> labels);

/// Maximum-weight perfect matching on a square matrix; returns row -> column.
std::vector<std::size_t> hungarian_max(const Eigen::MatrixXd& weights);

/// Fold index for every item. Stratified round-robin per class after a
/// seeded shuffle; when some class has fewer members than folds, prints a
/// warning and deals all items round-robin instead.
std::vector<std::size_t> make_folds(std::span<const std::size_t> labels, std::size_t folds, std::uint64_t seed,
                                    bool* stratified = nullptr);

struct KnnResult {
  double accuracy_mean = 0.0;
  double accuracy_std = 0.0;
  std::vector<double> per_fold;
  bool stratified = true;
};

/// Majority vote of the k nearest training items (by D, index order on
/// equal distances); a tied vote takes the label of the single nearest
/// training item. Throws InputError for k < 1, folds < 2, folds > n, or a
/// size mismatch.
KnnResult knn_classify(const Eigen::MatrixXd& d, std::span<const std::size_t> labels, std::size_t k,
                       std::size_t folds = 10, std::uint64_t seed = 0);

}  // namespace momentdist
