#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "momentdist/distance_matrix.hpp"
#include "momentdist/graph.hpp"
#include "momentdist/learn.hpp"
#include "momentdist/psd_metrics.hpp"

namespace momentdist {

enum class Method { moment, cov, nclm, eigs, gk3, gk4 };

std::string_view to_string(Method method);
/// Throws ConfigError on unknown names.
Method parse_method(std::string_view name);

struct MethodParams {
  DistanceConfig moment{};
  /// Cov: number of columns A^i e / |A^i e|.
  std::size_t cov_k = 4;
  bool cov_center = true;
  std::size_t eigs_k = 10;
  std::size_t gk4_samples = 10000;
  /// Seed for GK4 sampling; graph i uses seed + i.
  std::uint64_t seed = 0;
  unsigned threads = 1;
};

/// Distance matrix of a corpus under one method. moment: graph_distance;
/// cov: Bhattacharyya between descriptors; nclm, eigs, gk3, gk4: Euclidean
/// between feature vectors. Per-graph features are computed in parallel.
DistanceMatrix method_distance_matrix(std::span<const Graph> graphs, Method method, const MethodParams& params,
                                      std::vector<std::string> labels = {});

struct GenerateSpec {
  std::size_t nv = 0;
  std::size_t ne = 0;
  double rho = 0.0;
  std::size_t count = 0;
  std::string label;
  /// Graph i of the batch uses seed + i.
  std::uint64_t seed = 0;
};

struct Corpus {
  std::vector<Graph> graphs;
  /// Per-graph identifier (file path, graph name or generated tag).
  std::vector<std::string> names;
  /// Class index per graph, into class_names.
  std::vector<std::size_t> labels;
  std::vector<std::string> class_names;

  void add(Graph g, std::string name, const std::string& label);
  std::size_t num_classes() const noexcept { return class_names.size(); }
};

void append_generated(Corpus& corpus, const GenerateSpec& spec);

/// The four ring-rewiring settings (ne, rho) in {lo, hi} x {0.1, 0.9}.
Corpus four_setting_corpus(std::size_t nv, std::size_t ne_low, std::size_t ne_high, std::size_t per_setting,
                           std::uint64_t seed);

/// JSON manifest:
///   {"graphs": [{"path": "g.txt", "label": "a"}, {"named": "C4uK1", "label": "b"}],
///    "generate": [{"nv": 200, "ne": 2000, "rho": 0.1, "count": 15, "label": "c", "seed": 1}]}
/// Relative paths resolve against base_dir. Throws InputError.
Corpus parse_corpus_manifest(std::string_view json_text, const std::filesystem::path& base_dir);
Corpus load_corpus_manifest(const std::filesystem::path& path);

struct ClusterOutcome {
  std::vector<std::uint64_t> seeds;
  std::vector<double> accuracies;
  double accuracy_mean = 0.0;
  double accuracy_std = 0.0;
  std::size_t fallbacks = 0;
};

/// Kernel k-means on exp(-D) with one cluster per class, once per seed.
ClusterOutcome run_clustering(const Corpus& corpus, const DistanceMatrix& d, std::span<const std::uint64_t> seeds,
                              std::size_t restarts = 20, unsigned threads = 1);

struct SweepPoint {
  /// Moment-matrix degree for moment, column count for cov, 0 otherwise.
  std::size_t size = 0;
  std::size_t k = 0;
  KnnResult result;
};

struct ClassifyOutcome {
  std::vector<SweepPoint> sweep;
  /// Index into sweep of the highest mean accuracy (first on ties).
  std::size_t best = 0;
};

struct ClassifySweep {
  /// Values swept for the method's size parameter; empty means the
  /// defaults 2..7 (moment) or 4..6 (cov).
  std::vector<std::size_t> sizes;
  std::vector<std::size_t> ks = {1, 2, 3, 4, 5, 6, 7, 8, 9, 10};
  std::size_t folds = 10;
  std::uint64_t seed = 0;
};

ClassifyOutcome run_classification(const Corpus& corpus, Method method, const MethodParams& params,
                                   const ClassifySweep& sweep = {});

struct MomentPhaseTimes {
  double extract_seconds = 0.0;
  double pairwise_seconds = 0.0;
};

/// Wall time of the two phases of a moment-method distance matrix:
/// moment matrices for every graph, then all pairwise comparisons.
MomentPhaseTimes time_moment_phases(std::span<const Graph> graphs, const DistanceConfig& cfg);

/// Wall time of method_distance_matrix.
double time_method(std::span<const Graph> graphs, Method method, const MethodParams& params);

double median(std::vector<double> values);

}  // namespace momentdist
