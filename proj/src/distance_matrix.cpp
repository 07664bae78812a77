#include "momentdist/distance_matrix.hpp"

#include <atomic>
#include <cmath>
#include <istream>
#include <ostream>

#include <json.hpp>

#include "momentdist/error.hpp"
#include "momentdist/parallel.hpp"

namespace momentdist {
namespace {

std::vector<std::string> default_labels(std::size_t count, std::vector<std::string> labels) {
  if (labels.empty()) {
    for (std::size_t i = 0; i < count; ++i) labels.push_back("g" + std::to_string(i));
  }
  if (labels.size() != count) throw InputError("label list does not match the number of items");
  return labels;
}

// Row-major enumeration of the strict upper triangle.
std::vector<std::pair<std::size_t, std::size_t>> upper_pairs(std::size_t n) {
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  pairs.reserve(n * (n - 1) / 2);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) pairs.emplace_back(i, j);
  }
  return pairs;
}

}  // namespace

void write_csv(std::ostream& out, const DistanceMatrix& d) {
  const auto old_precision = out.precision(12);
  out << "label";
  for (const auto& l : d.labels) out << ',' << l;
  out << '\n';
  for (std::size_t i = 0; i < d.size(); ++i) {
    out << d.labels[i];
    for (std::size_t j = 0; j < d.size(); ++j) out << ',' << d(i, j);
    out << '\n';
  }
  out.precision(old_precision);
}

void write_json(std::ostream& out, const DistanceMatrix& d) {
  nlohmann::json doc;
  doc["labels"] = d.labels;
  auto& rows = doc["entries"] = nlohmann::json::array();
  for (std::size_t i = 0; i < d.size(); ++i) {
    auto row = nlohmann::json::array();
    for (std::size_t j = 0; j < d.size(); ++j) row.push_back(d(i, j));
    rows.push_back(std::move(row));
  }
  out << doc.dump(1) << '\n';
}

DistanceMatrix read_json(std::istream& in) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    throw InputError(std::string("distance matrix JSON: ") + e.what());
  }
  DistanceMatrix d;
  try {
    d.labels = doc.at("labels").get<std::vector<std::string>>();
    const auto rows = doc.at("entries").get<std::vector<std::vector<double>>>();
    const auto n = static_cast<Eigen::Index>(d.labels.size());
    if (static_cast<Eigen::Index>(rows.size()) != n) throw InputError("distance matrix JSON: row count != label count");
    d.entries.resize(n, n);
    for (Eigen::Index i = 0; i < n; ++i) {
      const auto& row = rows[static_cast<std::size_t>(i)];
      if (static_cast<Eigen::Index>(row.size()) != n) throw InputError("distance matrix JSON: matrix is not square");
      for (Eigen::Index j = 0; j < n; ++j) d.entries(i, j) = row[static_cast<std::size_t>(j)];
    }
  } catch (const nlohmann::json::exception& e) {
    throw InputError(std::string("distance matrix JSON: ") + e.what());
  }
  for (Eigen::Index i = 0; i < d.entries.rows(); ++i) {
    if (d.entries(i, i) != 0.0) throw InputError("distance matrix JSON: nonzero diagonal");
    for (Eigen::Index j = 0; j < i; ++j) {
      if (d.entries(i, j) != d.entries(j, i)) throw InputError("distance matrix JSON: matrix is not symmetric");
      if (d.entries(i, j) < 0.0) throw InputError("distance matrix JSON: negative entry");
    }
  }
  return d;
}

DistanceMatrix pairwise_distance_matrix(std::span<const Graph> graphs, const DistanceConfig& cfg,
                                        std::vector<std::string> labels) {
  cfg.validate();
  const std::size_t n = graphs.size();
  if (n < 2) throw InputError("a distance matrix needs at least two graphs");
  labels = default_labels(n, std::move(labels));
  const unsigned threads = resolve_threads(cfg.threads);

  // Each graph's moments use one thread; parallelism is across graphs.
  DistanceConfig per_graph = cfg;
  per_graph.threads = 1;
  std::vector<MomentMatrix> matrices(n);
  parallel_for(n, threads, [&](std::size_t i) { matrices[i] = graph_moment_matrix(graphs[i], per_graph); });

  const auto pairs = upper_pairs(n);
  std::vector<GraphDistance> results(pairs.size());
  parallel_for(pairs.size(), threads, [&](std::size_t p) {
    results[p] = compare_moment_matrices(matrices[pairs[p].first], matrices[pairs[p].second], cfg);
  });

  DistanceMatrix d{std::move(labels), Eigen::MatrixXd::Zero(Eigen::Index(n), Eigen::Index(n)), 0};
  for (std::size_t p = 0; p < pairs.size(); ++p) {
    const auto [i, j] = pairs[p];
    d.entries(Eigen::Index(i), Eigen::Index(j)) = d.entries(Eigen::Index(j), Eigen::Index(i)) = results[p].value;
    if (results[p].fell_back) ++d.fallbacks;
  }
  return d;
}

DistanceMatrix pairwise_from_function(std::size_t count, const std::function<double(std::size_t, std::size_t)>& dist,
                                      unsigned threads, std::vector<std::string> labels) {
  if (count < 2) throw InputError("a distance matrix needs at least two items");
  labels = default_labels(count, std::move(labels));
  const auto pairs = upper_pairs(count);
  std::vector<double> values(pairs.size());
  parallel_for(pairs.size(), resolve_threads(threads),
               [&](std::size_t p) { values[p] = dist(pairs[p].first, pairs[p].second); });
  DistanceMatrix d{std::move(labels), Eigen::MatrixXd::Zero(Eigen::Index(count), Eigen::Index(count)), 0};
  for (std::size_t p = 0; p < pairs.size(); ++p) {
    const auto [i, j] = pairs[p];
    d.entries(Eigen::Index(i), Eigen::Index(j)) = d.entries(Eigen::Index(j), Eigen::Index(i)) = values[p];
  }
  return d;
}

DistanceMatrix euclidean_distance_matrix(const std::vector<std::vector<double>>& features, unsigned threads,
                                         std::vector<std::string> labels) {
  for (const auto& f : features) {
    if (f.size() != features.front().size()) throw InputError("feature vectors have different lengths");
  }
  return pairwise_from_function(
      features.size(),
      [&](std::size_t i, std::size_t j) {
        double total = 0.0;
        for (std::size_t c = 0; c < features[i].size(); ++c) {
          const double diff = features[i][c] - features[j][c];
          total += diff * diff;
        }
        return std::sqrt(total);
      },
      threads, std::move(labels));
}

DistanceMatrix log1p_scaled(DistanceMatrix d) {
  d.entries = d.entries.array().log1p().matrix();
  return d;
}

}  // namespace momentdist
