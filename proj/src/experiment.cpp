#include "momentdist/experiment.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "momentdist/baselines.hpp"
#include "momentdist/error.hpp"
#include "momentdist/generators.hpp"
#include "momentdist/io.hpp"
#include "momentdist/parallel.hpp"

namespace momentdist {

std::string_view to_string(Method method) {
  switch (method) {
    case Method::moment: return "moment";
    case Method::cov: return "cov";
    case Method::nclm: return "nclm";
    case Method::eigs: return "eigs";
    case Method::gk3: return "gk3";
    case Method::gk4: return "gk4";
  }
  return "unknown";
}

Method parse_method(std::string_view name) {
  for (Method m : {Method::moment, Method::cov, Method::nclm, Method::eigs, Method::gk3, Method::gk4}) {
    if (name == to_string(m)) return m;
  }
  throw ConfigError("unknown method '" + std::string(name) + "'");
}

DistanceMatrix method_distance_matrix(std::span<const Graph> graphs, Method method, const MethodParams& params,
                                      std::vector<std::string> labels) {
  const unsigned threads = resolve_threads(params.threads);
  const std::size_t n = graphs.size();
  if (method == Method::moment) {
    DistanceConfig cfg = params.moment;
    cfg.threads = threads;
    return pairwise_distance_matrix(graphs, cfg, std::move(labels));
  }
  if (method == Method::cov) {
    std::vector<Eigen::MatrixXd> descriptors(n);
    parallel_for(n, threads, [&](std::size_t i) {
      descriptors[i] = cov_descriptor(graphs[i], params.cov_k, params.cov_center);
    });
    return pairwise_from_function(
        n, [&](std::size_t i, std::size_t j) { return bhattacharyya_dist(descriptors[i], descriptors[j]); },
        threads, std::move(labels));
  }

  std::vector<std::vector<double>> features(n);
  parallel_for(n, threads, [&](std::size_t i) {
    switch (method) {
      case Method::nclm: features[i] = nclm_vector(graphs[i]).values; break;
      case Method::eigs: features[i] = top_k_eigenvalues(graphs[i], params.eigs_k).values; break;
      case Method::gk3: features[i] = graphlet3_distribution(graphs[i]).values; break;
      default: features[i] = graphlet4_distribution(graphs[i], params.gk4_samples, params.seed + i).values; break;
    }
  });
  return euclidean_distance_matrix(features, threads, std::move(labels));
}

void Corpus::add(Graph g, std::string name, const std::string& label) {
  auto it = std::find(class_names.begin(), class_names.end(), label);
  if (it == class_names.end()) {
    class_names.push_back(label);
    it = class_names.end() - 1;
  }
  labels.push_back(static_cast<std::size_t>(it - class_names.begin()));
  graphs.push_back(std::move(g));
  names.push_back(std::move(name));
}

void append_generated(Corpus& corpus, const GenerateSpec& spec) {
  for (std::size_t i = 0; i < spec.count; ++i) {
    std::ostringstream name;
    name << spec.label << '#' << i;
    corpus.add(generate_rewired(spec.nv, spec.ne, spec.rho, spec.seed + i), name.str(), spec.label);
  }
}

Corpus four_setting_corpus(std::size_t nv, std::size_t ne_low, std::size_t ne_high, std::size_t per_setting,
                           std::uint64_t seed) {
  Corpus corpus;
  std::uint64_t next_seed = seed;
  for (std::size_t ne : {ne_low, ne_high}) {
    for (double rho : {0.1, 0.9}) {
      std::ostringstream label;
      label << "E" << ne << "-rho" << rho;
      append_generated(corpus, {nv, ne, rho, per_setting, label.str(), next_seed});
      next_seed += per_setting;
    }
  }
  return corpus;
}

Corpus parse_corpus_manifest(std::string_view json_text, const std::filesystem::path& base_dir) {
  Corpus corpus;
  try {
    const auto doc = nlohmann::json::parse(json_text);
    if (!doc.is_object()) throw InputError("corpus manifest must be a JSON object");
    for (const auto& entry : doc.value("graphs", nlohmann::json::array())) {
      const std::string label = entry.at("label").get<std::string>();
      if (entry.contains("path")) {
        std::filesystem::path p = entry.at("path").get<std::string>();
        if (p.is_relative()) p = base_dir / p;
        corpus.add(read_edge_list(p), p.string(), label);
      } else if (entry.contains("named")) {
        const std::string name = entry.at("named").get<std::string>();
        corpus.add(graph_from_name(name), name, label);
      } else {
        throw InputError("corpus manifest entry needs \"path\" or \"named\"");
      }
    }
    for (const auto& entry : doc.value("generate", nlohmann::json::array())) {
      GenerateSpec spec;
      spec.nv = entry.at("nv").get<std::size_t>();
      spec.ne = entry.at("ne").get<std::size_t>();
      spec.rho = entry.at("rho").get<double>();
      spec.count = entry.at("count").get<std::size_t>();
      spec.label = entry.at("label").get<std::string>();
      spec.seed = entry.value("seed", std::uint64_t{0});
      append_generated(corpus, spec);
    }
  } catch (const nlohmann::json::exception& e) {
    throw InputError(std::string("corpus manifest: ") + e.what());
  }
  if (corpus.graphs.empty()) throw InputError("corpus manifest lists no graphs");
  return corpus;
}

Corpus load_corpus_manifest(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open corpus manifest " + path.string());
  std::stringstream text;
  text << in.rdbuf();
  return parse_corpus_manifest(text.str(), path.parent_path());
}

namespace {

void mean_std(const std::vector<double>& xs, double& mean, double& sd) {
  mean = 0.0;
  for (double x : xs) mean += x;
  mean /= static_cast<double>(xs.size());
  double var = 0.0;
  for (double x : xs) var += (x - mean) * (x - mean);
  sd = std::sqrt(var / static_cast<double>(xs.size()));
}

}  // namespace

ClusterOutcome run_clustering(const Corpus& corpus, const DistanceMatrix& d, std::span<const std::uint64_t> seeds,
                              std::size_t restarts, unsigned threads) {
  if (seeds.empty()) throw InputError("clustering needs at least one seed");
  if (corpus.num_classes() < 2) throw InputError("clustering needs at least two classes");
  ClusterOutcome out;
  out.fallbacks = d.fallbacks;
  const Eigen::MatrixXd kernel = kernel_from_distances(d);
  for (std::uint64_t seed : seeds) {
    KMeansOptions opts;
    opts.restarts = restarts;
    opts.seed = seed;
    opts.threads = threads;
    const KMeansResult r = kernel_kmeans(kernel, corpus.num_classes(), opts);
    out.seeds.push_back(seed);
    out.accuracies.push_back(clustering_accuracy(r.assignment, corpus.labels));
  }
  mean_std(out.accuracies, out.accuracy_mean, out.accuracy_std);
  return out;
}

ClassifyOutcome run_classification(const Corpus& corpus, Method method, const MethodParams& params,
                                   const ClassifySweep& sweep) {
  if (corpus.num_classes() < 2) throw InputError("classification needs at least two classes");
  std::vector<std::size_t> sizes = sweep.sizes;
  if (sizes.empty()) {
    if (method == Method::moment) sizes = {2, 3, 4, 5, 6, 7};
    else if (method == Method::cov) sizes = {4, 5, 6};
    else sizes = {0};
  }
  ClassifyOutcome out;
  for (std::size_t size : sizes) {
    MethodParams p = params;
    if (method == Method::moment) p.moment.degree = size;
    if (method == Method::cov) p.cov_k = size;
    const DistanceMatrix d = method_distance_matrix(corpus.graphs, method, p, corpus.names);
    for (std::size_t k : sweep.ks) {
      out.sweep.push_back({size, k, knn_classify(d.entries, corpus.labels, k, sweep.folds, sweep.seed)});
    }
  }
  for (std::size_t i = 1; i < out.sweep.size(); ++i) {
    if (out.sweep[i].result.accuracy_mean > out.sweep[out.best].result.accuracy_mean) out.best = i;
  }
  return out;
}

namespace {

double seconds_since(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

}  // namespace

MomentPhaseTimes time_moment_phases(std::span<const Graph> graphs, const DistanceConfig& cfg) {
  cfg.validate();
  const unsigned threads = resolve_threads(cfg.threads);
  MomentPhaseTimes t;
  std::vector<MomentMatrix> matrices(graphs.size());
  auto start = std::chrono::steady_clock::now();
  DistanceConfig per_graph = cfg;
  per_graph.threads = 1;
  parallel_for(graphs.size(), threads, [&](std::size_t i) { matrices[i] = graph_moment_matrix(graphs[i], per_graph); });
  t.extract_seconds = seconds_since(start);

  start = std::chrono::steady_clock::now();
  const std::size_t n = matrices.size();
  std::vector<double> sink(n, 0.0);
  parallel_for(n, threads, [&](std::size_t i) {
    for (std::size_t j = i + 1; j < n; ++j) sink[i] += compare_moment_matrices(matrices[i], matrices[j], cfg).value;
  });
  t.pairwise_seconds = seconds_since(start);
  return t;
}

double time_method(std::span<const Graph> graphs, Method method, const MethodParams& params) {
  const auto start = std::chrono::steady_clock::now();
  if (graphs.size() >= 2) {
    method_distance_matrix(graphs, method, params);
  }
  return seconds_since(start);
}

double median(std::vector<double> values) {
  if (values.empty()) throw InputError("median of an empty list");
  std::sort(values.begin(), values.end());
  const std::size_t mid = values.size() / 2;
  return values.size() % 2 == 1 ? values[mid] : 0.5 * (values[mid - 1] + values[mid]);
}

}  // namespace momentdist
