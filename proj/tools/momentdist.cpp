#include <algorithm>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "cli_support.hpp"
#include "momentdist/distance_matrix.hpp"
#include "momentdist/error.hpp"
#include "momentdist/experiment.hpp"
#include "momentdist/generators.hpp"
#include "momentdist/io.hpp"
#include "momentdist/moments.hpp"
#include "momentdist/parallel.hpp"
#include "momentdist/spectral_measure.hpp"

namespace fs = std::filesystem;
using namespace momentdist;
using momentdist::cli::RunManifest;
using nlohmann::json;

namespace {

struct InputOptions {
  std::string indexing = "auto";
  std::string header = "auto";

  EdgeListOptions edge_list() const {
    EdgeListOptions o;
    o.indexing = indexing == "0" ? Indexing::zero : indexing == "1" ? Indexing::one : Indexing::automatic;
    o.header = header == "yes" ? HeaderMode::present : header == "no" ? HeaderMode::absent : HeaderMode::automatic;
    return o;
  }

  void add_to(CLI::App* app) {
    app->add_option("--indexing", indexing, "Vertex id base of edge-list files")
        ->check(CLI::IsMember({"auto", "0", "1"}))
        ->capture_default_str();
    app->add_option("--header", header, "Whether edge-list files start with an 'n m' line")
        ->check(CLI::IsMember({"auto", "yes", "no"}))
        ->capture_default_str();
  }
};

struct GraphSource {
  std::string input;
  std::string named;

  void add_to(CLI::App* app) {
    auto* in = app->add_option("--input,-i", input, "Edge-list file");
    auto* nm = app->add_option("--named,-n", named, "Named graph such as K4, S5, C4uK1, K2,3");
    in->excludes(nm);
  }

  Graph load(const InputOptions& io, RunManifest& manifest) const {
    if (!input.empty()) {
      manifest.add_input(input);
      return read_edge_list(input, io.edge_list());
    }
    if (!named.empty()) return graph_from_name(named);
    throw ConfigError("give --input or --named");
  }
};

// Options shared by pairwise, cluster, classify and bench.
struct MethodOptions {
  std::string method = "moment";
  std::size_t degree = 4;
  std::string metric = "affine-invariant";
  std::string scale = "none";
  double reg = 0.0;
  std::string state = "vector";
  std::size_t cov_k = 4;
  bool no_center = false;
  std::size_t eigs_k = 10;
  std::size_t gk4_samples = 10000;

  void add_moment_to(CLI::App* app) {
    app->add_option("--degree,-d", degree, "Moment-matrix degree")->check(CLI::PositiveNumber)->capture_default_str();
    app->add_option("--metric", metric, "frobenius, affine-invariant, log-frobenius, cholesky-frobenius, j-divergence")
        ->capture_default_str();
    app->add_option("--scale", scale, "none or log1p")->capture_default_str();
    app->add_option("--reg", reg, "Add reg * I to every moment matrix")->check(CLI::NonNegativeNumber);
    app->add_option("--state", state, "vector or trace")
        ->check(CLI::IsMember({"vector", "trace"}))
        ->capture_default_str();
  }

  void add_to(CLI::App* app) {
    app->add_option("--method,-m", method, "moment, cov, nclm, eigs, gk3, gk4")->capture_default_str();
    add_moment_to(app);
    app->add_option("--cov-k", cov_k, "Columns of the Cov descriptor")->capture_default_str();
    app->add_flag("--no-center", no_center, "Do not centre Cov descriptor rows");
    app->add_option("--eigs-k", eigs_k, "Number of eigenvalues for EIGS")->capture_default_str();
    app->add_option("--gk4-samples", gk4_samples, "Sampled 4-subsets per graph for GK4")->capture_default_str();
  }

  DistanceConfig distance_config(unsigned threads) const {
    DistanceConfig cfg;
    cfg.degree = degree;
    cfg.metric = parse_metric(metric);
    cfg.scaling = parse_scaling(scale);
    cfg.eps = reg;
    cfg.state = state == "trace" ? StateKind::trace : StateKind::uniform_vector;
    cfg.threads = threads;
    cfg.validate();
    return cfg;
  }

  MethodParams params(unsigned threads, std::uint64_t seed) const {
    MethodParams p;
    p.moment = distance_config(threads);
    p.cov_k = cov_k;
    p.cov_center = !no_center;
    p.eigs_k = eigs_k;
    p.gk4_samples = gk4_samples;
    p.seed = seed;
    p.threads = threads;
    return p;
  }

  json to_json(Method m) const {
    json j{{"method", std::string(to_string(m))}};
    if (m == Method::moment) {
      j["degree"] = degree;
      j["metric"] = metric;
      j["scale"] = scale;
      j["reg"] = reg;
      j["state"] = state;
    } else if (m == Method::cov) {
      j["cov_k"] = cov_k;
      j["center"] = !no_center;
    } else if (m == Method::eigs) {
      j["eigs_k"] = eigs_k;
    } else if (m == Method::gk4) {
      j["gk4_samples"] = gk4_samples;
    }
    return j;
  }
};

std::vector<fs::path> expand_inputs(const std::vector<std::string>& inputs) {
  std::vector<fs::path> files;
  for (const auto& in : inputs) {
    if (fs::is_directory(in)) {
      std::vector<fs::path> dir;
      for (const auto& entry : fs::directory_iterator(in)) {
        if (entry.is_regular_file() && entry.path().extension() != ".json") dir.push_back(entry.path());
      }
      std::sort(dir.begin(), dir.end());
      files.insert(files.end(), dir.begin(), dir.end());
    } else if (fs::is_regular_file(in)) {
      files.emplace_back(in);
    } else {
      throw InputError("no such file or directory: " + in);
    }
  }
  return files;
}

std::string dump(const json& j, int indent) { return j.dump(indent) + "\n"; }

void finish(const RunManifest& manifest, const std::string& out) {
  if (!out.empty() && out != "-") manifest.write_beside(out);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Graph distances from moment matrices of adjacency spectra"};
  app.set_version_flag("--version", MOMENTDIST_VERSION);
  app.require_subcommand(1);
  unsigned threads_flag = 0;
  app.add_option("--threads,-t", threads_flag, "Worker threads (default: MOMENTDIST_THREADS or all cores)");
  app.fallthrough();
  std::vector<std::string> args(argv, argv + argc);

  InputOptions io;

  // moments
  auto* moments_cmd = app.add_subcommand("moments", "Moment sequence of one graph as JSON");
  GraphSource moments_src;
  std::size_t order = 8;
  std::string moments_state = "vector";
  std::string moments_out;
  moments_src.add_to(moments_cmd);
  io.add_to(moments_cmd);
  moments_cmd->add_option("--order,-k", order, "Highest moment order K")->capture_default_str();
  moments_cmd->add_option("--state", moments_state, "vector or trace")
      ->check(CLI::IsMember({"vector", "trace"}))
      ->capture_default_str();
  moments_cmd->add_option("--out,-o", moments_out, "Output file (default stdout)");

  // pairwise
  auto* pairwise_cmd = app.add_subcommand("pairwise", "Distance matrix over edge-list files and named graphs");
  std::vector<std::string> pairwise_inputs;
  std::vector<std::string> pairwise_named;
  std::string pairwise_format;
  std::string pairwise_out;
  MethodOptions pairwise_opts;
  pairwise_cmd->add_option("inputs", pairwise_inputs, "Edge-list files or directories");
  pairwise_cmd->add_option("--named,-n", pairwise_named, "Named graphs (repeatable)");
  io.add_to(pairwise_cmd);
  pairwise_opts.add_moment_to(pairwise_cmd);
  pairwise_cmd->add_option("--format", pairwise_format, "csv or json (default from --out extension)")
      ->check(CLI::IsMember({"csv", "json"}));
  pairwise_cmd->add_option("--out,-o", pairwise_out, "Output file (default stdout)");

  // cluster / classify
  auto* cluster_cmd = app.add_subcommand("cluster", "Kernel k-means on a labelled corpus");
  auto* classify_cmd = app.add_subcommand("classify", "Cross-validated KNN on a labelled corpus");
  std::string corpus_path;
  MethodOptions exp_opts;
  std::vector<std::uint64_t> cluster_seeds{0};
  std::size_t restarts = 20;
  std::uint64_t classify_seed = 0;
  std::size_t folds = 10;
  std::vector<std::size_t> sweep_sizes;
  std::vector<std::size_t> sweep_ks{1, 2, 3, 4, 5, 6, 7, 8, 9, 10};
  std::string exp_out;
  for (auto* cmd : {cluster_cmd, classify_cmd}) {
    cmd->add_option("--corpus,-c", corpus_path, "Corpus manifest JSON")->required();
    exp_opts.add_to(cmd);
    cmd->add_option("--out,-o", exp_out, "Report file (default stdout)");
  }
  cluster_cmd->add_option("--seed,-s", cluster_seeds, "k-means seeds; one run per seed")->capture_default_str();
  cluster_cmd->add_option("--restarts", restarts, "k-means++ restarts per run")->capture_default_str();
  classify_cmd->add_option("--seed,-s", classify_seed, "Fold assignment and GK4 sampling seed");
  classify_cmd->add_option("--folds", folds, "Cross-validation folds")->capture_default_str();
  classify_cmd->add_option("--sizes", sweep_sizes, "Degrees (moment) or column counts (cov) to sweep");
  classify_cmd->add_option("--ks", sweep_ks, "Neighbour counts to sweep")->capture_default_str();

  // spectrum
  auto* spectrum_cmd = app.add_subcommand("spectrum", "Spectral measure in the all-ones state as CSV stem data");
  GraphSource spectrum_src;
  MeasureOptions measure;
  std::string spectrum_out;
  spectrum_src.add_to(spectrum_cmd);
  io.add_to(spectrum_cmd);
  spectrum_cmd->add_option("--merge-tol", measure.relative_merge_tol, "Relative eigenvalue merge tolerance")
      ->capture_default_str();
  spectrum_cmd->add_option("--weight-floor", measure.weight_floor, "Drop atoms at or below this weight")
      ->capture_default_str();
  spectrum_cmd->add_option("--out,-o", spectrum_out, "Output CSV (default stdout)");

  // bench
  auto* bench_cmd = app.add_subcommand("bench", "Time distance-matrix computation on random graphs");
  std::vector<std::string> bench_sizes{"1000:10000", "1000:20000"};
  std::size_t bench_count = 100;
  std::uint64_t bench_seed = 0;
  std::size_t repeats = 3;
  std::vector<std::string> bench_methods{"moment"};
  std::string bench_model = "gnm";
  std::string bench_out;
  MethodOptions bench_opts;
  bench_opts.degree = 3;
  bench_cmd->add_option("--sizes", bench_sizes, "Graph sizes as V:E")->capture_default_str();
  bench_cmd->add_option("--count", bench_count, "Graphs per size")->check(CLI::PositiveNumber)->capture_default_str();
  bench_cmd->add_option("--seed,-s", bench_seed, "Generator seed")->capture_default_str();
  bench_cmd->add_option("--repeats,-r", repeats, "Timed repetitions; medians are reported")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  bench_cmd->add_option("--methods", bench_methods, "Methods to time")->delimiter(',')->capture_default_str();
  bench_cmd->add_option("--model", bench_model, "gnm (uniform random) or rewired (ring lattice, rho 0.5)")
      ->check(CLI::IsMember({"gnm", "rewired"}))
      ->capture_default_str();
  bench_opts.add_moment_to(bench_cmd);
  bench_cmd->add_option("--out,-o", bench_out, "Output CSV (default stdout)");

  // generate
  auto* generate_cmd = app.add_subcommand("generate", "Write a random graph as an edge list");
  std::size_t gen_nv = 0, gen_ne = 0;
  double gen_rho = 0.1;
  std::uint64_t gen_seed = 0;
  std::string gen_model = "rewired";
  std::string gen_out;
  generate_cmd->add_option("--nv", gen_nv, "Vertices")->required();
  generate_cmd->add_option("--ne", gen_ne, "Edges")->required();
  generate_cmd->add_option("--rho", gen_rho, "Rewiring probability")->capture_default_str();
  generate_cmd->add_option("--seed,-s", gen_seed, "Seed")->capture_default_str();
  generate_cmd->add_option("--model", gen_model, "rewired or gnm")
      ->check(CLI::IsMember({"rewired", "gnm"}))
      ->capture_default_str();
  generate_cmd->add_option("--out,-o", gen_out, "Output file (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? cli::exit_ok : cli::exit_config;
  }

  try {
    const unsigned threads = resolve_threads(threads_flag);

    if (*moments_cmd) {
      RunManifest manifest("moments", args);
      manifest.config() = {{"order", order}, {"state", moments_state}, {"input", moments_src.input},
                           {"named", moments_src.named}};
      cli::PhaseTimer timer;
      const Graph g = moments_src.load(io, manifest);
      const MomentSequence ms = moments_state == "trace"
                                    ? trace_moments(g, order, TraceOptions{.threads = threads})
                                    : vector_state_moments(g, order, threads);
      manifest.add_timing("moments", timer.seconds());
      cli::write_output(moments_out, json{{"values", cli::moments_json(ms)}}.dump() + "\n");
      finish(manifest, moments_out);
    } else if (*pairwise_cmd) {
      RunManifest manifest("pairwise", args);
      const DistanceConfig cfg = pairwise_opts.distance_config(threads);
      manifest.config() = pairwise_opts.to_json(Method::moment);
      cli::PhaseTimer load_timer;
      std::vector<Graph> graphs;
      std::vector<std::string> labels;
      for (const auto& path : expand_inputs(pairwise_inputs)) {
        manifest.add_input(path);
        graphs.push_back(read_edge_list(path, io.edge_list()));
        labels.push_back(path.stem().string());
      }
      for (const auto& name : pairwise_named) {
        graphs.push_back(graph_from_name(name));
        labels.push_back(name);
      }
      manifest.add_timing("load", load_timer.seconds());
      cli::PhaseTimer timer;
      const DistanceMatrix d = pairwise_distance_matrix(graphs, cfg, labels);
      manifest.add_timing("distances", timer.seconds());
      if (d.fallbacks > 0) {
        std::clog << "note: " << d.fallbacks << " pair(s) used the Frobenius fallback (singular moment matrix)\n";
      }
      std::string format = pairwise_format;
      if (format.empty()) format = fs::path(pairwise_out).extension() == ".json" ? "json" : "csv";
      std::ostringstream text;
      if (format == "json") {
        write_json(text, d);
      } else {
        write_csv(text, d);
      }
      manifest.config()["fallbacks"] = d.fallbacks;
      cli::write_output(pairwise_out, text.str());
      finish(manifest, pairwise_out);
    } else if (*cluster_cmd || *classify_cmd) {
      const bool clustering = static_cast<bool>(*cluster_cmd);
      RunManifest manifest(clustering ? "cluster" : "classify", args);
      const Method method = parse_method(exp_opts.method);
      manifest.add_input(corpus_path);
      cli::PhaseTimer load_timer;
      const Corpus corpus = load_corpus_manifest(corpus_path);
      manifest.add_timing("load", load_timer.seconds());

      json report;
      report["task"] = clustering ? "cluster" : "classify";
      report["method"] = std::string(to_string(method));
      json params = exp_opts.to_json(method);
      report["num_graphs"] = corpus.graphs.size();
      report["classes"] = corpus.class_names;

      if (clustering) {
        const MethodParams p = exp_opts.params(threads, cluster_seeds.front());
        cli::PhaseTimer timer;
        const DistanceMatrix d = method_distance_matrix(corpus.graphs, method, p, corpus.names);
        manifest.add_timing("distances", timer.seconds());
        cli::PhaseTimer cluster_timer;
        const ClusterOutcome outcome = run_clustering(corpus, d, cluster_seeds, restarts, threads);
        manifest.add_timing("cluster", cluster_timer.seconds());
        params["restarts"] = restarts;
        params["seeds"] = cluster_seeds;
        report["params"] = params;
        report["accuracy_mean"] = outcome.accuracy_mean;
        report["accuracy_std"] = outcome.accuracy_std;
        report["per_seed"] = outcome.accuracies;
        report["fallbacks"] = outcome.fallbacks;
        for (auto s : cluster_seeds) manifest.add_seed(s);
      } else {
        const MethodParams p = exp_opts.params(threads, classify_seed);
        ClassifySweep sweep;
        sweep.sizes = sweep_sizes;
        sweep.ks = sweep_ks;
        sweep.folds = folds;
        sweep.seed = classify_seed;
        cli::PhaseTimer timer;
        const ClassifyOutcome outcome = run_classification(corpus, method, p, sweep);
        manifest.add_timing("sweep", timer.seconds());
        const SweepPoint& best = outcome.sweep[outcome.best];
        params["folds"] = folds;
        params["seed"] = classify_seed;
        params["best_size"] = best.size;
        params["best_k"] = best.k;
        if (method == Method::moment) params["degree"] = best.size;
        if (method == Method::cov) params["cov_k"] = best.size;
        report["params"] = params;
        report["accuracy_mean"] = best.result.accuracy_mean;
        report["accuracy_std"] = best.result.accuracy_std;
        report["per_fold"] = best.result.per_fold;
        report["stratified"] = best.result.stratified;
        auto table = json::array();
        for (const auto& pt : outcome.sweep) {
          table.push_back({{"size", pt.size}, {"k", pt.k}, {"accuracy_mean", pt.result.accuracy_mean},
                           {"accuracy_std", pt.result.accuracy_std}});
        }
        report["sweep"] = table;
        manifest.add_seed(classify_seed);
      }
      manifest.config() = params;
      cli::write_output(exp_out, dump(report, 2));
      finish(manifest, exp_out);
    } else if (*spectrum_cmd) {
      RunManifest manifest("spectrum", args);
      manifest.config() = {{"merge_tol", measure.relative_merge_tol}, {"weight_floor", measure.weight_floor},
                           {"input", spectrum_src.input}, {"named", spectrum_src.named}};
      const Graph g = spectrum_src.load(io, manifest);
      cli::PhaseTimer timer;
      const DiscreteMeasure mu = graph_spectral_measure(g, measure);
      manifest.add_timing("measure", timer.seconds());
      std::ostringstream text;
      write_stem_csv(text, mu);
      cli::write_output(spectrum_out, text.str());
      finish(manifest, spectrum_out);
    } else if (*bench_cmd) {
      RunManifest manifest("bench", args);
      std::vector<Method> methods;
      for (const auto& m : bench_methods) methods.push_back(parse_method(m));
      const MethodParams p = bench_opts.params(threads, bench_seed);
      manifest.config() = {{"sizes", bench_sizes}, {"count", bench_count}, {"repeats", repeats},
                           {"methods", bench_methods}, {"model", bench_model}, {"degree", bench_opts.degree},
                           {"metric", bench_opts.metric}, {"threads", threads}};
      manifest.add_seed(bench_seed);

      std::ostringstream table;
      table << "V,E,count";
      for (Method m : methods) {
        if (m == Method::moment) {
          table << ",moment_extract_s,moment_pairwise_s,moment_s";
        } else {
          table << ',' << to_string(m) << "_s";
        }
      }
      table << '\n';
      for (const auto& size : bench_sizes) {
        std::size_t nv = 0, ne = 0;
        char colon = 0;
        std::istringstream parse(size);
        if (!(parse >> nv >> colon >> ne) || colon != ':') throw ConfigError("bad --sizes entry '" + size + "'");
        std::vector<Graph> graphs;
        for (std::size_t i = 0; i < bench_count; ++i) {
          graphs.push_back(bench_model == "gnm" ? generate_gnm(nv, ne, bench_seed + i)
                                                : generate_rewired(nv, ne, 0.5, bench_seed + i));
        }
        table << nv << ',' << ne << ',' << bench_count;
        for (Method m : methods) {
          if (m == Method::moment) {
            std::vector<double> extract, pairwise, total;
            for (std::size_t r = 0; r < repeats; ++r) {
              const MomentPhaseTimes t = time_moment_phases(graphs, p.moment);
              extract.push_back(t.extract_seconds);
              pairwise.push_back(t.pairwise_seconds);
              total.push_back(t.extract_seconds + t.pairwise_seconds);
            }
            table << ',' << median(extract) << ',' << median(pairwise) << ',' << median(total);
            manifest.add_timing(size + ":moment", median(total));
          } else {
            std::vector<double> times;
            for (std::size_t r = 0; r < repeats; ++r) times.push_back(time_method(graphs, m, p));
            table << ',' << median(times);
            manifest.add_timing(size + ":" + std::string(to_string(m)), median(times));
          }
        }
        table << '\n';
      }
      cli::write_output(bench_out, table.str());
      finish(manifest, bench_out);
    } else if (*generate_cmd) {
      RunManifest manifest("generate", args);
      manifest.config() = {{"nv", gen_nv}, {"ne", gen_ne}, {"rho", gen_rho}, {"model", gen_model}};
      manifest.add_seed(gen_seed);
      const Graph g = gen_model == "gnm" ? generate_gnm(gen_nv, gen_ne, gen_seed)
                                         : generate_rewired(gen_nv, gen_ne, gen_rho, gen_seed);
      std::ostringstream text;
      write_edge_list(text, g);
      cli::write_output(gen_out, text.str());
      finish(manifest, gen_out);
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return cli::exit_code_for(e);
  }
  return cli::exit_ok;
}
