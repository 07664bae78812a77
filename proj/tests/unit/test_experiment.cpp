#include <doctest.h>

#include <filesystem>
#include <fstream>

#include "momentdist/error.hpp"
#include "momentdist/experiment.hpp"
#include "momentdist/generators.hpp"
#include "momentdist/io.hpp"

using namespace momentdist;
namespace fs = std::filesystem;

TEST_CASE("method names") {
  for (Method m : {Method::moment, Method::cov, Method::nclm, Method::eigs, Method::gk3, Method::gk4}) {
    CHECK(parse_method(to_string(m)) == m);
  }
  CHECK_THROWS_AS(parse_method("wl"), ConfigError);
}

TEST_CASE("corpus manifest") {
  const fs::path dir = fs::temp_directory_path() / "momentdist_test_experiment";
  fs::create_directories(dir);
  {
    std::ofstream out(dir / "tri.txt");
    out << "0 1\n1 2\n2 0\n";
  }
  const auto corpus = parse_corpus_manifest(R"({
    "graphs": [{"path": "tri.txt", "label": "small"}, {"named": "C4uK1", "label": "small"}],
    "generate": [{"nv": 30, "ne": 60, "rho": 0.2, "count": 3, "label": "ring", "seed": 5}]
  })",
                                            dir);
  CHECK(corpus.graphs.size() == 5);
  CHECK(corpus.num_classes() == 2);
  CHECK(corpus.labels == std::vector<std::size_t>{0, 0, 1, 1, 1});
  CHECK(corpus.graphs[0].num_edges() == 3);
  CHECK(corpus.graphs[1] == graph_from_name("C4uK1"));
  CHECK(corpus.graphs[3] == generate_rewired(30, 60, 0.2, 6));
  CHECK(corpus.names[0].find("tri.txt") != std::string::npos);

  CHECK_THROWS_AS(parse_corpus_manifest("{", dir), InputError);
  CHECK_THROWS_AS(parse_corpus_manifest(R"({"graphs": [{"path": "missing.txt", "label": "a"}]})", dir), InputError);
  CHECK_THROWS_AS(parse_corpus_manifest(R"({"graphs": [{"named": "K4"}]})", dir), InputError);
  CHECK_THROWS_AS(parse_corpus_manifest(R"({"graphs": []})", dir), InputError);
  fs::remove_all(dir);
}

TEST_CASE("four-setting corpus") {
  const Corpus c = four_setting_corpus(60, 120, 240, 3, 9);
  CHECK(c.graphs.size() == 12);
  CHECK(c.num_classes() == 4);
  CHECK(c.graphs[0].num_edges() == 120);
  CHECK(c.graphs[11].num_edges() == 240);
}

TEST_CASE("every method yields a valid distance matrix") {
  const Corpus c = four_setting_corpus(60, 120, 240, 3, 1);
  MethodParams p;
  p.moment = {.degree = 2, .metric = Metric::affine_invariant};
  p.gk4_samples = 500;
  for (Method m : {Method::moment, Method::cov, Method::nclm, Method::eigs, Method::gk3, Method::gk4}) {
    CAPTURE(to_string(m));
    const auto d = method_distance_matrix(c.graphs, m, p, c.names);
    REQUIRE(d.size() == 12);
    for (std::size_t i = 0; i < 12; ++i) {
      CHECK(d(i, i) == 0);
      for (std::size_t j = 0; j < 12; ++j) {
        CHECK(d(i, j) >= 0);
        CHECK(d(i, j) == d(j, i));
        CHECK(std::isfinite(d(i, j)));
      }
    }
    MethodParams threaded = p;
    threaded.threads = 3;
    CHECK(method_distance_matrix(c.graphs, m, threaded, c.names).entries == d.entries);
  }
}

TEST_CASE("clustering and classification pipelines") {
  const Corpus c = four_setting_corpus(100, 200, 400, 10, 3);
  MethodParams p;
  p.moment = {.degree = 2, .metric = Metric::affine_invariant};
  const auto d = method_distance_matrix(c.graphs, Method::moment, p);
  const std::vector<std::uint64_t> seeds = {1, 2};
  const auto outcome = run_clustering(c, d, seeds, 5);
  CHECK(outcome.accuracies.size() == 2);
  CHECK(outcome.accuracy_mean >= 0.25);
  CHECK(outcome.accuracy_mean <= 1.0);
  CHECK(run_clustering(c, d, seeds, 5).accuracies == outcome.accuracies);

  ClassifySweep sweep{.sizes = {2, 3}, .ks = {1, 3}, .folds = 5, .seed = 0};
  const auto cls = run_classification(c, Method::moment, p, sweep);
  CHECK(cls.sweep.size() == 4);
  for (const auto& pt : cls.sweep) CHECK(pt.result.accuracy_mean <= cls.sweep[cls.best].result.accuracy_mean);
  const auto gk = run_classification(c, Method::gk3, p, {.ks = {1}, .folds = 5});
  CHECK(gk.sweep.size() == 1);
  CHECK(gk.sweep[0].size == 0);
}

TEST_CASE("timing helpers") {
  CHECK(median({3.0, 1.0, 2.0}) == 2.0);
  CHECK(median({4.0, 1.0, 2.0, 3.0}) == 2.5);
  const std::vector<Graph> graphs = {generate_gnm(100, 300, 1), generate_gnm(100, 300, 2)};
  const auto t = time_moment_phases(graphs, {.degree = 2, .metric = Metric::frobenius});
  CHECK(t.extract_seconds >= 0);
  CHECK(t.pairwise_seconds >= 0);
}
