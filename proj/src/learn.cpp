#include "momentdist/learn.hpp"

#include <algorithm>
#include <cmath>
#include <iostream>
#include <limits>
#include <map>
#include <numeric>
#include <random>

#include "momentdist/error.hpp"
#include "momentdist/parallel.hpp"

namespace momentdist {

Eigen::MatrixXd kernel_from_distances(const Eigen::MatrixXd& d) {
  return (-d.array()).exp().matrix();
}

namespace {

struct Run {
  std::vector<std::size_t> assignment;
  std::vector<double> trace;
};

// Squared feature-space distance of every point to every cluster centre.
Eigen::MatrixXd centre_distances(const Eigen::MatrixXd& kernel, const std::vector<std::size_t>& assignment,
                                 std::size_t k) {
  const auto n = kernel.rows();
  const auto kk = static_cast<Eigen::Index>(k);
  Eigen::MatrixXd member = Eigen::MatrixXd::Zero(n, kk);
  for (Eigen::Index i = 0; i < n; ++i) member(i, static_cast<Eigen::Index>(assignment[std::size_t(i)])) = 1.0;
  const Eigen::VectorXd sizes = member.colwise().sum().transpose();
  const Eigen::MatrixXd cross = kernel * member;  // sum_{a in c} K_xa
  Eigen::VectorXd within(kk);
  for (Eigen::Index c = 0; c < kk; ++c) within(c) = member.col(c).dot(cross.col(c));

  Eigen::MatrixXd dist(n, kk);
  for (Eigen::Index c = 0; c < kk; ++c) {
    if (sizes(c) == 0.0) {
      dist.col(c).setConstant(std::numeric_limits<double>::infinity());
      continue;
    }
    const double s = sizes(c);
    dist.col(c) = kernel.diagonal() - 2.0 * cross.col(c) / s + Eigen::VectorXd::Constant(n, within(c) / (s * s));
  }
  return dist;
}

double objective_of(const Eigen::MatrixXd& dist, const std::vector<std::size_t>& assignment) {
  double total = 0.0;
  for (Eigen::Index i = 0; i < dist.rows(); ++i) total += dist(i, Eigen::Index(assignment[std::size_t(i)]));
  return total;
}

// Moves the farthest point of a multi-member cluster into each empty cluster.
void fill_empty_clusters(const Eigen::MatrixXd& kernel, std::vector<std::size_t>& assignment, std::size_t k) {
  while (true) {
    std::vector<std::size_t> sizes(k, 0);
    for (std::size_t a : assignment) ++sizes[a];
    const auto empty = std::find(sizes.begin(), sizes.end(), 0u);
    if (empty == sizes.end()) return;
    const Eigen::MatrixXd dist = centre_distances(kernel, assignment, k);
    std::size_t far = assignment.size();
    double worst = -1.0;
    for (std::size_t i = 0; i < assignment.size(); ++i) {
      const double di = dist(Eigen::Index(i), Eigen::Index(assignment[i]));
      if (sizes[assignment[i]] > 1 && di > worst) {
        worst = di;
        far = i;
      }
    }
    assignment[far] = static_cast<std::size_t>(empty - sizes.begin());
  }
}

Run kmeans_run(const Eigen::MatrixXd& kernel, std::size_t k, std::size_t max_iterations, std::mt19937_64& rng) {
  const auto n = static_cast<std::size_t>(kernel.rows());
  auto sq = [&](std::size_t a, std::size_t b) {
    const auto ia = Eigen::Index(a), ib = Eigen::Index(b);
    return std::max(0.0, kernel(ia, ia) + kernel(ib, ib) - 2.0 * kernel(ia, ib));
  };

  // k-means++ seeding
  std::vector<std::size_t> seeds{std::uniform_int_distribution<std::size_t>(0, n - 1)(rng)};
  std::vector<double> nearest(n);
  for (std::size_t i = 0; i < n; ++i) nearest[i] = sq(i, seeds[0]);
  while (seeds.size() < k) {
    const double total = std::accumulate(nearest.begin(), nearest.end(), 0.0);
    std::size_t pick = 0;
    if (total > 0.0) {
      double r = std::uniform_real_distribution<double>(0.0, total)(rng);
      for (pick = 0; pick < n; ++pick) {
        if (r < nearest[pick]) break;
        r -= nearest[pick];
      }
      // Rounding can run past the end; fall back to the last candidate.
      if (pick == n) {
        pick = n - 1;
        while (nearest[pick] == 0.0) --pick;
      }
    } else {
      // All remaining points coincide with a seed; take any unused index.
      while (std::find(seeds.begin(), seeds.end(), pick) != seeds.end()) ++pick;
    }
    seeds.push_back(pick);
    for (std::size_t i = 0; i < n; ++i) nearest[i] = std::min(nearest[i], sq(i, pick));
  }

  Run run;
  run.assignment.assign(n, 0);
  for (std::size_t i = 0; i < n; ++i) {
    double best = std::numeric_limits<double>::infinity();
    for (std::size_t c = 0; c < k; ++c) {
      const double d = seeds[c] == i ? -1.0 : sq(i, seeds[c]);
      if (d < best) {
        best = d;
        run.assignment[i] = c;
      }
    }
  }
  fill_empty_clusters(kernel, run.assignment, k);
  Eigen::MatrixXd dist = centre_distances(kernel, run.assignment, k);
  run.trace.push_back(objective_of(dist, run.assignment));

  for (std::size_t iter = 0; iter < max_iterations; ++iter) {
    bool moved = false;
    for (std::size_t i = 0; i < n; ++i) {
      const auto row = Eigen::Index(i);
      std::size_t best = run.assignment[i];
      for (std::size_t c = 0; c < k; ++c) {
        if (dist(row, Eigen::Index(c)) < dist(row, Eigen::Index(best))) best = c;
      }
      if (best != run.assignment[i]) {
        run.assignment[i] = best;
        moved = true;
      }
    }
    if (!moved) break;
    fill_empty_clusters(kernel, run.assignment, k);
    dist = centre_distances(kernel, run.assignment, k);
    run.trace.push_back(objective_of(dist, run.assignment));
  }
  return run;
}

}  // namespace

KMeansResult kernel_kmeans(const Eigen::MatrixXd& kernel, std::size_t k, const KMeansOptions& options) {
  if (kernel.rows() != kernel.cols()) throw InputError("kernel matrix is not square");
  const auto n = static_cast<std::size_t>(kernel.rows());
  if (k < 1 || k > n) throw InputError("kernel k-means needs 1 <= k <= n");
  const std::size_t restarts = std::max<std::size_t>(1, options.restarts);

  std::vector<Run> runs(restarts);
  parallel_for(restarts, resolve_threads(options.threads), [&](std::size_t r) {
    std::seed_seq seq{options.seed, static_cast<std::uint64_t>(r)};
    std::mt19937_64 rng(seq);
    runs[r] = kmeans_run(kernel, k, options.max_iterations, rng);
  });

  std::size_t best = 0;
  for (std::size_t r = 1; r < restarts; ++r) {
    if (runs[r].trace.back() < runs[best].trace.back()) best = r;
  }
  KMeansResult out;
  out.assignment = std::move(runs[best].assignment);
  out.objective_trace = std::move(runs[best].trace);
  out.objective = out.objective_trace.back();
  out.best_restart = best;
  return out;
}

std::vector<std::size_t> hungarian_max(const Eigen::MatrixXd& weights) {
  // Potentials-based O(n^3) assignment on cost = -weights, 1-based internally.
  const auto n = static_cast<std::size_t>(weights.rows());
  if (weights.cols() != weights.rows()) throw InputError("hungarian_max needs a square matrix");
  const double inf = std::numeric_limits<double>::infinity();
  std::vector<double> u(n + 1, 0.0), v(n + 1, 0.0), way_min(n + 1);
  std::vector<std::size_t> match(n + 1, 0), way(n + 1, 0);
  auto cost = [&](std::size_t i, std::size_t j) { return -weights(Eigen::Index(i - 1), Eigen::Index(j - 1)); };
  for (std::size_t i = 1; i <= n; ++i) {
    match[0] = i;
    std::size_t j0 = 0;
    std::fill(way_min.begin(), way_min.end(), inf);
    std::vector<bool> used(n + 1, false);
    do {
      used[j0] = true;
      const std::size_t i0 = match[j0];
      double delta = inf;
      std::size_t j1 = 0;
      for (std::size_t j = 1; j <= n; ++j) {
        if (used[j]) continue;
        const double cur = cost(i0, j) - u[i0] - v[j];
        if (cur < way_min[j]) {
          way_min[j] = cur;
          way[j] = j0;
        }
        if (way_min[j] < delta) {
          delta = way_min[j];
          j1 = j;
        }
      }
      for (std::size_t j = 0; j <= n; ++j) {
        if (used[j]) {
          u[match[j]] += delta;
          v[j] -= delta;
        } else {
          way_min[j] -= delta;
        }
      }
      j0 = j1;
    } while (match[j0] != 0);
    do {
      const std::size_t j1 = way[j0];
      match[j0] = match[j1];
      j0 = j1;
    } while (j0 != 0);
  }
  std::vector<std::size_t> row_to_col(n);
  for (std::size_t j = 1; j <= n; ++j) row_to_col[match[j] - 1] = j - 1;
  return row_to_col;
}

double clustering_accuracy(std::span<const std::size_t> assignment, std::span<const std::size_t> labels) {
  if (assignment.size() != labels.size()) throw InputError("assignment and labels differ in length");
  if (assignment.empty()) return 0.0;
  std::map<std::size_t, std::size_t> cluster_id, label_id;
  for (std::size_t a : assignment) cluster_id.emplace(a, cluster_id.size());
  for (std::size_t l : labels) label_id.emplace(l, label_id.size());
  const std::size_t m = std::max(cluster_id.size(), label_id.size());
  Eigen::MatrixXd counts = Eigen::MatrixXd::Zero(Eigen::Index(m), Eigen::Index(m));
  for (std::size_t i = 0; i < assignment.size(); ++i) {
    counts(Eigen::Index(cluster_id[assignment[i]]), Eigen::Index(label_id[labels[i]])) += 1.0;
  }

  double best = 0.0;
  if (m <= 6) {
    std::vector<std::size_t> perm(m);
    std::iota(perm.begin(), perm.end(), 0);
    do {
      double hits = 0.0;
      for (std::size_t r = 0; r < m; ++r) hits += counts(Eigen::Index(r), Eigen::Index(perm[r]));
      best = std::max(best, hits);
    } while (std::next_permutation(perm.begin(), perm.end()));
  } else {
    const auto match = hungarian_max(counts);
    for (std::size_t r = 0; r < m; ++r) best += counts(Eigen::Index(r), Eigen::Index(match[r]));
  }
  return best / static_cast<double>(assignment.size());
}

std::vector<std::size_t> make_folds(std::span<const std::size_t> labels, std::size_t folds, std::uint64_t seed,
                                    bool* stratified) {
  std::mt19937_64 rng(seed);
  std::map<std::size_t, std::vector<std::size_t>> by_class;
  for (std::size_t i = 0; i < labels.size(); ++i) by_class[labels[i]].push_back(i);
  bool ok = true;
  for (const auto& [label, members] : by_class) ok = ok && members.size() >= folds;
  if (stratified != nullptr) *stratified = ok;

  std::vector<std::size_t> fold(labels.size(), 0);
  if (!ok) {
    std::clog << "warning: a class has fewer than " << folds << " members; folds are not stratified\n";
    std::vector<std::size_t> order(labels.size());
    std::iota(order.begin(), order.end(), 0);
    std::shuffle(order.begin(), order.end(), rng);
    for (std::size_t i = 0; i < order.size(); ++i) fold[order[i]] = i % folds;
    return fold;
  }
  std::size_t offset = 0;
  for (auto& [label, members] : by_class) {
    std::shuffle(members.begin(), members.end(), rng);
    for (std::size_t i = 0; i < members.size(); ++i) fold[members[i]] = (offset + i) % folds;
    offset = (offset + members.size()) % folds;
  }
  return fold;
}

KnnResult knn_classify(const Eigen::MatrixXd& d, std::span<const std::size_t> labels, std::size_t k, std::size_t folds,
                       std::uint64_t seed) {
  const std::size_t n = labels.size();
  if (d.rows() != d.cols() || static_cast<std::size_t>(d.rows()) != n) {
    throw InputError("distance matrix and labels differ in size");
  }
  if (k < 1) throw InputError("KNN needs k >= 1");
  if (folds < 2 || folds > n) throw InputError("KNN cross-validation needs 2 <= folds <= n");

  KnnResult result;
  const auto fold = make_folds(labels, folds, seed, &result.stratified);
  for (std::size_t f = 0; f < folds; ++f) {
    std::vector<std::size_t> train, test;
    for (std::size_t i = 0; i < n; ++i) (fold[i] == f ? test : train).push_back(i);
    if (test.empty()) continue;
    std::size_t correct = 0;
    for (std::size_t t : test) {
      std::vector<std::size_t> order = train;
      const std::size_t kk = std::min(k, order.size());
      std::partial_sort(order.begin(), order.begin() + std::ptrdiff_t(kk), order.end(),
                        [&](std::size_t a, std::size_t b) {
                          const double da = d(Eigen::Index(t), Eigen::Index(a));
                          const double db = d(Eigen::Index(t), Eigen::Index(b));
                          return da < db || (da == db && a < b);
                        });
      std::map<std::size_t, std::size_t> votes;
      for (std::size_t i = 0; i < kk; ++i) ++votes[labels[order[i]]];
      std::size_t top = 0;
      for (const auto& [label, count] : votes) top = std::max(top, count);
      std::size_t winners = 0;
      std::size_t predicted = 0;
      for (const auto& [label, count] : votes) {
        if (count == top) {
          ++winners;
          predicted = label;
        }
      }
      if (winners > 1) predicted = labels[order[0]];
      if (predicted == labels[t]) ++correct;
    }
    result.per_fold.push_back(static_cast<double>(correct) / static_cast<double>(test.size()));
  }
  const double count = static_cast<double>(result.per_fold.size());
  result.accuracy_mean = std::accumulate(result.per_fold.begin(), result.per_fold.end(), 0.0) / count;
  double var = 0.0;
  for (double a : result.per_fold) var += (a - result.accuracy_mean) * (a - result.accuracy_mean);
  result.accuracy_std = std::sqrt(var / count);
  return result;
}

}  // namespace momentdist
