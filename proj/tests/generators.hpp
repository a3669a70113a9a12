#pragma once

// Hand-rolled generators for decomposition-matrix property tests.

#include <algorithm>
#include <numeric>
#include <random>
#include <utility>

#include "cbs/basicsets.hpp"
#include "cbs/combinat.hpp"

namespace cbs::testgen {

/// Square matrix labelled by `parts` on both sides.
inline LabeledDecompMatrix partition_matrix(const std::vector<Partition>& parts, const IntMatrix& m) {
  std::vector<RowLabel> rows;
  std::vector<std::string> cols;
  for (const Partition& p : parts) {
    rows.push_back({to_string(p), n_invariant(p), {}, {}});
    cols.push_back(to_string(p));
  }
  return {std::move(rows), std::move(cols), m};
}

/// Rows carry class = the partition itself, or "n=k" when grouped by n(lambda);
/// d = n(lambda) either way.
inline LabeledDecompMatrix gu_style_matrix(const std::vector<Partition>& parts, const IntMatrix& m, bool group_by_n) {
  std::vector<RowLabel> rows;
  std::vector<std::string> cols;
  for (const Partition& p : parts) {
    const int n = n_invariant(p);
    rows.push_back({to_string(p), n, group_by_n ? "n=" + std::to_string(n) : to_string(p), n});
    cols.push_back(to_string(p));
  }
  return {std::move(rows), std::move(cols), m};
}

/// d(l,l) = 1, d(l,m) random in [0,3] when l strictly below m in dominance, else 0.
inline IntMatrix random_dominance_unitriangular(const std::vector<Partition>& parts, std::mt19937& rng) {
  const auto n = static_cast<Eigen::Index>(parts.size());
  IntMatrix m = IntMatrix::Identity(n, n);
  std::uniform_int_distribution<int> entry(0, 3);
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = 0; j < n; ++j)
      if (i != j && dominates(parts[static_cast<std::size_t>(i)], parts[static_cast<std::size_t>(j)]))
        m(i, j) = entry(rng);
  return m;
}

/// An off-diagonal position (l, m) with l not below m in dominance.
inline std::pair<Eigen::Index, Eigen::Index> random_forbidden_entry(const std::vector<Partition>& parts,
                                                                     std::mt19937& rng) {
  std::vector<std::pair<Eigen::Index, Eigen::Index>> spots;
  for (std::size_t i = 0; i < parts.size(); ++i)
    for (std::size_t j = 0; j < parts.size(); ++j)
      if (i != j && !dominates(parts[i], parts[j]))
        spots.emplace_back(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j));
  return spots[std::uniform_int_distribution<std::size_t>(0, spots.size() - 1)(rng)];
}

struct FactorizationInstance {
  LabeledDecompMatrix full;
  LabeledDecompMatrix root;
  IntMatrix dprime;
};

/// De has a canonical basic set (each column: a 1 at its basic row, other
/// entries only at rows of strictly larger a-value); D' is unitriangular with
/// respect to the a-values of those basic rows; Dfull = De * D'.
inline FactorizationInstance random_factorization(std::mt19937& rng) {
  std::uniform_int_distribution<int> rows_dist(2, 9), aval(0, 8), entry(0, 2), coin(0, 2);
  const int rows = rows_dist(rng);
  const int cols = std::uniform_int_distribution<int>(1, rows)(rng);

  std::vector<RowLabel> labels;
  for (int i = 0; i < rows; ++i) labels.push_back({"L" + std::to_string(i), aval(rng), {}, {}});

  std::vector<Eigen::Index> order(static_cast<std::size_t>(rows));
  std::iota(order.begin(), order.end(), 0);
  std::shuffle(order.begin(), order.end(), rng);
  std::vector<Eigen::Index> basic(order.begin(), order.begin() + cols);
  auto a_of = [&](Eigen::Index r) { return labels[static_cast<std::size_t>(r)].a; };

  IntMatrix de = IntMatrix::Zero(rows, cols);
  for (int nu = 0; nu < cols; ++nu) {
    const Eigen::Index b = basic[static_cast<std::size_t>(nu)];
    de(b, nu) = 1;
    for (Eigen::Index r = 0; r < rows; ++r)
      if (a_of(r) > a_of(b) && coin(rng) == 0) de(r, nu) = 1 + entry(rng);
  }
  IntMatrix dp = IntMatrix::Identity(cols, cols);
  for (int nu = 0; nu < cols; ++nu)
    for (int mu = 0; mu < cols; ++mu)
      if (a_of(basic[static_cast<std::size_t>(nu)]) > a_of(basic[static_cast<std::size_t>(mu)]) && coin(rng) == 0)
        dp(nu, mu) = 1 + entry(rng);

  std::vector<std::string> root_cols, full_cols;
  for (int j = 0; j < cols; ++j) {
    root_cols.push_back("Me" + std::to_string(j));
    full_cols.push_back("M" + std::to_string(j));
  }
  LabeledDecompMatrix root(labels, root_cols, de);
  LabeledDecompMatrix full(labels, full_cols, de * dp);
  return {std::move(full), std::move(root), std::move(dp)};
}

}  // namespace cbs::testgen
