#include "cbs/basicsets.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "cbs/combinat.hpp"

namespace cbs {

LabeledDecompMatrix::LabeledDecompMatrix(std::vector<RowLabel> rows, std::vector<std::string> cols,
                                         IntMatrix entries)
    : rows_(std::move(rows)), cols_(std::move(cols)), entries_(std::move(entries)) {
  if (entries_.rows() != static_cast<Eigen::Index>(rows_.size()) ||
      entries_.cols() != static_cast<Eigen::Index>(cols_.size()))
    throw PreconditionError("decomposition matrix is " + std::to_string(entries_.rows()) + "x" +
                            std::to_string(entries_.cols()) + " but has " + std::to_string(rows_.size()) +
                            " row and " + std::to_string(cols_.size()) + " column labels");
  if ((entries_.array() < 0).any()) throw PreconditionError("decomposition numbers must be nonnegative");
  for (Eigen::Index j = 0; j < entries_.cols(); ++j)
    if ((entries_.col(j).array() == 0).all())
      throw PreconditionError("column '" + cols_[static_cast<std::size_t>(j)] + "' is zero");
}

bool operator==(const LabeledDecompMatrix& a, const LabeledDecompMatrix& b) {
  return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.entries_.rows() == b.entries_.rows() &&
         a.entries_.cols() == b.entries_.cols() && a.entries_ == b.entries_;
}

std::vector<std::string> BasicSet::labels(const LabeledDecompMatrix& d) const {
  std::vector<std::string> out;
  for (auto r : iota) out.push_back(d.rows()[static_cast<std::size_t>(r)].label);
  return out;
}

std::vector<std::string> BasicSet::label_set(const LabeledDecompMatrix& d) const {
  auto out = labels(d);
  std::sort(out.begin(), out.end());
  return out;
}

BasicSet canonical_basic_set(const LabeledDecompMatrix& d) {
  BasicSet b;
  std::vector<int> a_min(static_cast<std::size_t>(d.col_count()));
  for (Eigen::Index mu = 0; mu < d.col_count(); ++mu) {
    int best = 0;
    std::vector<Eigen::Index> argmin;
    for (Eigen::Index lambda = 0; lambda < d.row_count(); ++lambda) {
      if (d(lambda, mu) == 0) continue;
      const int a = d.rows()[static_cast<std::size_t>(lambda)].a;
      if (argmin.empty() || a < best) {
        best = a;
        argmin = {lambda};
      } else if (a == best) {
        argmin.push_back(lambda);
      }
    }
    const std::string col = "'" + d.cols()[static_cast<std::size_t>(mu)] + "'";
    if (argmin.size() > 1)
      throw NoCanonicalSet(static_cast<std::size_t>(mu), NoCanonicalSetReason::Tie,
                           std::to_string(argmin.size()) + " rows reach the minimal a-value " +
                               std::to_string(best) + " in column " + col);
    if (d(argmin[0], mu) != 1)
      throw NoCanonicalSet(static_cast<std::size_t>(mu), NoCanonicalSetReason::MultiplicityNotOne,
                           "row '" + d.rows()[static_cast<std::size_t>(argmin[0])].label + "' has entry " +
                               std::to_string(d(argmin[0], mu)) + " in column " + col);
    a_min[static_cast<std::size_t>(mu)] = best;
    b.iota.push_back(argmin[0]);
  }

  std::map<Eigen::Index, Eigen::Index> seen;
  for (Eigen::Index mu = 0; mu < d.col_count(); ++mu) {
    auto [it, fresh] = seen.emplace(b.iota[static_cast<std::size_t>(mu)], mu);
    if (!fresh)
      throw NoCanonicalSet(static_cast<std::size_t>(mu), NoCanonicalSetReason::SecondConditionViolated,
                           "row '" + d.rows()[static_cast<std::size_t>(it->first)].label +
                               "' is selected by two columns, so iota is not injective");
  }
  for (Eigen::Index mu = 0; mu < d.col_count(); ++mu)
    for (Eigen::Index lambda = 0; lambda < d.row_count(); ++lambda) {
      if (d(lambda, mu) == 0 || lambda == b.iota[static_cast<std::size_t>(mu)]) continue;
      if (a_min[static_cast<std::size_t>(mu)] < d.rows()[static_cast<std::size_t>(lambda)].a) continue;
      throw NoCanonicalSet(static_cast<std::size_t>(mu), NoCanonicalSetReason::SecondConditionViolated,
                           "entry at row '" + d.rows()[static_cast<std::size_t>(lambda)].label + "'");
    }
  return b;
}

LabeledDecompMatrix g2_decomposition_table(int e) {
  if (e < 2) throw PreconditionError("g2_decomposition_table needs e >= 2");
  std::vector<RowLabel> rows = {{"ind", 0, {}, {}},  {"eps1", 1, {}, {}}, {"rho+", 3, {}, {}},
                                {"rho-", 3, {}, {}}, {"eps2", 7, {}, {}}, {"eps", 12, {}, {}}};
  IntMatrix m;
  switch (e) {
    case 2:
      m.resize(6, 3);
      m << 1, 0, 0,
           1, 0, 0,
           0, 1, 0,
           0, 0, 1,
           1, 0, 0,
           1, 0, 0;
      break;
    case 3:
      m.resize(6, 4);
      m << 1, 0, 0, 0,
           0, 1, 0, 0,
           0, 1, 1, 0,
           1, 0, 0, 1,
           0, 0, 1, 0,
           0, 0, 0, 1;
      break;
    case 6:
      m.resize(6, 3);
      m << 1, 0, 0,
           0, 1, 0,
           0, 0, 1,
           1, 1, 0,
           1, 0, 0,
           0, 1, 0;
      break;
    case 12:
      m.resize(6, 5);
      m << 1, 0, 0, 0, 0,
           0, 1, 0, 0, 0,
           1, 0, 1, 0, 0,
           0, 0, 0, 1, 0,
           0, 0, 0, 0, 1,
           0, 0, 1, 0, 0;
      break;
    default:
      m = IntMatrix::Identity(6, 6);
  }
  std::vector<std::string> cols;
  for (Eigen::Index j = 0; j < m.cols(); ++j) cols.push_back("M" + std::to_string(j + 1));
  return {std::move(rows), std::move(cols), std::move(m)};
}

BetaReport beta_factorization(const LabeledDecompMatrix& full, const LabeledDecompMatrix& root,
                              const IntMatrix& dprime) {
  if (full.row_count() != root.row_count())
    throw PreconditionError("the two matrices must share their rows");
  for (std::size_t i = 0; i < full.rows().size(); ++i)
    if (full.rows()[i].label != root.rows()[i].label || full.rows()[i].a != root.rows()[i].a)
      throw PreconditionError("row " + std::to_string(i) + " differs in label or a-invariant");
  if (full.col_count() != root.col_count())
    throw PreconditionError("the two specializations have " + std::to_string(full.col_count()) + " and " +
                            std::to_string(root.col_count()) + " simple modules");
  if (dprime.rows() != root.col_count() || dprime.cols() != full.col_count())
    throw PreconditionError("d' must be " + std::to_string(root.col_count()) + "x" +
                            std::to_string(full.col_count()));

  const IntMatrix product = root.entries() * dprime;
  for (Eigen::Index i = 0; i < product.rows(); ++i)
    for (Eigen::Index j = 0; j < product.cols(); ++j)
      if (product(i, j) != full(i, j))
        throw ProductMismatch("entry (" + full.rows()[static_cast<std::size_t>(i)].label + ", " +
                              full.cols()[static_cast<std::size_t>(j)] + ") is " + std::to_string(full(i, j)) +
                              " but the factorization gives " + std::to_string(product(i, j)));

  BetaReport report;
  report.full = canonical_basic_set(full);
  report.root = canonical_basic_set(root);

  for (Eigen::Index mu = 0; mu < full.col_count(); ++mu) {
    const Eigen::Index lambda = report.full.iota[static_cast<std::size_t>(mu)];
    std::vector<Eigen::Index> candidates;
    for (Eigen::Index nu = 0; nu < root.col_count(); ++nu)
      if (root(lambda, nu) != 0 && dprime(nu, mu) != 0) candidates.push_back(nu);
    if (candidates.size() != 1)
      throw BetaNotUnique("column '" + full.cols()[static_cast<std::size_t>(mu)] + "' has " +
                          std::to_string(candidates.size()) + " candidates");
    report.beta.push_back(candidates[0]);
    if (report.root.iota[static_cast<std::size_t>(candidates[0])] != lambda)
      throw BasicSetsDiffer("iota('" + full.cols()[static_cast<std::size_t>(mu)] + "') = '" +
                            full.rows()[static_cast<std::size_t>(lambda)].label + "' but iota_e(beta) = '" +
                            full.rows()[static_cast<std::size_t>(report.root.iota[static_cast<std::size_t>(candidates[0])])].label + "'");
  }
  report.sets_equal = report.full.label_set(full) == report.root.label_set(root);
  if (!report.sets_equal) throw BasicSetsDiffer("the two basic sets differ");
  return report;
}

namespace {

std::vector<std::string> g2_catalog(int e) {
  switch (e) {
    case 2: return {"ind", "rho+", "rho-"};
    case 3: return {"ind", "eps1", "rho+", "rho-"};
    case 6: return {"ind", "eps1", "rho+"};
    case 12: return {"ind", "eps1", "rho+", "rho-", "eps2"};
    default: return {"ind", "eps1", "rho+", "rho-", "eps2", "eps"};
  }
}

}  // namespace

CatalogResult basic_set_catalog(const CatalogQuery& query) {
  if (query.e < 2) throw PreconditionError("the catalog needs e >= 2");
  if (static_cast<int>(query.weights.size()) != query.rank)
    throw InvalidWeights("expected " + std::to_string(query.rank) + " weights");

  switch (query.type) {
    case CoxeterType::G2:
      if (query.weights == std::vector<int>{3, 1}) return g2_catalog(query.e);
      return NotCatalogued{"G2 is only catalogued with weights (3,1)"};

    case CoxeterType::A: {
      if (std::adjacent_find(query.weights.begin(), query.weights.end(), std::not_equal_to<>()) !=
          query.weights.end())
        throw InvalidWeights("type A needs equal parameters");
      std::vector<std::string> out;
      for (const auto& p : list_partitions(query.rank + 1))
        if (is_e_regular(p, query.e)) out.push_back(to_string(p));
      return out;
    }

    case CoxeterType::B: {
      const int m = query.rank;
      std::optional<int> s;
      for (int cand : {0, 1})
        if (query.weights == unitary_weights(m, cand)) s = cand;
      if (!s) return NotCatalogued{"type B is only catalogued for the unitary weights (2s+1; 2, ..., 2)"};
      if (query.e == 2)
        return NotCatalogued{"e = 2: the basic set is a special class of bipartitions, not enumerated here"};
      if (query.e % 4 == 2)
        return NotCatalogued{"e twice an odd number: the basic set is given by the FLOTW bipartitions, "
                             "not enumerated here"};
      std::vector<std::string> out;
      for (const auto& b : list_bipartitions(m))
        if (is_e_regular(b.first, query.e) && is_e_regular(b.second, query.e)) out.push_back(to_string(b));
      return out;
    }

    case CoxeterType::Custom:
      break;
  }
  return NotCatalogued{"no catalogue entry for custom Coxeter data"};
}

namespace {

std::vector<Partition> partition_labels(const LabeledDecompMatrix& d) {
  if (d.row_count() != d.col_count()) throw PreconditionError("triangularity needs a square matrix");
  std::vector<Partition> labels;
  for (std::size_t i = 0; i < d.rows().size(); ++i) {
    if (d.rows()[i].label != d.cols()[i])
      throw PreconditionError("row " + std::to_string(i) + " and column " + std::to_string(i) +
                              " carry different labels");
    labels.push_back(parse_partition(d.rows()[i].label));
    if (labels.back().size() != labels.front().size())
      throw SizeMismatch("all labels must be partitions of the same integer");
  }
  return labels;
}

}  // namespace

UnitriangularReport verify_unitriangular(const LabeledDecompMatrix& d) {
  const std::vector<Partition> labels = partition_labels(d);
  UnitriangularReport r;
  for (Eigen::Index i = 0; i < d.row_count(); ++i)
    for (Eigen::Index j = 0; j < d.col_count(); ++j) {
      const std::int64_t v = d(i, j);
      const Partition& lambda = labels[static_cast<std::size_t>(i)];
      const Partition& mu = labels[static_cast<std::size_t>(j)];
      if (i == j) {
        if (v != 1) {
          r.dominance_ok = r.n_ok = false;
          r.violations.push_back({i, j, v, "diagonal entry must be 1"});
        }
        continue;
      }
      if (v == 0) continue;
      if (!dominates(lambda, mu)) {
        r.dominance_ok = false;
        r.violations.push_back({i, j, v, "nonzero although row label does not lie below column label in dominance"});
      }
      if (!(n_invariant(mu) < n_invariant(lambda))) {
        r.n_ok = false;
        r.violations.push_back({i, j, v, "nonzero although n(column) >= n(row)"});
      }
    }
  r.consistent = !r.dominance_ok || r.n_ok;
  return r;
}

ShapeReport verify_conjecture_shape(const LabeledDecompMatrix& d) {
  if (d.row_count() != d.col_count()) throw PreconditionError("block shape needs a square matrix");
  struct Block {
    std::string cls;
    int d;
    std::vector<Eigen::Index> rows;
  };
  std::vector<Block> blocks;
  for (Eigen::Index i = 0; i < d.row_count(); ++i) {
    const RowLabel& row = d.rows()[static_cast<std::size_t>(i)];
    if (!row.class_label || !row.d)
      throw PreconditionError("row '" + row.label + "' lacks a class label or d-invariant");
    auto it = std::find_if(blocks.begin(), blocks.end(), [&](const Block& b) { return b.cls == *row.class_label; });
    if (it == blocks.end()) {
      blocks.push_back({*row.class_label, *row.d, {i}});
    } else {
      if (it->d != *row.d)
        throw PreconditionError("class '" + it->cls + "' carries two different d-invariants");
      it->rows.push_back(i);
    }
  }
  std::stable_sort(blocks.begin(), blocks.end(), [](const Block& x, const Block& y) { return x.d < y.d; });

  ShapeReport r;
  for (std::size_t bi = 0; bi < blocks.size(); ++bi) {
    r.blocks.push_back(blocks[bi].rows);
    for (std::size_t bj = bi; bj < blocks.size(); ++bj)
      for (Eigen::Index i : blocks[bi].rows)
        for (Eigen::Index j : blocks[bj].rows) {
          const std::int64_t v = d(i, j);
          if (bi == bj) {
            const std::int64_t expected = i == j ? 1 : 0;
            if (v != expected) {
              r.ok = false;
              r.violations.push_back({i, j, v, "diagonal block '" + blocks[bi].cls + "' is not an identity matrix"});
            }
          } else if (v != 0) {
            r.ok = false;
            r.violations.push_back({i, j, v, "nonzero entry above the diagonal blocks"});
          }
        }
  }
  return r;
}

}  // namespace cbs
