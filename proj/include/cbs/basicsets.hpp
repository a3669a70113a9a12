#pragma once

// Labelled decomposition matrices and the canonical basic sets they carry.

#include <Eigen/Core>

#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "cbs/coxeter.hpp"
#include "cbs/errors.hpp"

namespace cbs {

using IntMatrix = Eigen::Matrix<std::int64_t, Eigen::Dynamic, Eigen::Dynamic>;

struct RowLabel {
  std::string label;
  int a = 0;
  std::optional<std::string> class_label;
  std::optional<int> d;

  friend bool operator==(const RowLabel&, const RowLabel&) = default;
};

/// Rows are characteristic-zero simples with their a-invariants, columns are
/// modular simples, entries are decomposition numbers.
class LabeledDecompMatrix {
 public:
  /// Throws PreconditionError on negative entries, shape mismatches, or a zero column.
  LabeledDecompMatrix(std::vector<RowLabel> rows, std::vector<std::string> cols, IntMatrix entries);

  const std::vector<RowLabel>& rows() const noexcept { return rows_; }
  const std::vector<std::string>& cols() const noexcept { return cols_; }
  const IntMatrix& entries() const noexcept { return entries_; }
  std::int64_t operator()(Eigen::Index row, Eigen::Index col) const { return entries_(row, col); }
  Eigen::Index row_count() const noexcept { return entries_.rows(); }
  Eigen::Index col_count() const noexcept { return entries_.cols(); }

  friend bool operator==(const LabeledDecompMatrix& a, const LabeledDecompMatrix& b);

 private:
  std::vector<RowLabel> rows_;
  std::vector<std::string> cols_;
  IntMatrix entries_;
};

/// iota: column index -> row index, injective.
struct BasicSet {
  std::vector<Eigen::Index> iota;

  /// Row labels of the image, in column order.
  std::vector<std::string> labels(const LabeledDecompMatrix& d) const;
  /// Row labels of the image, sorted.
  std::vector<std::string> label_set(const LabeledDecompMatrix& d) const;
};

/// Extracts iota column by column from the minimal a-value, then checks the
/// vanishing condition on every entry. Throws NoCanonicalSet.
BasicSet canonical_basic_set(const LabeledDecompMatrix& d);

/// Rows ind, eps1, rho+, rho-, eps2, eps with a = 0, 1, 3, 3, 7, 12.
LabeledDecompMatrix g2_decomposition_table(int e);

struct BetaReport {
  BasicSet full;   // iota for the specialization at q mod ell
  BasicSet root;   // iota_e for the specialization at zeta_e
  std::vector<Eigen::Index> beta;  // columns of full -> columns of root
  bool sets_equal = false;
};

/// Checks full = root * dprime, builds beta and confirms iota = iota_e ∘ beta.
/// Throws ProductMismatch, BetaNotUnique or BasicSetsDiffer.
BetaReport beta_factorization(const LabeledDecompMatrix& full, const LabeledDecompMatrix& root,
                              const IntMatrix& dprime);

struct NotCatalogued {
  std::string reason;
};
using CatalogResult = std::variant<std::vector<std::string>, NotCatalogued>;

struct CatalogQuery {
  CoxeterType type;
  int rank;
  std::vector<int> weights;
  int e;
};

/// Labels of the canonical basic set, or an explicit NotCatalogued.
CatalogResult basic_set_catalog(const CatalogQuery& query);

struct EntryViolation {
  Eigen::Index row;
  Eigen::Index col;
  std::int64_t value;
  std::string rule;
};

struct UnitriangularReport {
  bool dominance_ok = true;   // d(l,l) = 1 and d(l,m) = 0 unless l ⊴ m
  bool n_ok = true;           // d(l,l) = 1 and d(l,m) = 0 unless n(m) < n(l) or l = m
  bool consistent = true;     // dominance_ok implies n_ok
  std::vector<EntryViolation> violations;
  bool ok() const noexcept { return dominance_ok && n_ok; }
};

/// Rows and columns must carry the same list of partition labels.
UnitriangularReport verify_unitriangular(const LabeledDecompMatrix& d);

struct ShapeReport {
  bool ok = true;
  /// Row indices grouped into blocks, in increasing d order.
  std::vector<std::vector<Eigen::Index>> blocks;
  std::vector<EntryViolation> violations;
};

/// Groups rows by class label, orders blocks by d, and requires zero blocks
/// above the diagonal and identity diagonal blocks. Column j is matched with
/// row j.
ShapeReport verify_conjecture_shape(const LabeledDecompMatrix& d);

}  // namespace cbs
