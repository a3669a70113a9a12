#pragma once

// Partitions, bipartitions, and the 2-core/2-quotient bookkeeping that labels
// the principal series of the unitary groups.

#include <compare>
#include <string>
#include <string_view>
#include <vector>

#include "cbs/errors.hpp"

namespace cbs {

inline constexpr int kMaxPartitionSize = 60;

class Partition {
 public:
  Partition() = default;
  /// Throws PreconditionError unless parts are positive and weakly decreasing.
  explicit Partition(std::vector<int> parts);

  const std::vector<int>& parts() const noexcept { return parts_; }
  int size() const noexcept { return size_; }
  int length() const noexcept { return static_cast<int>(parts_.size()); }
  bool empty() const noexcept { return parts_.empty(); }
  /// lambda_i for i >= 0, zero past the end.
  int operator[](std::size_t i) const noexcept { return i < parts_.size() ? parts_[i] : 0; }

  friend bool operator==(const Partition&, const Partition&) = default;
  friend auto operator<=>(const Partition& a, const Partition& b) { return a.parts_ <=> b.parts_; }

 private:
  std::vector<int> parts_;
  int size_ = 0;
};

struct Bipartition {
  Partition first;
  Partition second;

  int size() const noexcept { return first.size() + second.size(); }
  friend bool operator==(const Bipartition&, const Bipartition&) = default;
  friend auto operator<=>(const Bipartition&, const Bipartition&) = default;
};

/// (n)
Partition row_partition(int n);
/// (1^n)
Partition column_partition(int n);

/// sum (i-1) lambda_i
int n_invariant(const Partition& lambda);
/// lambda ⊴ mu in the dominance order. Throws SizeMismatch if |lambda| != |mu|.
bool dominates(const Partition& lambda, const Partition& mu);
/// No part value occurs e or more times.
bool is_e_regular(const Partition& lambda, int e);

/// All partitions of n in reverse lexicographic order, (n) first.
std::vector<Partition> list_partitions(int n);
/// All bipartitions of m: the first component's size runs m, m-1, ..., 0, and
/// within a size both components follow list_partitions order.
std::vector<Bipartition> list_bipartitions(int m);

/// Beta-set of lambda with `beads` beads: lambda_i + beads - i, i = 1..beads.
std::vector<int> beta_numbers(const Partition& lambda, int beads);
/// Partition whose beta-set (with that many beads) is the given set.
Partition from_beta_numbers(std::vector<int> beta);

Partition two_core(const Partition& lambda);
/// Runner convention: use a number of beads of the same parity as |lambda|;
/// the odd runner gives the first component and the even runner the second.
/// Under it the row (2m+s) has quotient ((m), ∅) and the column (1^(2m+s))
/// has quotient (∅, (1^m)).
Bipartition two_quotient(const Partition& lambda);

/// The partition of 2m+s with 2-core ∅ (s = 0) or (1) (s = 1) and 2-quotient b.
Partition embed_bipartition(const Bipartition& b, int s);
/// Inverse of embed_bipartition; throws PreconditionError if lambda has the wrong 2-core.
Bipartition extract_bipartition(const Partition& lambda, int s);

/// a-invariant for the weights (2s+1; 2, ..., 2) on B_m: n(embed_bipartition(b, s)).
int a_invariant_unitary(const Bipartition& b, int s);

/// `3,2,1`; the empty partition renders as the empty string.
std::string to_string(const Partition& p);
/// `3,1|2`
std::string to_string(const Bipartition& b);
/// Accepts `3,2,1`, the empty string, or `-` for the empty partition.
Partition parse_partition(std::string_view text);
Bipartition parse_bipartition(std::string_view text);

}  // namespace cbs
