#pragma once

// Finite Coxeter groups carrying a weight function L.
//
// A CoxeterDatum enumerates its whole group once at construction, in
// ShortLex order of normal words (length first, then lexicographic with
// generator 0 < generator 1 < ...). Elements are handles into that table, so
// every query afterwards is a lookup.

#include <Eigen/Core>

#include <compare>
#include <cstddef>
#include <cstdint>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "cbs/errors.hpp"

namespace cbs {

enum class CoxeterType { A, B, G2, Custom };

std::string to_string(CoxeterType t);
CoxeterType parse_coxeter_type(std::string_view name);

inline constexpr std::size_t kDefaultGroupOrderCap = 1'000'000;

/// Index of an element in its datum's ShortLex enumeration; 0 is the identity.
struct GroupElement {
  std::uint32_t index = 0;
  friend auto operator<=>(const GroupElement&, const GroupElement&) = default;
};

/// Generator indices, 0-based.
using Word = std::vector<int>;

class CoxeterDatum {
 public:
  /// Built-in types. A with rank r is the symmetric group on r+1 letters; B with
  /// rank m has the special node first (m(s0,s1) = 4); G2 has m(s0,s1) = 6.
  static std::shared_ptr<const CoxeterDatum> build(CoxeterType type, int rank,
                                                   std::vector<int> weights,
                                                   std::size_t cap = kDefaultGroupOrderCap);
  /// Arbitrary finite Coxeter matrix; realized through the permutation action
  /// on the root system of the geometric representation.
  static std::shared_ptr<const CoxeterDatum> custom(const Eigen::MatrixXi& coxeter_matrix,
                                                    std::vector<int> weights,
                                                    std::size_t cap = kDefaultGroupOrderCap);

  CoxeterType type() const noexcept { return type_; }
  int rank() const noexcept { return rank_; }
  const Eigen::MatrixXi& coxeter_matrix() const noexcept { return matrix_; }
  const std::vector<int>& weights() const noexcept { return weights_; }
  std::size_t order() const noexcept { return length_.size(); }

  GroupElement identity() const noexcept { return {}; }
  GroupElement generator(int s) const;
  std::vector<GroupElement> elements() const;

  GroupElement multiply(GroupElement x, GroupElement y) const;
  GroupElement inverse(GroupElement x) const;
  GroupElement right_multiply(GroupElement w, int s) const;
  GroupElement left_multiply(int s, GroupElement w) const;
  int length(GroupElement x) const;
  int weight(GroupElement x) const;
  /// The ShortLex normal word of x.
  Word reduced_word(GroupElement x) const;
  GroupElement longest_element() const;
  /// Evaluates an arbitrary (not necessarily reduced) word.
  GroupElement from_word(const Word& word) const;

  /// Reduced word as `s1.s2.s1` (1-based); the identity renders as `1`.
  std::string format(GroupElement x) const;
  GroupElement parse_element(std::string_view text) const;

  /// Stable text key of (type, rank, weights, Coxeter matrix).
  std::string fingerprint() const;

  friend bool operator==(const CoxeterDatum& a, const CoxeterDatum& b);

 private:
  CoxeterDatum() = default;
  void validate(std::size_t cap) const;
  void enumerate(const std::vector<std::vector<std::uint32_t>>& generator_perms, std::size_t cap);
  void check(GroupElement x) const;

  CoxeterType type_ = CoxeterType::Custom;
  int rank_ = 0;
  Eigen::MatrixXi matrix_;
  std::vector<int> weights_;

  // Per-element tables, indexed by GroupElement::index.
  std::vector<int> length_;
  std::vector<int> weight_;
  std::vector<std::uint32_t> parent_;
  std::vector<int> last_letter_;
  std::vector<std::uint32_t> inverse_;
  std::vector<std::uint32_t> right_;  // [index * rank + s]
  std::vector<std::uint32_t> left_;   // [index * rank + s]
};

using DatumPtr = std::shared_ptr<const CoxeterDatum>;

inline DatumPtr build_datum(CoxeterType type, int rank, std::vector<int> weights,
                            std::size_t cap = kDefaultGroupOrderCap) {
  return CoxeterDatum::build(type, rank, std::move(weights), cap);
}

/// (b, a, a, ..., a) for B_m.
std::vector<int> b_weights(int m, int b, int a);
/// The unitary weight function (2s+1, 2, ..., 2) on B_m, s in {0, 1}.
std::vector<int> unitary_weights(int m, int s);

/// Coxeter matrix of a built-in type.
Eigen::MatrixXi coxeter_matrix_of(CoxeterType type, int rank);

}  // namespace cbs
