#pragma once

// Modular arithmetic behind the genericity of basic sets: the parameters e
// and e', and the periodic sets A (over F_ell) and A0 (over Z[zeta_e]).

#include <cstdint>
#include <string>
#include <vector>

#include "cbs/errors.hpp"

namespace cbs {

/// {j in Z : j mod modulus in residues}, stored with the smallest period.
class ResidueSet {
 public:
  ResidueSet() = default;  // the empty set
  ResidueSet(std::int64_t modulus, std::vector<std::int64_t> residues);

  std::int64_t modulus() const noexcept { return modulus_; }
  const std::vector<std::int64_t>& residues() const noexcept { return residues_; }
  bool empty() const noexcept { return residues_.empty(); }
  bool contains(std::int64_t j) const;
  /// The same set written with a multiple of the canonical modulus.
  std::vector<std::int64_t> residues_modulo(std::int64_t multiple) const;

  friend bool operator==(const ResidueSet&, const ResidueSet&) = default;

 private:
  std::int64_t modulus_ = 1;
  std::vector<std::int64_t> residues_;
};

std::string to_string(const ResidueSet& s);

std::int64_t multiplicative_order(std::int64_t x, std::int64_t ell);

/// min{i >= 2 : 1 + q + ... + q^(i-1) = 0 mod ell}
std::int64_t compute_e(std::int64_t q, std::int64_t ell);
/// min{j >= 2 : 1 + q^a + ... + q^(a(j-1)) = 0 mod ell}
std::int64_t compute_e_prime(std::int64_t q, std::int64_t a, std::int64_t ell);

/// {j : q^b + q^(aj) = 0 mod ell}
ResidueSet set_A(std::int64_t q, std::int64_t a, std::int64_t b, std::int64_t ell);
/// {j : zeta_e^b + zeta_e^(aj) = 0}, decided in Z[zeta_e].
ResidueSet set_A0(std::int64_t e, std::int64_t a, std::int64_t b);
/// The same set from the congruence a j = b + e/2 (mod e), empty for odd e.
ResidueSet set_A0_congruence(std::int64_t e, std::int64_t a, std::int64_t b);

struct GenericityReport {
  std::int64_t e = 0;
  std::int64_t e_prime = 0;
  ResidueSet A;
  ResidueSet A0;
  bool equal = false;
};

/// Requires ell prime, ell not dividing q, q != 1 and q^a != 1 mod ell;
/// throws PrimeDividesQ or HypothesisViolated otherwise.
GenericityReport verify_A_equals_A0(std::int64_t q, std::int64_t a, std::int64_t b, std::int64_t ell);

struct SweepSummary {
  int cases = 0;
  int skipped = 0;  // parameter tuples outside the hypotheses
  std::vector<std::string> failures;
};

/// All primes ell <= max_ell, 2 <= q <= max_q, a in {1,2}, 0 <= b <= max_b that
/// satisfy the hypotheses: checks A = A0 and e' = e unless a = 2 and e even,
/// where e' = e/2.
SweepSummary sweep_genericity(std::int64_t max_ell = 50, std::int64_t max_q = 50, std::int64_t max_b = 3);

}  // namespace cbs
