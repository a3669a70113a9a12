#include "cbs/genericity.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>

#include "cbs/cyclotomic.hpp"

namespace cbs {

namespace {

std::int64_t mod(std::int64_t x, std::int64_t m) { return ((x % m) + m) % m; }

std::int64_t pow_mod(std::int64_t base, std::int64_t exp, std::int64_t m) {
  std::int64_t r = 1 % m, b = mod(base, m);
  for (; exp > 0; exp >>= 1) {
    if (exp & 1) r = r * b % m;
    b = b * b % m;
  }
  return r;
}

void require_prime_not_dividing(std::int64_t q, std::int64_t ell) {
  if (!is_prime(ell)) throw PreconditionError(std::to_string(ell) + " is not prime");
  if (mod(q, ell) == 0) throw PrimeDividesQ(std::to_string(ell) + " divides q = " + std::to_string(q));
}

}  // namespace

ResidueSet::ResidueSet(std::int64_t modulus, std::vector<std::int64_t> residues) {
  if (modulus < 1) throw PreconditionError("ResidueSet modulus must be positive");
  std::set<std::int64_t> s;
  for (auto r : residues) s.insert(mod(r, modulus));
  if (s.empty()) return;
  for (std::int64_t d = 1; d <= modulus; ++d) {
    if (modulus % d) continue;
    const bool periodic = std::all_of(s.begin(), s.end(), [&](std::int64_t r) {
      for (std::int64_t k = r % d; k < modulus; k += d)
        if (!s.count(k)) return false;
      return true;
    });
    if (!periodic) continue;
    modulus_ = d;
    std::set<std::int64_t> reduced;
    for (auto r : s) reduced.insert(r % d);
    residues_.assign(reduced.begin(), reduced.end());
    return;
  }
}

bool ResidueSet::contains(std::int64_t j) const {
  return std::binary_search(residues_.begin(), residues_.end(), mod(j, modulus_));
}

std::vector<std::int64_t> ResidueSet::residues_modulo(std::int64_t multiple) const {
  if (multiple < 1 || multiple % modulus_)
    throw PreconditionError(std::to_string(multiple) + " is not a multiple of " + std::to_string(modulus_));
  std::vector<std::int64_t> out;
  for (std::int64_t j = 0; j < multiple; ++j)
    if (contains(j)) out.push_back(j);
  return out;
}

std::string to_string(const ResidueSet& s) {
  if (s.empty()) return "{}";
  std::ostringstream out;
  out << "{j = ";
  for (std::size_t i = 0; i < s.residues().size(); ++i) out << (i ? "," : "") << s.residues()[i];
  out << " mod " << s.modulus() << "}";
  return out.str();
}

std::int64_t multiplicative_order(std::int64_t x, std::int64_t ell) {
  require_prime_not_dividing(x, ell);
  std::int64_t y = mod(x, ell);
  for (std::int64_t k = 1;; ++k) {
    if (y == 1) return k;
    y = y * mod(x, ell) % ell;
  }
}

std::int64_t compute_e(std::int64_t q, std::int64_t ell) {
  require_prime_not_dividing(q, ell);
  std::int64_t sum = 1, power = 1;
  for (std::int64_t i = 2;; ++i) {
    power = power * mod(q, ell) % ell;
    sum = (sum + power) % ell;
    if (sum == 0) return i;
  }
}

std::int64_t compute_e_prime(std::int64_t q, std::int64_t a, std::int64_t ell) {
  if (a < 1) throw PreconditionError("e' needs a >= 1");
  require_prime_not_dividing(q, ell);
  const std::int64_t qa = pow_mod(q, a, ell);
  const std::int64_t e_prime = compute_e(qa, ell);
  if (qa != 1) {
    const std::int64_t e = compute_e(q, ell);
    if (e_prime != e / std::gcd(a, e))
      throw std::logic_error("e' = " + std::to_string(e_prime) + " contradicts e = " + std::to_string(e));
  }
  return e_prime;
}

ResidueSet set_A(std::int64_t q, std::int64_t a, std::int64_t b, std::int64_t ell) {
  require_prime_not_dividing(q, ell);
  const std::int64_t qa = pow_mod(q, a, ell);
  const std::int64_t period = multiplicative_order(qa, ell);
  const std::int64_t target = mod(-pow_mod(q, b, ell), ell);
  std::vector<std::int64_t> sol;
  std::int64_t y = 1;
  for (std::int64_t j = 0; j < period; ++j, y = y * qa % ell)
    if (y == target) sol.push_back(j);
  return {period, sol};
}

ResidueSet set_A0(std::int64_t e, std::int64_t a, std::int64_t b) {
  if (e < 2) throw PreconditionError("A0 needs e >= 2");
  const int order = static_cast<int>(e);
  const CyclotomicInt zb = CyclotomicInt::zeta_power(order, static_cast<long>(b));
  std::vector<std::int64_t> sol;
  for (std::int64_t j = 0; j < e; ++j)
    if ((zb + CyclotomicInt::zeta_power(order, static_cast<long>(mod(a * j, e)))).is_zero()) sol.push_back(j);
  ResidueSet result(e, sol);
  if (!(result == set_A0_congruence(e, a, b)))
    throw std::logic_error("cyclotomic and congruence routes disagree on A0");
  return result;
}

ResidueSet set_A0_congruence(std::int64_t e, std::int64_t a, std::int64_t b) {
  if (e < 2) throw PreconditionError("A0 needs e >= 2");
  if (e % 2) return {};
  std::vector<std::int64_t> sol;
  for (std::int64_t j = 0; j < e; ++j)
    if (mod(a * j - b - e / 2, e) == 0) sol.push_back(j);
  return {e, sol};
}

GenericityReport verify_A_equals_A0(std::int64_t q, std::int64_t a, std::int64_t b, std::int64_t ell) {
  require_prime_not_dividing(q, ell);
  if (a < 1) throw HypothesisViolated("a must be positive");
  if (mod(q, ell) == 1)
    throw HypothesisViolated("q = 1 mod " + std::to_string(ell) + ": e is not the multiplicative order of q");
  if (pow_mod(q, a, ell) == 1)
    throw HypothesisViolated("q^a = 1 mod " + std::to_string(ell));
  GenericityReport r;
  r.e = compute_e(q, ell);
  r.e_prime = compute_e_prime(q, a, ell);
  r.A = set_A(q, a, b, ell);
  r.A0 = set_A0(r.e, a, b);
  const std::int64_t common = std::lcm(r.A.modulus(), r.A0.modulus());
  r.equal = r.A.residues_modulo(common) == r.A0.residues_modulo(common);
  return r;
}

SweepSummary sweep_genericity(std::int64_t max_ell, std::int64_t max_q, std::int64_t max_b) {
  SweepSummary s;
  for (std::int64_t ell = 2; ell <= max_ell; ++ell) {
    if (!is_prime(ell)) continue;
    for (std::int64_t q = 2; q <= max_q; ++q)
      for (std::int64_t a = 1; a <= 2; ++a)
        for (std::int64_t b = 0; b <= max_b; ++b) {
          if (q % ell == 0 || q % ell == 1 || pow_mod(q, a, ell) == 1) {
            ++s.skipped;
            continue;
          }
          ++s.cases;
          const std::string tag = "(q=" + std::to_string(q) + ", a=" + std::to_string(a) + ", b=" +
                                  std::to_string(b) + ", ell=" + std::to_string(ell) + ")";
          try {
            const GenericityReport r = verify_A_equals_A0(q, a, b, ell);
            const std::int64_t expected = (a == 2 && r.e % 2 == 0) ? r.e / 2 : r.e;
            if (!r.equal) s.failures.push_back(tag + ": A = " + to_string(r.A) + " but A0 = " + to_string(r.A0));
            if (r.e_prime != expected)
              s.failures.push_back(tag + ": e' = " + std::to_string(r.e_prime) + ", expected " +
                                   std::to_string(expected));
            if (r.e != multiplicative_order(q, ell)) s.failures.push_back(tag + ": e is not the order of q");
          } catch (const std::exception& ex) {
            s.failures.push_back(tag + ": " + ex.what());
          }
        }
  }
  return s;
}

}  // namespace cbs
