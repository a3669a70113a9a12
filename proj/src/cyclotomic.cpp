#include "cbs/cyclotomic.hpp"

#include <map>
#include <mutex>
#include <numeric>
#include <sstream>

namespace cbs {

namespace {

using IntPoly = std::vector<mpz_class>;  // index = exponent

// Exact division of a monic-divisor integer polynomial; the remainder must vanish.
IntPoly divide_exact(IntPoly num, const IntPoly& den) {
  const std::size_t dn = den.size() - 1;
  IntPoly quot(num.size() - dn);
  for (std::size_t i = num.size(); i-- > dn;) {
    mpz_class c = num[i];
    quot[i - dn] = c;
    if (c == 0) continue;
    for (std::size_t j = 0; j <= dn; ++j) num[i - dn + j] -= c * den[j];
  }
  return quot;
}

// Phi_e as a dense coefficient vector, memoized behind a mutex.
const IntPoly& cyclotomic_dense(int e) {
  static std::mutex mu;
  static std::map<int, IntPoly> cache;
  {
    std::lock_guard lock(mu);
    if (auto it = cache.find(e); it != cache.end()) return it->second;
  }
  IntPoly num(static_cast<std::size_t>(e) + 1);
  num[0] = -1;
  num[static_cast<std::size_t>(e)] = 1;
  for (int d = 1; d < e; ++d)
    if (e % d == 0) num = divide_exact(std::move(num), cyclotomic_dense(d));
  std::lock_guard lock(mu);
  return cache.try_emplace(e, std::move(num)).first->second;
}

void reduce_mod_phi(IntPoly& a, int e) {
  const IntPoly& phi = cyclotomic_dense(e);
  const std::size_t deg = phi.size() - 1;
  for (std::size_t i = a.size(); i-- > deg;) {
    mpz_class c = a[i];
    if (c == 0) continue;
    for (std::size_t j = 0; j <= deg; ++j) a[i - deg + j] -= c * phi[j];
  }
  a.resize(deg);
}

std::int64_t pow_mod(std::int64_t base, std::int64_t exp, std::int64_t mod) {
  mpz_class r;
  mpz_class b = static_cast<long>(base), m = static_cast<long>(mod);
  mpz_powm_ui(r.get_mpz_t(), b.get_mpz_t(), static_cast<unsigned long>(exp), m.get_mpz_t());
  return r.get_si();
}

}  // namespace

int euler_phi(int e) {
  if (e < 1) throw PreconditionError("euler_phi: order must be positive");
  int result = e, n = e;
  for (int p = 2; p * p <= n; ++p) {
    if (n % p) continue;
    while (n % p == 0) n /= p;
    result -= result / p;
  }
  if (n > 1) result -= result / n;
  return result;
}

LaurentPoly cyclotomic_polynomial(int e) {
  if (e < 1) throw PreconditionError("cyclotomic_polynomial: order must be positive");
  LaurentPoly p;
  const IntPoly& d = cyclotomic_dense(e);
  for (std::size_t k = 0; k < d.size(); ++k) p.add_term(static_cast<int>(k), mpq_class(d[k]));
  return p;
}

CyclotomicInt::CyclotomicInt(int e) : order_(e) {
  if (e < 1) throw PreconditionError("CyclotomicInt: order must be positive");
  coeffs_.assign(static_cast<std::size_t>(euler_phi(e)), 0);
}

CyclotomicInt CyclotomicInt::integer(int e, const mpz_class& n) {
  CyclotomicInt z(e);
  z.coeffs_[0] = n;
  return z;
}

CyclotomicInt CyclotomicInt::zeta_power(int e, long k) {
  long r = k % e;
  if (r < 0) r += e;
  IntPoly v(static_cast<std::size_t>(r) + 1);
  v[static_cast<std::size_t>(r)] = 1;
  return from_polynomial(e, std::move(v));
}

CyclotomicInt CyclotomicInt::from_polynomial(int e, std::vector<mpz_class> coeffs) {
  CyclotomicInt z(e);
  if (coeffs.size() < z.coeffs_.size()) coeffs.resize(z.coeffs_.size());
  reduce_mod_phi(coeffs, e);
  z.coeffs_ = std::move(coeffs);
  return z;
}

bool CyclotomicInt::is_zero() const {
  for (const auto& c : coeffs_)
    if (c != 0) return false;
  return true;
}

void CyclotomicInt::require_same_order(const CyclotomicInt& o) const {
  if (order_ != o.order_)
    throw PreconditionError("CyclotomicInt: mixing orders " + std::to_string(order_) + " and " +
                            std::to_string(o.order_));
}

CyclotomicInt& CyclotomicInt::operator+=(const CyclotomicInt& o) {
  require_same_order(o);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
  return *this;
}

CyclotomicInt& CyclotomicInt::operator-=(const CyclotomicInt& o) {
  require_same_order(o);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
  return *this;
}

CyclotomicInt operator-(const CyclotomicInt& a) {
  CyclotomicInt r = a;
  for (auto& c : r.coeffs_) c = -c;
  return r;
}

CyclotomicInt operator*(const CyclotomicInt& a, const CyclotomicInt& b) {
  a.require_same_order(b);
  const std::size_t n = a.coeffs_.size();
  IntPoly prod(n == 0 ? 0 : 2 * n - 1);
  for (std::size_t i = 0; i < n; ++i) {
    if (a.coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < n; ++j) prod[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  return CyclotomicInt::from_polynomial(a.order_, std::move(prod));
}

bool operator==(const CyclotomicInt& a, const CyclotomicInt& b) {
  return a.order_ == b.order_ && a.coeffs_ == b.coeffs_;
}

std::string to_string(const CyclotomicInt& z) {
  std::ostringstream out;
  bool first = true;
  for (std::size_t i = 0; i < z.coefficients().size(); ++i) {
    const mpz_class& c = z.coefficients()[i];
    if (c == 0) continue;
    if (!first) out << '+';
    first = false;
    out << c.get_str() << "*z" << z.order() << '^' << i;
  }
  return first ? "0" : out.str();
}

CyclotomicInt specialize_cyclotomic(const LaurentPoly& p, int e) {
  if (!has_integer_coefficients(p))
    throw NonIntegerCoefficients("specialize_cyclotomic needs integer coefficients, got " +
                                 to_string(p));
  IntPoly folded(static_cast<std::size_t>(e));
  for (const auto& [k, c] : p.terms()) {
    int r = k % e;
    if (r < 0) r += e;
    folded[static_cast<std::size_t>(r)] += c.get_num();
  }
  return CyclotomicInt::from_polynomial(e, std::move(folded));
}

bool is_prime(std::int64_t n) {
  if (n < 2) return false;
  for (std::int64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

std::int64_t specialize_mod_prime(const LaurentPoly& p, std::int64_t q, std::int64_t ell) {
  if (!is_prime(ell)) throw PreconditionError("specialize_mod_prime: " + std::to_string(ell) +
                                              " is not prime");
  std::int64_t qr = ((q % ell) + ell) % ell;
  if (qr == 0)
    throw PrimeDividesQ(std::to_string(ell) + " divides q = " + std::to_string(q));
  if (!has_integer_coefficients(p))
    throw NonIntegerCoefficients("specialize_mod_prime needs integer coefficients, got " +
                                 to_string(p));
  const std::int64_t q_inv = pow_mod(qr, ell - 2, ell);
  std::int64_t sum = 0;
  for (const auto& [k, c] : p.terms()) {
    mpz_class cm;
    mpz_fdiv_r_ui(cm.get_mpz_t(), c.get_num_mpz_t(), static_cast<unsigned long>(ell));
    std::int64_t term = cm.get_si();
    term = term * (k >= 0 ? pow_mod(qr, k, ell) : pow_mod(q_inv, -static_cast<std::int64_t>(k), ell)) % ell;
    sum = (sum + term) % ell;
  }
  return sum;
}

}  // namespace cbs
