// Acceptance runner: one timed PASS/FAIL line per criterion; exit 1 if any fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <map>
#include <random>
#include <set>
#include <sstream>

#include "cbs/basicsets.hpp"
#include "cbs/charshur.hpp"
#include "cbs/combinat.hpp"
#include "cbs/genericity.hpp"
#include "cbs/hecke.hpp"
#include "cbs/io.hpp"
#include "generators.hpp"

using namespace cbs;

namespace {

const std::filesystem::path data_dir = CBS_DATA_DIR;

// Thrown by expect(); carries the first failed check.
struct CheckFailed {
  std::string what;
};

void expect(bool ok, const std::string& what) {
  if (!ok) throw CheckFailed{what};
}

std::vector<std::string> sorted(std::vector<std::string> v) {
  std::sort(v.begin(), v.end());
  return v;
}

// ---------------------------------------------------------------- 1

std::string g2_a_invariants() {
  const auto rows = schur_table(builtin_g2_reps());
  const std::vector<std::pair<std::string, int>> expected = {{"ind", 0},  {"eps1", 1}, {"rho+", 3},
                                                             {"rho-", 3}, {"eps2", 7}, {"eps", 12}};
  expect(rows.size() == expected.size(), "six representations");
  std::ostringstream out;
  for (std::size_t i = 0; i < rows.size(); ++i) {
    expect(rows[i].name == expected[i].first, "name " + rows[i].name);
    expect(rows[i].a.a == expected[i].second, "a(" + rows[i].name + ") = " + std::to_string(rows[i].a.a));
    out << (i ? "," : "") << rows[i].a.a;
  }
  return "a = (" + out.str() + ")";
}

// ---------------------------------------------------------------- 2

std::string g2_basic_sets() {
  const std::map<int, std::vector<std::string>> printed = {{2, {"ind", "rho+", "rho-"}},
                                                           {3, {"ind", "eps1", "rho+", "rho-"}},
                                                           {6, {"ind", "eps1", "rho+"}},
                                                           {12, {"ind", "eps1", "rho+", "rho-", "eps2"}}};
  for (const auto& [e, set] : printed) {
    // The shipped data files are the printed matrices; they must agree with the built-in tables.
    const auto d = io::read_matrix_file(data_dir / ("g2_e" + std::to_string(e) + ".json"));
    expect(d == g2_decomposition_table(e), "data file for e=" + std::to_string(e));
    expect(canonical_basic_set(d).label_set(d) == sorted(set), "basic set for e=" + std::to_string(e));
  }
  const std::vector<std::string> all = {"eps", "eps1", "eps2", "ind", "rho+", "rho-"};
  for (int e : {5, 7, 13}) {
    const auto d = g2_decomposition_table(e);
    expect(d.entries() == IntMatrix::Identity(6, 6), "identity matrix for e=" + std::to_string(e));
    expect(canonical_basic_set(d).label_set(d) == all, "all six labels for e=" + std::to_string(e));
  }
  return "e in {2,3,6,12} as printed; e in {5,7,13} all six";
}

// ---------------------------------------------------------------- 3

std::string tau_identity() {
  const auto reps = builtin_g2_reps();
  const DatumPtr g2 = reps[0].datum;
  std::vector<Character> chars;
  std::vector<LaurentPoly> c;
  for (const auto& r : reps) {
    chars.emplace_back(r);
    c.push_back(schur_element(chars.back()));
  }
  LaurentPoly product = 1;
  for (const auto& x : c) product *= x;
  int elements = 0;
  for (GroupElement w : g2->elements()) {
    LaurentPoly rhs;
    for (std::size_t l = 0; l < reps.size(); ++l) {
      LaurentPoly others = 1;
      for (std::size_t k = 0; k < reps.size(); ++k)
        if (k != l) others *= c[k];
      rhs += chars[l][w] * others;
    }
    expect(tau(HeckeElement::basis(g2, w)) * product == rhs, "tau identity at " + g2->format(w));
    ++elements;
  }
  expect(elements == 12, "twelve elements");
  int pairs = 0;
  for (std::size_t l = 0; l < reps.size(); ++l)
    for (std::size_t k = 0; k < reps.size(); ++k) {
      const LaurentPoly p = character_pairing(chars[l], chars[k]);
      expect(l == k ? p == c[l] * chars[l].degree() : p.is_zero(), "orthogonality " + reps[l].name + "," + reps[k].name);
      ++pairs;
    }
  return std::to_string(elements) + " elements, " + std::to_string(pairs) + " pairs";
}

// ---------------------------------------------------------------- 4

HeckeElement random_element(const DatumPtr& d, std::mt19937& rng) {
  std::uniform_int_distribution<std::uint32_t> pick(0, static_cast<std::uint32_t>(d->order() - 1));
  std::uniform_int_distribution<int> coeff(-3, 3), exp(-2, 2), terms(1, 3);
  HeckeElement h(d);
  for (int i = terms(rng); i > 0; --i) h.add_term({pick(rng)}, LaurentPoly::monomial(coeff(rng), exp(rng)));
  return h;
}

std::string hecke_axioms() {
  const std::vector<DatumPtr> data = {build_datum(CoxeterType::G2, 2, {3, 1}), build_datum(CoxeterType::B, 2, {1, 1}),
                                      build_datum(CoxeterType::B, 2, {3, 2})};
  std::mt19937 rng(42);
  for (const DatumPtr& d : data) {
    const HeckeElement one = HeckeElement::basis(d, d->identity());
    for (int s = 0; s < d->rank(); ++s) {
      const HeckeElement ts = HeckeElement::basis(d, d->generator(s));
      const LaurentPoly q = LaurentPoly::u(d->weights()[static_cast<std::size_t>(s)]);
      expect(((ts - q * one) * (ts + one)).is_zero(), "quadratic relation");
      for (int t = s + 1; t < d->rank(); ++t) {
        const HeckeElement tt = HeckeElement::basis(d, d->generator(t));
        HeckeElement left = one, right = one;
        for (int k = 0; k < d->coxeter_matrix()(s, t); ++k) {
          left = left * (k % 2 ? tt : ts);
          right = right * (k % 2 ? ts : tt);
        }
        expect(left == right, "braid relation");
      }
    }
    for (int i = 0; i < 500; ++i) {
      const HeckeElement x = random_element(d, rng), y = random_element(d, rng), z = random_element(d, rng);
      expect((x * y) * z == x * (y * z), "associativity");
    }
    for (GroupElement w : d->elements())
      for (GroupElement v : d->elements()) {
        const LaurentPoly t = tau_bilinear(d, w, v);
        expect(v == d->inverse(w) ? t == LaurentPoly::u(d->weight(w)) : t.is_zero(),
               "bilinear form at " + d->format(w) + ", " + d->format(v));
      }
  }
  return "G2(3,1), B2(1,1), B2(3,2); 500 triples each";
}

// ---------------------------------------------------------------- 5

// Partial sums, independent of the library's dominance order.
bool dominance_oracle(const Partition& a, const Partition& b) {
  int sa = 0, sb = 0;
  for (std::size_t i = 0; i < static_cast<std::size_t>(std::max(a.length(), b.length())); ++i) {
    sa += a[i];
    sb += b[i];
    if (sa > sb) return false;
  }
  return true;
}

int n_oracle(const Partition& p) {
  int n = 0;
  for (int i = 0; i < p.length(); ++i) n += i * p[static_cast<std::size_t>(i)];
  return n;
}

std::string dominance_monotonicity() {
  long pairs = 0;
  for (int n = 1; n <= 10; ++n) {
    const auto parts = list_partitions(n);
    for (const Partition& a : parts)
      for (const Partition& b : parts) {
        expect(dominates(a, b) == dominance_oracle(a, b), "dominance " + to_string(a) + " vs " + to_string(b));
        if (!dominance_oracle(a, b)) continue;
        ++pairs;
        expect(n_invariant(a) == n_oracle(a), "n(" + to_string(a) + ")");
        expect(n_invariant(b) <= n_invariant(a), "n monotone");
        expect((n_invariant(b) == n_invariant(a)) == (a == b), "equality case");
      }
  }
  return std::to_string(pairs) + " comparable pairs";
}

// ---------------------------------------------------------------- 6

std::string embedding() {
  for (int m = 0; m <= 5; ++m)
    for (int s = 0; s <= 1; ++s) {
      const Partition core = s ? Partition({1}) : Partition();
      std::set<Partition> image;
      for (const Bipartition& b : list_bipartitions(m)) {
        const Partition l = embed_bipartition(b, s);
        expect(l.size() == 2 * m + s, "size");
        expect(two_core(l) == core, "2-core of " + to_string(l));
        expect(extract_bipartition(l, s) == b, "left inverse at " + to_string(b));
        image.insert(l);
      }
      std::set<Partition> target;
      for (const Partition& l : list_partitions(2 * m + s))
        if (two_core(l) == core) target.insert(l);
      expect(image == target, "onto, m=" + std::to_string(m));
      expect(image.size() == list_bipartitions(m).size(), "injective, m=" + std::to_string(m));
      if (m == 0) continue;
      const int n = 2 * m + s;
      const Bipartition index{row_partition(m), {}}, sign{{}, column_partition(m)};
      expect(embed_bipartition(index, s) == row_partition(n), "index anchor");
      expect(embed_bipartition(sign, s) == column_partition(n), "sign anchor");
      expect(a_invariant_unitary(index, s) == 0, "a(index)");
      const DatumPtr d = build_datum(CoxeterType::B, m, unitary_weights(m, s));
      expect(a_invariant_unitary(sign, s) == n * (n - 1) / 2, "a(sign) = n(n-1)/2");
      expect(d->weight(d->longest_element()) == n * (n - 1) / 2, "weight(w0), m=" + std::to_string(m));
    }
  return "m <= 5, s in {0,1}";
}

// ---------------------------------------------------------------- 7

std::string genericity() {
  const SweepSummary s = sweep_genericity(50, 50, 3);
  expect(s.failures.empty(), s.failures.empty() ? "" : s.failures.front());
  expect(s.cases > 0, "nonempty sweep");
  return std::to_string(s.cases) + " cases, " + std::to_string(s.skipped) + " outside the hypotheses";
}

// ---------------------------------------------------------------- 8

std::string factorization() {
  std::mt19937 rng(2024);
  for (int i = 0; i < 200; ++i) {
    const auto inst = testgen::random_factorization(rng);
    const BetaReport r = beta_factorization(inst.full, inst.root, inst.dprime);
    expect(r.sets_equal, "instance " + std::to_string(i) + ": basic sets differ");
    expect(r.full.label_set(inst.full) == r.root.label_set(inst.root), "instance " + std::to_string(i));
    for (std::size_t mu = 0; mu < r.beta.size(); ++mu)
      expect(r.root.iota[static_cast<std::size_t>(r.beta[mu])] == r.full.iota[mu],
             "instance " + std::to_string(i) + ": beta inconsistent");
  }
  return "200 instances";
}

// ---------------------------------------------------------------- 9

// e-regular: no part repeated e or more times; counted from the oracle above.
int count_regular(int n, int e) {
  int c = 0;
  for (const Partition& p : list_partitions(n)) {
    bool ok = true;
    for (std::size_t i = 0; i < static_cast<std::size_t>(p.length()) && ok; ++i) {
      int run = 0;
      for (std::size_t j = i; j < static_cast<std::size_t>(p.length()) && p[j] == p[i]; ++j) ++run;
      ok = run < e;
    }
    c += ok;
  }
  return c;
}

std::string catalog_counts() {
  int checks = 0;
  for (int n = 2; n <= 12; ++n)
    for (int e = 2; e <= 5; ++e) {
      const auto r = basic_set_catalog({CoxeterType::A, n - 1, std::vector<int>(static_cast<std::size_t>(n - 1), 1), e});
      expect(std::holds_alternative<std::vector<std::string>>(r), "type A catalogued");
      expect(static_cast<int>(std::get<std::vector<std::string>>(r).size()) == count_regular(n, e),
             "A, n=" + std::to_string(n) + ", e=" + std::to_string(e));
      ++checks;
    }
  // Type B unitary: the catalog applies to odd e and to e divisible by 4.
  for (int m = 1; m <= 6; ++m)
    for (int s = 0; s <= 1; ++s)
      for (int e = 3; e <= 12; ++e) {
        const auto r = basic_set_catalog({CoxeterType::B, m, unitary_weights(m, s), e});
        const bool applicable = e % 2 == 1 || e % 4 == 0;
        expect(std::holds_alternative<std::vector<std::string>>(r) == applicable,
               "B applicability, e=" + std::to_string(e));
        if (!applicable) continue;
        int brute = 0;
        for (int k = 0; k <= m; ++k) brute += count_regular(k, e) * count_regular(m - k, e);
        expect(static_cast<int>(std::get<std::vector<std::string>>(r).size()) == brute,
               "B, m=" + std::to_string(m) + ", e=" + std::to_string(e));
        ++checks;
      }
  return std::to_string(checks) + " counts";
}

// ---------------------------------------------------------------- 10

std::string triangularity() {
  std::mt19937 rng(99);
  for (int i = 0; i < 100; ++i) {
    const int n = std::uniform_int_distribution<int>(2, 7)(rng);
    const auto parts = list_partitions(n);
    const IntMatrix m = testgen::random_dominance_unitriangular(parts, rng);
    const auto ok = verify_unitriangular(testgen::partition_matrix(parts, m));
    expect(ok.ok() && ok.consistent, "accepts valid instance " + std::to_string(i));
    const auto [row, col] = testgen::random_forbidden_entry(parts, rng);
    IntMatrix bad = m;
    bad(row, col) = 1 + std::uniform_int_distribution<int>(0, 2)(rng);
    const auto rb = verify_unitriangular(testgen::partition_matrix(parts, bad));
    expect(!rb.ok(), "rejects seeded violation " + std::to_string(i));
    expect(std::any_of(rb.violations.begin(), rb.violations.end(),
                       [&](const EntryViolation& v) { return v.row == row && v.col == col && v.value == bad(row, col); }),
           "violation coordinates " + std::to_string(i));
  }
  for (int i = 0; i < 100; ++i) {
    const int n = std::uniform_int_distribution<int>(2, 7)(rng);
    const auto parts = list_partitions(n);
    const IntMatrix m = testgen::random_dominance_unitriangular(parts, rng);
    const auto d = testgen::gu_style_matrix(parts, m, true);
    const ShapeReport r = verify_conjecture_shape(d);
    expect(r.ok, "shape holds on instance " + std::to_string(i));
    // One block per value of n(lambda), in increasing order.
    std::set<int> nvals;
    for (const Partition& p : parts) nvals.insert(n_invariant(p));
    expect(r.blocks.size() == nvals.size(), "block count " + std::to_string(i));
    for (std::size_t b = 1; b < r.blocks.size(); ++b)
      expect(*d.rows()[static_cast<std::size_t>(r.blocks[b - 1][0])].d <
                 *d.rows()[static_cast<std::size_t>(r.blocks[b][0])].d,
             "block order " + std::to_string(i));
    for (const auto& block : r.blocks)
      for (auto x : block)
        for (auto y : block) expect(m(x, y) == (x == y), "diagonal blocks are identities " + std::to_string(i));
  }
  const auto gu = io::read_matrix_file(data_dir / "gu4_unitriangular.json");
  expect(verify_unitriangular(gu).ok() && verify_conjecture_shape(gu).ok, "gu4 data file");
  return "100 + 100 instances";
}

struct Criterion {
  int id;
  std::string name;
  double limit_s;
  std::function<std::string()> run;
};

}  // namespace

int main() {
  const std::vector<Criterion> criteria = {
      {1, "G2 a-invariants", 5, g2_a_invariants},
      {2, "G2 canonical basic sets", 1, g2_basic_sets},
      {3, "tau identity and orthogonality", 10, tau_identity},
      {4, "Hecke axioms", 30, hecke_axioms},
      {5, "dominance monotonicity", 10, dominance_monotonicity},
      {6, "embedding bijectivity and anchors", 10, embedding},
      {7, "genericity sweep", 30, genericity},
      {8, "factorization property suite", 30, factorization},
      {9, "catalog counts", 10, catalog_counts},
      {10, "triangularity checkers", 10, triangularity},
  };
  int failed = 0;
  for (const Criterion& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    std::string detail;
    bool ok = true;
    try {
      detail = c.run();
    } catch (const CheckFailed& e) {
      ok = false;
      detail = "check failed: " + e.what;
    } catch (const std::exception& e) {
      ok = false;
      detail = std::string("exception: ") + e.what();
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (ok && secs > c.limit_s) {
      ok = false;
      detail += "; over time limit";
    }
    failed += !ok;
    std::printf("%s  %2d  %-36s %7.3fs / %4.0fs  %s\n", ok ? "PASS" : "FAIL", c.id, c.name.c_str(), secs, c.limit_s,
                detail.c_str());
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
  return failed ? 1 : 0;
}
