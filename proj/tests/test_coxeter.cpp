#include <doctest.h>

#include <algorithm>
#include <map>
#include <random>

#include "cbs/coxeter.hpp"
#include "cbs/laurent.hpp"

using namespace cbs;

namespace {

LaurentPoly poincare(const CoxeterDatum& d) {
  LaurentPoly p;
  for (GroupElement w : d.elements()) p += LaurentPoly::u(d.weight(w));
  return p;
}

// [n]_x = 1 + x + ... + x^(n-1) with x = u^step.
LaurentPoly quantum(int n, int step) {
  LaurentPoly p;
  for (int i = 0; i < n; ++i) p += LaurentPoly::u(i * step);
  return p;
}

LaurentPoly poincare_a(int rank) {
  LaurentPoly p = 1;
  for (int i = 2; i <= rank + 1; ++i) p *= quantum(i, 1);
  return p;
}

// Weighted B_m with weights (b, a, ..., a).
LaurentPoly poincare_b(int m, int b, int a) {
  LaurentPoly p = 1;
  for (int i = 1; i <= m; ++i) p *= quantum(i, a) * (1 + LaurentPoly::u(b + (i - 1) * a));
  return p;
}

// Dihedral of order 2m with weights (la, lb): two alternating words per length 0 < k < m.
LaurentPoly poincare_dihedral(int m, int la, int lb) {
  auto wt = [&](int k, bool first_a) {
    const int starts = (k + 1) / 2, others = k / 2;
    return first_a ? starts * la + others * lb : starts * lb + others * la;
  };
  LaurentPoly p = 1;
  for (int k = 1; k < m; ++k) p += LaurentPoly::u(wt(k, true)) + LaurentPoly::u(wt(k, false));
  return p + LaurentPoly::u(wt(m, true));
}

Eigen::MatrixXi f4_matrix() {
  Eigen::MatrixXi m(4, 4);
  m << 1, 3, 2, 2, 3, 1, 4, 2, 2, 4, 1, 3, 2, 2, 3, 1;
  return m;
}

Eigen::MatrixXi h3_matrix() {
  Eigen::MatrixXi m(3, 3);
  m << 1, 5, 2, 5, 1, 3, 2, 3, 1;
  return m;
}

}  // namespace

TEST_CASE("build_datum examples") {
  const DatumPtr g2 = build_datum(CoxeterType::G2, 2, {3, 1});
  CHECK(g2->order() == 12);
  CHECK(build_datum(CoxeterType::B, 2, {1, 1})->order() == 8);
  CHECK_THROWS_AS(build_datum(CoxeterType::A, 2, {1, 2}), InvalidWeights);
  CHECK_THROWS_AS(build_datum(CoxeterType::A, 2, {1}), InvalidWeights);
  CHECK_THROWS_AS(build_datum(CoxeterType::A, 2, {1, -1}), InvalidWeights);
  CHECK_THROWS_AS(build_datum(CoxeterType::G2, 3, {1, 1, 1}), UnsupportedType);
  CHECK(build_datum(CoxeterType::B, 3, b_weights(3, 5, 2))->weights() == std::vector<int>{5, 2, 2});
  CHECK(unitary_weights(3, 1) == std::vector<int>{3, 2, 2});
  CHECK(unitary_weights(2, 0) == std::vector<int>{1, 2});
}

TEST_CASE("element counts") {
  CHECK(build_datum(CoxeterType::G2, 2, {1, 1})->order() == 12);
  CHECK(build_datum(CoxeterType::B, 3, {1, 1, 1})->order() == 48);
  CHECK(build_datum(CoxeterType::A, 3, {1, 1, 1})->order() == 24);
  CHECK(build_datum(CoxeterType::A, 1, {1})->order() == 2);
  CHECK(build_datum(CoxeterType::B, 1, {3})->order() == 2);
  CHECK(build_datum(CoxeterType::B, 5, {1, 1, 1, 1, 1})->order() == 3840);
  CHECK_THROWS_AS(build_datum(CoxeterType::A, 4, {1, 1, 1, 1}, 100), GroupTooLarge);
}

TEST_CASE("longest elements") {
  const DatumPtr g2 = build_datum(CoxeterType::G2, 2, {3, 1});
  CHECK(g2->weight(g2->longest_element()) == 12);
  CHECK(g2->length(g2->longest_element()) == 6);
  CHECK(g2->weight(g2->identity()) == 0);
  CHECK(g2->format(g2->longest_element()) == "s1.s2.s1.s2.s1.s2");
  const DatumPtr b2 = build_datum(CoxeterType::B, 2, {1, 1});
  CHECK(b2->length(b2->longest_element()) == 4);
  CHECK(build_datum(CoxeterType::A, 4, {1, 1, 1, 1})->length({119}) == 10);
  for (int m = 1; m <= 4; ++m)
    for (int s = 0; s <= 1; ++s) {
      const DatumPtr d = build_datum(CoxeterType::B, m, unitary_weights(m, s));
      const int n = 2 * m + s;
      CHECK(d->weight(d->longest_element()) == n * (n - 1) / 2);
      CHECK(d->length(d->longest_element()) == m * m);
    }
}

TEST_CASE("ShortLex enumeration order") {
  const DatumPtr a2 = build_datum(CoxeterType::A, 2, {1, 1});
  std::vector<std::string> words;
  for (GroupElement w : a2->elements()) words.push_back(a2->format(w));
  CHECK(words == std::vector<std::string>{"1", "s1", "s2", "s1.s2", "s2.s1", "s1.s2.s1"});
  for (const auto& d : {a2, build_datum(CoxeterType::B, 3, {2, 1, 1}), build_datum(CoxeterType::G2, 2, {3, 1})}) {
    Word prev;
    for (GroupElement w : d->elements()) {
      const Word word = d->reduced_word(w);
      CHECK(static_cast<int>(word.size()) == d->length(w));
      CHECK(d->from_word(word) == w);
      if (w.index > 0) CHECK((prev.size() < word.size() || (prev.size() == word.size() && prev < word)));
      prev = word;
    }
  }
}

TEST_CASE("element text round trip") {
  const DatumPtr b3 = build_datum(CoxeterType::B, 3, {1, 1, 1});
  for (GroupElement w : b3->elements()) CHECK(b3->parse_element(b3->format(w)) == w);
  CHECK(b3->parse_element("s1.s1") == b3->identity());
  CHECK_THROWS_AS(b3->parse_element("s4"), ParseError);
  CHECK_THROWS_AS(b3->parse_element("t1"), ParseError);
}

TEST_CASE("length and weight are subadditive, with matching equality cases") {
  std::vector<DatumPtr> data = {
      build_datum(CoxeterType::G2, 2, {3, 1}), build_datum(CoxeterType::B, 2, {1, 1}),
      build_datum(CoxeterType::B, 2, {3, 2}), build_datum(CoxeterType::A, 3, {1, 1, 1}),
      build_datum(CoxeterType::B, 3, {3, 2, 2}), build_datum(CoxeterType::A, 4, {2, 2, 2, 2}),
      CoxeterDatum::custom(h3_matrix(), {1, 1, 1})};
  for (const auto& d : data) {
    REQUIRE(d->order() <= 400);
    for (GroupElement x : d->elements())
      for (GroupElement y : d->elements()) {
        const GroupElement xy = d->multiply(x, y);
        const bool len_eq = d->length(xy) == d->length(x) + d->length(y);
        const bool wt_eq = d->weight(xy) == d->weight(x) + d->weight(y);
        REQUIRE(d->length(xy) <= d->length(x) + d->length(y));
        REQUIRE(d->weight(xy) <= d->weight(x) + d->weight(y));
        // Weights are positive here, so the two equality cases coincide.
        REQUIRE(len_eq == wt_eq);
      }
  }
}

TEST_CASE("inverse, multiplication and one-sided products") {
  const DatumPtr d = build_datum(CoxeterType::B, 3, {3, 2, 2});
  std::mt19937 rng(1);
  std::uniform_int_distribution<std::uint32_t> pick(0, static_cast<std::uint32_t>(d->order() - 1));
  for (GroupElement x : d->elements()) {
    CHECK(d->inverse(d->inverse(x)) == x);
    CHECK(d->length(d->inverse(x)) == d->length(x));
    CHECK(d->weight(d->inverse(x)) == d->weight(x));
    CHECK(d->multiply(x, d->inverse(x)) == d->identity());
    for (int s = 0; s < d->rank(); ++s) {
      CHECK(d->right_multiply(x, s) == d->multiply(x, d->generator(s)));
      CHECK(d->left_multiply(s, x) == d->multiply(d->generator(s), x));
    }
  }
  for (int i = 0; i < 300; ++i) {
    const GroupElement x{pick(rng)}, y{pick(rng)}, z{pick(rng)};
    CHECK(d->multiply(d->multiply(x, y), z) == d->multiply(x, d->multiply(y, z)));
    Word wx = d->reduced_word(x), wy = d->reduced_word(y);
    wx.insert(wx.end(), wy.begin(), wy.end());
    CHECK(d->from_word(wx) == d->multiply(x, y));
  }
}

TEST_CASE("Poincare polynomials") {
  CHECK(poincare(*build_datum(CoxeterType::G2, 2, {3, 1})) == poincare_dihedral(6, 3, 1));
  CHECK(poincare(*build_datum(CoxeterType::G2, 2, {1, 1})) == poincare_dihedral(6, 1, 1));
  CHECK(poincare(*build_datum(CoxeterType::B, 2, {1, 1})) == (1 + LaurentPoly::u()) * quantum(4, 1));
  for (int m = 1; m <= 4; ++m)
    for (auto [b, a] : {std::pair{1, 1}, {3, 2}, {1, 2}, {2, 1}})
      CHECK(poincare(*build_datum(CoxeterType::B, m, b_weights(m, b, a))) == poincare_b(m, b, a));
  for (int r = 1; r <= 5; ++r)
    CHECK(poincare(*build_datum(CoxeterType::A, r, std::vector<int>(r, 1))) == poincare_a(r));
}

TEST_CASE("custom data agree with the built-in types") {
  for (auto [type, rank, weights] : {std::tuple{CoxeterType::B, 3, std::vector<int>{3, 2, 2}},
                                     {CoxeterType::A, 3, {1, 1, 1}},
                                     {CoxeterType::G2, 2, {3, 1}}}) {
    const DatumPtr built = build_datum(type, rank, weights);
    const DatumPtr custom = CoxeterDatum::custom(coxeter_matrix_of(type, rank), weights);
    REQUIRE(custom->order() == built->order());
    for (std::uint32_t i = 0; i < built->order(); ++i) {
      REQUIRE(custom->reduced_word({i}) == built->reduced_word({i}));
      REQUIRE(custom->inverse({i}) == built->inverse({i}));
      for (int s = 0; s < rank; ++s) REQUIRE(custom->left_multiply(s, {i}) == built->left_multiply(s, {i}));
    }
    CHECK(custom->type() == CoxeterType::Custom);
    CHECK(!(*custom == *built));
  }
}

TEST_CASE("custom F4 and H3") {
  const DatumPtr f4 = CoxeterDatum::custom(f4_matrix(), {2, 2, 1, 1});
  CHECK(f4->order() == 1152);
  CHECK(f4->length(f4->longest_element()) == 24);
  CHECK(f4->weight(f4->longest_element()) == 36);
  const DatumPtr h3 = CoxeterDatum::custom(h3_matrix(), {1, 1, 1});
  CHECK(h3->order() == 120);
  CHECK(h3->length(h3->longest_element()) == 15);
  CHECK_THROWS_AS(CoxeterDatum::custom(f4_matrix(), {2, 1, 1, 1}), InvalidWeights);
}

TEST_CASE("invalid Coxeter matrices") {
  Eigen::MatrixXi m(2, 2);
  m << 1, 1, 1, 1;
  CHECK_THROWS_AS(CoxeterDatum::custom(m, {1, 1}), UnsupportedType);
  m << 1, 3, 4, 1;
  CHECK_THROWS_AS(CoxeterDatum::custom(m, {1, 1}), UnsupportedType);
  Eigen::MatrixXi affine(3, 3);
  affine << 1, 3, 3, 3, 1, 3, 3, 3, 1;
  CHECK_THROWS_AS(CoxeterDatum::custom(affine, {1, 1, 1}, 2000), GroupTooLarge);
}

TEST_CASE("fingerprint and equality") {
  const DatumPtr a = build_datum(CoxeterType::G2, 2, {3, 1});
  const DatumPtr b = build_datum(CoxeterType::G2, 2, {3, 1});
  const DatumPtr c = build_datum(CoxeterType::G2, 2, {1, 3});
  CHECK(*a == *b);
  CHECK(!(*a == *c));
  CHECK(a->fingerprint() == b->fingerprint());
  CHECK(a->fingerprint() != c->fingerprint());
  CHECK(parse_coxeter_type("g2") == CoxeterType::G2);
  CHECK(parse_coxeter_type("B") == CoxeterType::B);
  CHECK_THROWS_AS(parse_coxeter_type("E8"), UnsupportedType);
}
