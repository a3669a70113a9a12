#include "cbs/charshur.hpp"

namespace cbs {

namespace {

PolyMatrix scalar(const LaurentPoly& x) {
  PolyMatrix m(1, 1);
  m(0, 0) = x;
  return m;
}

PolyMatrix identity(int n) {
  PolyMatrix m = PolyMatrix::Constant(n, n, LaurentPoly{});
  for (int i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

bool is_zero(const PolyMatrix& m) {
  for (Eigen::Index i = 0; i < m.size(); ++i)
    if (!m.data()[i].is_zero()) return false;
  return true;
}

PolyMatrix alternating_product(const PolyMatrix& first, const PolyMatrix& second, int factors) {
  PolyMatrix p = first;
  for (int k = 1; k < factors; ++k) p = (p * (k % 2 ? second : first)).eval();
  return p;
}

void require_valid(const MatrixRep& rep) {
  if (RelationCheck c = check_representation(rep); !c)
    throw NotARepresentation(rep.name + ": " + c.violated);
}

}  // namespace

DatumPtr g2_unequal_datum() { return build_datum(CoxeterType::G2, 2, {3, 1}); }

std::vector<MatrixRep> builtin_g2_reps(const DatumPtr& g2) {
  if (g2->type() != CoxeterType::G2 || g2->weights() != std::vector<int>{3, 1})
    throw UnsupportedType("the built-in G2 representations need G2 with weights (3,1)");
  const LaurentPoly u = LaurentPoly::u();
  const LaurentPoly u3 = LaurentPoly::u(3);

  auto rho = [&](int delta) {
    PolyMatrix ta(2, 2), tb(2, 2);
    ta << -1, 0, u * u + delta * u + 1, u3;
    tb << u, u, 0, -1;
    return MatrixRep{delta > 0 ? "rho+" : "rho-", g2, {ta, tb}};
  };
  return {
      MatrixRep{"ind", g2, {scalar(u3), scalar(u)}},
      MatrixRep{"eps1", g2, {scalar(u3), scalar(-1)}},
      rho(+1),
      rho(-1),
      MatrixRep{"eps2", g2, {scalar(-1), scalar(u)}},
      MatrixRep{"eps", g2, {scalar(-1), scalar(-1)}},
  };
}

std::vector<MatrixRep> builtin_g2_reps() { return builtin_g2_reps(g2_unequal_datum()); }

std::vector<MatrixRep> one_dim_reps(const DatumPtr& datum) {
  MatrixRep index{"index", datum, {}}, sign{"sign", datum, {}};
  for (int w : datum->weights()) {
    index.generator_images.push_back(scalar(LaurentPoly::u(w)));
    sign.generator_images.push_back(scalar(-1));
  }
  return {index, sign};
}

RelationCheck check_representation(const MatrixRep& rep) {
  const CoxeterDatum& d = *rep.datum;
  if (static_cast<int>(rep.generator_images.size()) != d.rank())
    return {false, "expected " + std::to_string(d.rank()) + " generator images"};
  const int n = rep.dimension();
  for (const auto& m : rep.generator_images)
    if (m.rows() != n || m.cols() != n || n == 0) return {false, "generator images must be square of equal size"};

  const PolyMatrix one = identity(n);
  for (int s = 0; s < d.rank(); ++s) {
    const PolyMatrix& m = rep.generator_images[static_cast<std::size_t>(s)];
    const LaurentPoly q = LaurentPoly::u(d.weights()[static_cast<std::size_t>(s)]);
    if (!is_zero(((m - q * one) * (m + one)).eval()))
      return {false, "quadratic relation fails for s" + std::to_string(s + 1)};
  }
  for (int s = 0; s < d.rank(); ++s)
    for (int t = s + 1; t < d.rank(); ++t) {
      const int m = d.coxeter_matrix()(s, t);
      const auto& ms = rep.generator_images[static_cast<std::size_t>(s)];
      const auto& mt = rep.generator_images[static_cast<std::size_t>(t)];
      if (alternating_product(ms, mt, m) != alternating_product(mt, ms, m))
        return {false, "braid relation of length " + std::to_string(m) + " fails for s" +
                           std::to_string(s + 1) + ", s" + std::to_string(t + 1)};
    }
  return {};
}

PolyMatrix rep_matrix(const MatrixRep& rep, GroupElement w) {
  require_valid(rep);
  PolyMatrix m = identity(rep.dimension());
  for (int s : rep.datum->reduced_word(w))
    m = (m * rep.generator_images[static_cast<std::size_t>(s)]).eval();
  return m;
}

LaurentPoly rep_trace(const MatrixRep& rep, GroupElement w) { return rep_matrix(rep, w).trace(); }

Character::Character(const MatrixRep& rep) : datum_(rep.datum), degree_(rep.dimension()) {
  require_valid(rep);
  const CoxeterDatum& d = *datum_;
  // Elements come in ShortLex order, so w = w' s with w' earlier in the list.
  std::vector<PolyMatrix> images;
  images.reserve(d.order());
  images.push_back(identity(degree_));
  values_.push_back(images.front().trace());
  for (std::uint32_t i = 1; i < d.order(); ++i) {
    const Word word = d.reduced_word({i});
    const GroupElement prefix = d.from_word(Word(word.begin(), word.end() - 1));
    images.push_back(images[prefix.index] * rep.generator_images[static_cast<std::size_t>(word.back())]);
    values_.push_back(images.back().trace());
  }
}

LaurentPoly character_pairing(const Character& chi, const Character& psi) {
  if (!(*chi.datum() == *psi.datum())) throw DatumMismatch("characters over different data");
  const CoxeterDatum& d = *chi.datum();
  LaurentPoly sum;
  for (GroupElement w : d.elements())
    sum += (chi[w] * psi[d.inverse(w)]).shifted(-d.weight(w));
  return sum;
}

LaurentPoly schur_element(const Character& chi) {
  LaurentPoly c = character_pairing(chi, chi).divided_by(mpq_class(chi.degree()));
  if (!has_integer_coefficients(c))
    throw NonIntegralSchurElement("Schur element " + to_string(c) +
                                  " has non-integer coefficients; is the representation irreducible?");
  return c;
}

LaurentPoly schur_element(const MatrixRep& rep) { return schur_element(Character(rep)); }

AInvariant a_invariant(const LaurentPoly& c) {
  if (c.is_zero()) throw ZeroPolynomial("a-invariant of zero");
  if (!has_integer_coefficients(c)) throw NonIntegerCoefficients("a-invariant needs integer coefficients");
  const int v = u_valuation(c);
  if (v > 0) throw NegativeAInvariant("valuation " + std::to_string(v) + " gives a < 0");
  return {-v, leading_coefficient_at_valuation(c).get_num()};
}

std::vector<SchurRow> schur_table(const std::vector<MatrixRep>& reps) {
  std::vector<SchurRow> rows;
  for (const auto& rep : reps) {
    LaurentPoly c = schur_element(rep);
    AInvariant a = a_invariant(c);
    rows.push_back({rep.name, rep.dimension(), std::move(c), std::move(a)});
  }
  return rows;
}

}  // namespace cbs
