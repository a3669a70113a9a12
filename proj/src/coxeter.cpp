#include "cbs/coxeter.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <unordered_map>

#include "cbs/cyclotomic.hpp"

namespace cbs {

namespace {

using Perm = std::vector<std::uint32_t>;

struct PermHash {
  std::size_t operator()(const Perm& p) const noexcept {
    std::size_t h = 1469598103934665603ull;
    for (auto x : p) h = (h ^ x) * 1099511628211ull;
    return h;
  }
};

Perm swap_perm(std::size_t n, std::initializer_list<std::pair<std::uint32_t, std::uint32_t>> swaps) {
  Perm p(n);
  std::iota(p.begin(), p.end(), 0u);
  for (auto [a, b] : swaps) std::swap(p[a], p[b]);
  return p;
}

std::vector<Perm> type_a_generators(int rank) {
  std::vector<Perm> gens;
  const auto n = static_cast<std::size_t>(rank) + 1;
  for (std::uint32_t i = 0; i < static_cast<std::uint32_t>(rank); ++i)
    gens.push_back(swap_perm(n, {{i, i + 1}}));
  return gens;
}

// Signed permutations of {±1..±m}: point k-1 stands for +k, point m+k-1 for -k.
std::vector<Perm> type_b_generators(int rank) {
  const auto m = static_cast<std::uint32_t>(rank);
  std::vector<Perm> gens;
  gens.push_back(swap_perm(2 * m, {{0, m}}));
  for (std::uint32_t i = 1; i < m; ++i)
    gens.push_back(swap_perm(2 * m, {{i - 1, i}, {m + i - 1, m + i}}));
  return gens;
}

// Dihedral group of order 12 acting on the vertices of a hexagon.
std::vector<Perm> type_g2_generators() {
  Perm a(6), b(6);
  for (std::uint32_t i = 0; i < 6; ++i) {
    a[i] = (6 - i) % 6;
    b[i] = (7 - i) % 6;
  }
  return {a, b};
}

// Permutation action of the simple reflections on the root system of the
// geometric representation, with 2cos(pi/m) realized exactly in Z[zeta_M].
std::vector<Perm> root_system_generators(const Eigen::MatrixXi& m, std::size_t cap) {
  const int r = static_cast<int>(m.rows());
  int big = 2;
  for (int s = 0; s < r; ++s)
    for (int t = 0; t < r; ++t)
      if (s != t) big = std::lcm(big, 2 * m(s, t));

  std::vector<std::vector<CyclotomicInt>> c(r, std::vector<CyclotomicInt>(r, CyclotomicInt(big)));
  for (int s = 0; s < r; ++s)
    for (int t = 0; t < r; ++t)
      if (s != t && m(s, t) > 2) {
        const long k = big / (2 * m(s, t));
        c[s][t] = CyclotomicInt::zeta_power(big, k) + CyclotomicInt::zeta_power(big, -k);
      }

  using Root = std::vector<CyclotomicInt>;
  auto key = [](const Root& v) {
    std::string out;
    for (const auto& x : v) {
      for (const auto& co : x.coefficients()) out += co.get_str() + ',';
      out += ';';
    }
    return out;
  };
  auto reflect = [&](const Root& v, int s) {
    Root w = v;
    CyclotomicInt ns = -v[s];
    for (int t = 0; t < r; ++t)
      if (t != s) ns += c[s][t] * v[t];
    w[s] = ns;
    return w;
  };

  std::vector<Root> roots;
  std::unordered_map<std::string, std::uint32_t> index;
  for (int s = 0; s < r; ++s) {
    Root v(r, CyclotomicInt(big));
    v[s] = CyclotomicInt::integer(big, 1);
    index.emplace(key(v), static_cast<std::uint32_t>(roots.size()));
    roots.push_back(std::move(v));
  }
  std::vector<Perm> gens(r);
  for (std::size_t i = 0; i < roots.size(); ++i) {
    for (int s = 0; s < r; ++s) {
      Root w = reflect(roots[i], s);
      auto [it, inserted] = index.try_emplace(key(w), static_cast<std::uint32_t>(roots.size()));
      if (inserted) {
        if (roots.size() >= cap) throw GroupTooLarge("root system exceeds the group-order cap");
        roots.push_back(std::move(w));
      }
    }
  }
  for (int s = 0; s < r; ++s) {
    gens[s].resize(roots.size());
    for (std::size_t i = 0; i < roots.size(); ++i) gens[s][i] = index.at(key(reflect(roots[i], s)));
  }
  return gens;
}

}  // namespace

std::string to_string(CoxeterType t) {
  switch (t) {
    case CoxeterType::A: return "A";
    case CoxeterType::B: return "B";
    case CoxeterType::G2: return "G2";
    case CoxeterType::Custom: return "custom";
  }
  return "custom";
}

CoxeterType parse_coxeter_type(std::string_view name) {
  std::string n(name);
  std::transform(n.begin(), n.end(), n.begin(), [](unsigned char ch) { return std::tolower(ch); });
  if (n == "a") return CoxeterType::A;
  if (n == "b") return CoxeterType::B;
  if (n == "g2" || n == "g") return CoxeterType::G2;
  if (n == "custom") return CoxeterType::Custom;
  throw UnsupportedType("unknown Coxeter type '" + std::string(name) + "'");
}

Eigen::MatrixXi coxeter_matrix_of(CoxeterType type, int rank) {
  if (rank < 1) throw UnsupportedType("rank must be positive");
  Eigen::MatrixXi m = Eigen::MatrixXi::Constant(rank, rank, 2);
  m.diagonal().setOnes();
  switch (type) {
    case CoxeterType::A:
      for (int i = 0; i + 1 < rank; ++i) m(i, i + 1) = m(i + 1, i) = 3;
      break;
    case CoxeterType::B:
      for (int i = 0; i + 1 < rank; ++i) m(i, i + 1) = m(i + 1, i) = i == 0 ? 4 : 3;
      break;
    case CoxeterType::G2:
      if (rank != 2) throw UnsupportedType("G2 has rank 2");
      m(0, 1) = m(1, 0) = 6;
      break;
    case CoxeterType::Custom:
      throw UnsupportedType("custom types take an explicit Coxeter matrix");
  }
  return m;
}

std::vector<int> b_weights(int m, int b, int a) {
  if (m < 1) throw PreconditionError("B_m needs m >= 1");
  std::vector<int> w(static_cast<std::size_t>(m), a);
  w[0] = b;
  return w;
}

std::vector<int> unitary_weights(int m, int s) {
  if (s != 0 && s != 1) throw PreconditionError("unitary weights need s in {0,1}");
  return b_weights(m, 2 * s + 1, 2);
}

void CoxeterDatum::validate(std::size_t cap) const {
  if (rank_ < 1) throw UnsupportedType("rank must be positive");
  if (static_cast<int>(weights_.size()) != rank_)
    throw InvalidWeights("expected " + std::to_string(rank_) + " weights, got " +
                         std::to_string(weights_.size()));
  if (matrix_.rows() != rank_ || matrix_.cols() != rank_)
    throw UnsupportedType("Coxeter matrix must be rank x rank");
  for (int s = 0; s < rank_; ++s) {
    if (weights_[s] < 0) throw InvalidWeights("weights must be nonnegative");
    for (int t = 0; t < rank_; ++t) {
      const int mst = matrix_(s, t);
      if (s == t ? mst != 1 : (mst < 2 || mst != matrix_(t, s)))
        throw UnsupportedType("not a Coxeter matrix (entry " + std::to_string(s) + "," +
                              std::to_string(t) + ")");
      if (s != t && mst % 2 == 1 && weights_[s] != weights_[t])
        throw InvalidWeights("generators s" + std::to_string(s + 1) + " and s" +
                             std::to_string(t + 1) + " are joined by an odd bond (m=" +
                             std::to_string(mst) + ") but have weights " +
                             std::to_string(weights_[s]) + " != " + std::to_string(weights_[t]));
    }
  }
  if (cap == 0) throw GroupTooLarge("group-order cap is zero");
}

std::shared_ptr<const CoxeterDatum> CoxeterDatum::build(CoxeterType type, int rank,
                                                        std::vector<int> weights,
                                                        std::size_t cap) {
  if (type == CoxeterType::Custom)
    throw UnsupportedType("custom types take an explicit Coxeter matrix");
  std::shared_ptr<CoxeterDatum> d(new CoxeterDatum());
  d->type_ = type;
  d->rank_ = rank;
  d->matrix_ = coxeter_matrix_of(type, rank);
  d->weights_ = std::move(weights);
  d->validate(cap);
  switch (type) {
    case CoxeterType::A: d->enumerate(type_a_generators(rank), cap); break;
    case CoxeterType::B: d->enumerate(type_b_generators(rank), cap); break;
    case CoxeterType::G2: d->enumerate(type_g2_generators(), cap); break;
    case CoxeterType::Custom: break;
  }
  return d;
}

std::shared_ptr<const CoxeterDatum> CoxeterDatum::custom(const Eigen::MatrixXi& coxeter_matrix,
                                                         std::vector<int> weights,
                                                         std::size_t cap) {
  std::shared_ptr<CoxeterDatum> d(new CoxeterDatum());
  d->type_ = CoxeterType::Custom;
  d->rank_ = static_cast<int>(coxeter_matrix.rows());
  d->matrix_ = coxeter_matrix;
  d->weights_ = std::move(weights);
  d->validate(cap);
  d->enumerate(root_system_generators(coxeter_matrix, cap), cap);
  return d;
}

void CoxeterDatum::enumerate(const std::vector<Perm>& gens, std::size_t cap) {
  const std::size_t r = gens.size();
  const std::size_t points = gens.front().size();
  std::vector<Perm> perms;
  std::unordered_map<Perm, std::uint32_t, PermHash> index;

  Perm id(points);
  std::iota(id.begin(), id.end(), 0u);
  index.emplace(id, 0);
  perms.push_back(std::move(id));
  length_ = {0};
  weight_ = {0};
  parent_ = {0};
  last_letter_ = {-1};

  // Breadth-first in ShortLex order: each element is first reached through its
  // lexicographically smallest reduced word.
  for (std::size_t i = 0; i < perms.size(); ++i) {
    for (std::size_t s = 0; s < r; ++s) {
      Perm ws(points);
      for (std::size_t p = 0; p < points; ++p) ws[p] = perms[i][gens[s][p]];
      auto [it, inserted] = index.try_emplace(std::move(ws), static_cast<std::uint32_t>(perms.size()));
      if (!inserted) continue;
      if (perms.size() >= cap)
        throw GroupTooLarge("group order exceeds cap " + std::to_string(cap));
      perms.push_back(it->first);
      length_.push_back(length_[i] + 1);
      weight_.push_back(weight_[i] + weights_[s]);
      parent_.push_back(static_cast<std::uint32_t>(i));
      last_letter_.push_back(static_cast<int>(s));
    }
  }

  const std::size_t n = perms.size();
  right_.assign(n * r, 0);
  left_.assign(n * r, 0);
  inverse_.assign(n, 0);
  Perm scratch(points);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t s = 0; s < r; ++s) {
      for (std::size_t p = 0; p < points; ++p) scratch[p] = perms[i][gens[s][p]];
      right_[i * r + s] = index.at(scratch);
      for (std::size_t p = 0; p < points; ++p) scratch[p] = gens[s][perms[i][p]];
      left_[i * r + s] = index.at(scratch);
    }
    for (std::size_t p = 0; p < points; ++p) scratch[perms[i][p]] = static_cast<std::uint32_t>(p);
    inverse_[i] = index.at(scratch);
  }
}

void CoxeterDatum::check(GroupElement x) const {
  if (x.index >= order())
    throw DatumMismatch("element index " + std::to_string(x.index) + " out of range for group of order " +
                        std::to_string(order()));
}

GroupElement CoxeterDatum::generator(int s) const {
  if (s < 0 || s >= rank_) throw PreconditionError("no generator s" + std::to_string(s + 1));
  return right_multiply(identity(), s);
}

std::vector<GroupElement> CoxeterDatum::elements() const {
  std::vector<GroupElement> out(order());
  for (std::uint32_t i = 0; i < out.size(); ++i) out[i].index = i;
  return out;
}

GroupElement CoxeterDatum::right_multiply(GroupElement w, int s) const {
  check(w);
  return {right_[w.index * static_cast<std::size_t>(rank_) + static_cast<std::size_t>(s)]};
}

GroupElement CoxeterDatum::left_multiply(int s, GroupElement w) const {
  check(w);
  return {left_[w.index * static_cast<std::size_t>(rank_) + static_cast<std::size_t>(s)]};
}

GroupElement CoxeterDatum::multiply(GroupElement x, GroupElement y) const {
  check(x);
  for (int s : reduced_word(y)) x = right_multiply(x, s);
  return x;
}

GroupElement CoxeterDatum::inverse(GroupElement x) const {
  check(x);
  return {inverse_[x.index]};
}

int CoxeterDatum::length(GroupElement x) const {
  check(x);
  return length_[x.index];
}

int CoxeterDatum::weight(GroupElement x) const {
  check(x);
  return weight_[x.index];
}

Word CoxeterDatum::reduced_word(GroupElement x) const {
  check(x);
  Word w;
  for (std::uint32_t i = x.index; i != 0; i = parent_[i]) w.push_back(last_letter_[i]);
  std::reverse(w.begin(), w.end());
  return w;
}

GroupElement CoxeterDatum::longest_element() const {
  return {static_cast<std::uint32_t>(order() - 1)};
}

GroupElement CoxeterDatum::from_word(const Word& word) const {
  GroupElement x = identity();
  for (int s : word) {
    if (s < 0 || s >= rank_) throw PreconditionError("no generator s" + std::to_string(s + 1));
    x = right_multiply(x, s);
  }
  return x;
}

std::string CoxeterDatum::format(GroupElement x) const {
  Word w = reduced_word(x);
  if (w.empty()) return "1";
  std::string out;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i) out += '.';
    out += 's' + std::to_string(w[i] + 1);
  }
  return out;
}

GroupElement CoxeterDatum::parse_element(std::string_view text) const {
  if (text == "1") return identity();
  Word w;
  std::string t(text);
  std::istringstream in(t);
  std::string tok;
  while (std::getline(in, tok, '.')) {
    if (tok.size() < 2 || tok[0] != 's') throw ParseError("bad generator token '" + tok + "'");
    int s = 0;
    try {
      s = std::stoi(tok.substr(1)) - 1;
    } catch (const std::exception&) {
      throw ParseError("bad generator token '" + tok + "'");
    }
    if (s < 0 || s >= rank_) throw ParseError("generator out of range: '" + tok + "'");
    w.push_back(s);
  }
  if (w.empty()) throw ParseError("empty word");
  return from_word(w);
}

std::string CoxeterDatum::fingerprint() const {
  std::ostringstream out;
  out << "type=" << to_string(type_) << ";rank=" << rank_ << ";weights=";
  for (std::size_t i = 0; i < weights_.size(); ++i) out << (i ? "," : "") << weights_[i];
  out << ";matrix=";
  for (int i = 0; i < matrix_.rows(); ++i)
    for (int j = 0; j < matrix_.cols(); ++j) out << (i || j ? "," : "") << matrix_(i, j);
  return out.str();
}

bool operator==(const CoxeterDatum& a, const CoxeterDatum& b) {
  return a.type_ == b.type_ && a.weights_ == b.weights_ && a.matrix_ == b.matrix_;
}

}  // namespace cbs
