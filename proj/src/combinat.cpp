#include "cbs/combinat.hpp"

#include <algorithm>
#include <functional>
#include <map>

namespace cbs {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] < 1) throw PreconditionError("partition parts must be positive");
    if (i && parts_[i] > parts_[i - 1]) throw PreconditionError("partition parts must be weakly decreasing");
    size_ += parts_[i];
  }
}

Partition row_partition(int n) { return n == 0 ? Partition{} : Partition({n}); }
Partition column_partition(int n) { return Partition(std::vector<int>(static_cast<std::size_t>(n), 1)); }

int n_invariant(const Partition& lambda) {
  int sum = 0;
  for (int i = 0; i < lambda.length(); ++i) sum += i * lambda.parts()[static_cast<std::size_t>(i)];
  return sum;
}

bool dominates(const Partition& lambda, const Partition& mu) {
  if (lambda.size() != mu.size())
    throw SizeMismatch("dominance needs equal sizes, got " + std::to_string(lambda.size()) + " and " +
                       std::to_string(mu.size()));
  int a = 0, b = 0;
  const auto len = static_cast<std::size_t>(std::max(lambda.length(), mu.length()));
  for (std::size_t i = 0; i < len; ++i) {
    a += lambda[i];
    b += mu[i];
    if (a > b) return false;
  }
  return true;
}

bool is_e_regular(const Partition& lambda, int e) {
  if (e < 2) throw PreconditionError("e-regularity needs e >= 2");
  const auto& p = lambda.parts();
  for (std::size_t i = 0; i < p.size();) {
    std::size_t j = i;
    while (j < p.size() && p[j] == p[i]) ++j;
    if (static_cast<int>(j - i) >= e) return false;
    i = j;
  }
  return true;
}

std::vector<Partition> list_partitions(int n) {
  if (n < 0) throw PreconditionError("negative partition size");
  if (n > kMaxPartitionSize)
    throw SizeTooLarge("partitions are capped at size " + std::to_string(kMaxPartitionSize));
  std::vector<Partition> out;
  std::vector<int> cur;
  std::function<void(int, int)> rec = [&](int remaining, int max_part) {
    if (remaining == 0) {
      out.emplace_back(cur);
      return;
    }
    for (int k = std::min(remaining, max_part); k >= 1; --k) {
      cur.push_back(k);
      rec(remaining - k, k);
      cur.pop_back();
    }
  };
  rec(n, n);
  return out;
}

std::vector<Bipartition> list_bipartitions(int m) {
  if (m < 0) throw PreconditionError("negative bipartition size");
  if (m > kMaxPartitionSize)
    throw SizeTooLarge("bipartitions are capped at size " + std::to_string(kMaxPartitionSize));
  std::vector<Bipartition> out;
  for (int k = m; k >= 0; --k) {
    const auto firsts = list_partitions(k);
    const auto seconds = list_partitions(m - k);
    for (const auto& a : firsts)
      for (const auto& b : seconds) out.push_back({a, b});
  }
  return out;
}

std::vector<int> beta_numbers(const Partition& lambda, int beads) {
  if (beads < lambda.length()) throw PreconditionError("too few beads for this partition");
  std::vector<int> beta(static_cast<std::size_t>(beads));
  for (int i = 0; i < beads; ++i) beta[static_cast<std::size_t>(i)] = lambda[static_cast<std::size_t>(i)] + beads - 1 - i;
  return beta;
}

Partition from_beta_numbers(std::vector<int> beta) {
  std::sort(beta.begin(), beta.end(), std::greater<>());
  if (std::adjacent_find(beta.begin(), beta.end()) != beta.end())
    throw PreconditionError("beta-numbers must be distinct");
  const int n = static_cast<int>(beta.size());
  std::vector<int> parts;
  for (int i = 0; i < n; ++i) {
    const int part = beta[static_cast<std::size_t>(i)] - (n - 1 - i);
    if (part < 0) throw PreconditionError("beta-numbers must be nonnegative");
    if (part > 0) parts.push_back(part);
  }
  return Partition(std::move(parts));
}

namespace {

// Bead positions on runner r of a two-runner abacus.
std::vector<int> runner(const std::vector<int>& beta, int r) {
  std::vector<int> out;
  for (int b : beta)
    if (b % 2 == r) out.push_back(b / 2);
  return out;
}

int beads_for(const Partition& lambda) {
  int n = lambda.length();
  if (n % 2 != lambda.size() % 2) ++n;
  return n;
}

}  // namespace

Partition two_core(const Partition& lambda) {
  const std::vector<int> beta = beta_numbers(lambda, beads_for(lambda));
  std::vector<int> core;
  for (int r = 0; r < 2; ++r) {
    const auto count = static_cast<int>(runner(beta, r).size());
    for (int k = 0; k < count; ++k) core.push_back(2 * k + r);
  }
  return from_beta_numbers(std::move(core));
}

Bipartition two_quotient(const Partition& lambda) {
  const std::vector<int> beta = beta_numbers(lambda, beads_for(lambda));
  return {from_beta_numbers(runner(beta, 1)), from_beta_numbers(runner(beta, 0))};
}

Partition embed_bipartition(const Bipartition& b, int s) {
  if (s != 0 && s != 1) throw PreconditionError("embedding needs s in {0,1}");
  const int k = std::max(b.first.length(), b.second.length());
  std::vector<int> beta;
  for (int p : beta_numbers(b.first, k + s)) beta.push_back(2 * p + 1);
  for (int p : beta_numbers(b.second, k)) beta.push_back(2 * p);
  return from_beta_numbers(std::move(beta));
}

Bipartition extract_bipartition(const Partition& lambda, int s) {
  if (s != 0 && s != 1) throw PreconditionError("extraction needs s in {0,1}");
  const Partition expected = s == 1 ? Partition({1}) : Partition{};
  if (two_core(lambda) != expected)
    throw PreconditionError("partition " + to_string(lambda) + " has 2-core (" + to_string(two_core(lambda)) +
                            "), expected (" + to_string(expected) + ")");
  return two_quotient(lambda);
}

int a_invariant_unitary(const Bipartition& b, int s) { return n_invariant(embed_bipartition(b, s)); }

std::string to_string(const Partition& p) {
  std::string out;
  for (std::size_t i = 0; i < p.parts().size(); ++i) {
    if (i) out += ',';
    out += std::to_string(p.parts()[i]);
  }
  return out;
}

std::string to_string(const Bipartition& b) { return to_string(b.first) + "|" + to_string(b.second); }

Partition parse_partition(std::string_view text) {
  if (text.empty() || text == "-") return {};
  std::vector<int> parts;
  std::size_t pos = 0;
  for (;;) {
    const std::size_t comma = text.find(',', pos);
    const std::string tok(text.substr(pos, comma == std::string_view::npos ? comma : comma - pos));
    if (tok.empty() || tok.find_first_not_of("0123456789") != std::string::npos || tok.size() > 6)
      throw ParseError("bad partition '" + std::string(text) + "'");
    parts.push_back(std::stoi(tok));
    if (comma == std::string_view::npos) break;
    pos = comma + 1;
  }
  try {
    return Partition(std::move(parts));
  } catch (const PreconditionError& e) {
    throw ParseError("bad partition '" + std::string(text) + "': " + e.what());
  }
}

Bipartition parse_bipartition(std::string_view text) {
  const std::size_t bar = text.find('|');
  if (bar == std::string_view::npos || text.find('|', bar + 1) != std::string_view::npos)
    throw ParseError("bipartition '" + std::string(text) + "' needs exactly one '|'");
  return {parse_partition(text.substr(0, bar)), parse_partition(text.substr(bar + 1))};
}

}  // namespace cbs
