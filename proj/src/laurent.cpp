#include "cbs/laurent.hpp"

#include <cctype>
#include <sstream>

namespace cbs {

int u_valuation(const LaurentPoly& p) { return p.valuation(); }

mpq_class leading_coefficient_at_valuation(const LaurentPoly& p) {
  return p.coefficient(p.valuation());
}

bool has_integer_coefficients(const LaurentPoly& p) {
  for (const auto& [k, c] : p.terms())
    if (c.get_den() != 1) return false;
  return true;
}

mpq_class evaluate(const LaurentPoly& p, const mpq_class& x) {
  mpq_class sum = 0;
  for (const auto& [k, c] : p.terms()) {
    if (k < 0 && x == 0) throw PreconditionError("evaluate: negative power of zero");
    mpq_class power = 1;
    const mpq_class base = k >= 0 ? x : mpq_class(1 / x);
    for (int i = 0; i < (k >= 0 ? k : -k); ++i) power *= base;
    sum += c * power;
  }
  return sum;
}

std::string to_string(const LaurentPoly& p) {
  if (p.is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& [k, c] : p.terms()) {
    if (!first) out << '+';
    first = false;
    out << c.get_str() << "*u^" << k;
  }
  return out.str();
}

namespace {

class TermParser {
 public:
  explicit TermParser(std::string text) : s_(std::move(text)) {}

  LaurentPoly parse() {
    if (s_ == "0") return {};
    if (s_.empty()) fail("empty input");
    LaurentPoly p;
    for (;;) {
      mpq_class c = parse_rational();
      expect("*u^");
      int k = parse_int();
      if (c == 0) fail("zero coefficient");
      if (!p.terms().empty() && k <= p.degree()) fail("exponents must be strictly ascending");
      p.add_term(k, c);
      if (pos_ == s_.size()) return p;
      expect("+");
    }
  }

 private:
  [[noreturn]] void fail(const std::string& why) const {
    throw ParseError("Laurent polynomial '" + s_ + "' at offset " + std::to_string(pos_) +
                     ": " + why);
  }

  void expect(std::string_view tok) {
    if (s_.compare(pos_, tok.size(), tok) != 0) fail("expected '" + std::string(tok) + "'");
    pos_ += tok.size();
  }

  std::string digits(bool allow_sign) {
    std::size_t start = pos_;
    if (allow_sign && pos_ < s_.size() && s_[pos_] == '-') ++pos_;
    std::size_t d = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (pos_ == d) fail("expected digits");
    return s_.substr(start, pos_ - start);
  }

  mpq_class parse_rational() {
    std::string num = digits(true);
    std::string den = "1";
    if (pos_ < s_.size() && s_[pos_] == '/') {
      ++pos_;
      den = digits(false);
    }
    mpz_class n(num), d(den);
    if (d == 0) fail("zero denominator");
    mpq_class q(n, d);
    q.canonicalize();
    return q;
  }

  int parse_int() {
    std::string t = digits(true);
    try {
      return std::stoi(t);
    } catch (const std::exception&) {
      fail("exponent out of range");
    }
  }

  std::string s_;
  std::size_t pos_ = 0;
};

}  // namespace

LaurentPoly parse_laurent(std::string_view text) {
  std::string compact;
  for (char ch : text)
    if (!std::isspace(static_cast<unsigned char>(ch))) compact.push_back(ch);
  return TermParser(std::move(compact)).parse();
}

}  // namespace cbs
