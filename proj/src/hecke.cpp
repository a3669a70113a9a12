#include "cbs/hecke.hpp"

namespace cbs {

HeckeElement::HeckeElement(DatumPtr datum) : datum_(std::move(datum)) {
  if (!datum_) throw PreconditionError("HeckeElement needs a datum");
}

HeckeElement HeckeElement::basis(DatumPtr datum, GroupElement w, const LaurentPoly& coeff) {
  HeckeElement h(std::move(datum));
  h.add_term(w, coeff);
  return h;
}

LaurentPoly HeckeElement::coefficient(GroupElement w) const {
  auto it = support_.find(w.index);
  return it == support_.end() ? LaurentPoly{} : it->second;
}

void HeckeElement::add_term(GroupElement w, const LaurentPoly& coeff) {
  if (w.index >= datum_->order()) throw DatumMismatch("element does not belong to this datum");
  if (coeff.is_zero()) return;
  auto [it, inserted] = support_.try_emplace(w.index, coeff);
  if (!inserted) {
    it->second += coeff;
    if (it->second.is_zero()) support_.erase(it);
  }
}

void HeckeElement::require_same_datum(const HeckeElement& o) const {
  if (datum_ != o.datum_ && !(*datum_ == *o.datum_))
    throw DatumMismatch("Hecke elements over different Coxeter data");
}

HeckeElement& HeckeElement::operator+=(const HeckeElement& o) {
  require_same_datum(o);
  for (const auto& [w, c] : o.support_) add_term({w}, c);
  return *this;
}

HeckeElement& HeckeElement::operator-=(const HeckeElement& o) {
  require_same_datum(o);
  for (const auto& [w, c] : o.support_) add_term({w}, -c);
  return *this;
}

HeckeElement operator*(const LaurentPoly& c, const HeckeElement& h) {
  HeckeElement r(h.datum_);
  if (c.is_zero()) return r;
  for (const auto& [w, x] : h.support_) r.add_term({w}, c * x);
  return r;
}

bool operator==(const HeckeElement& a, const HeckeElement& b) {
  a.require_same_datum(b);
  return a.support_ == b.support_;
}

HeckeElement left_multiply_generator(int s, const HeckeElement& h) {
  const CoxeterDatum& d = *h.datum();
  const LaurentPoly q = LaurentPoly::u(d.weights().at(static_cast<std::size_t>(s)));
  const LaurentPoly q_minus_one = q - 1;
  HeckeElement r(h.datum());
  for (const auto& [index, c] : h.support()) {
    const GroupElement w{index};
    const GroupElement sw = d.left_multiply(s, w);
    if (d.length(sw) > d.length(w)) {
      r.add_term(sw, c);
    } else {
      r.add_term(sw, q * c);
      r.add_term(w, q_minus_one * c);
    }
  }
  return r;
}

HeckeElement generator_times_basis(const DatumPtr& datum, int s, GroupElement w) {
  if (s < 0 || s >= datum->rank()) throw PreconditionError("no generator s" + std::to_string(s + 1));
  return left_multiply_generator(s, HeckeElement::basis(datum, w));
}

// T_x h = T_{s1} (T_{s2} ( ... (T_{sk} h))) for a reduced word s1...sk of x.
HeckeElement operator*(const HeckeElement& a, const HeckeElement& b) {
  a.require_same_datum(b);
  const CoxeterDatum& d = *a.datum_;
  HeckeElement result(a.datum_);
  for (const auto& [x, c] : a.support_) {
    HeckeElement partial = b;
    const Word word = d.reduced_word({x});
    for (auto it = word.rbegin(); it != word.rend(); ++it) partial = left_multiply_generator(*it, partial);
    result += c * partial;
  }
  return result;
}

LaurentPoly tau(const HeckeElement& h) { return h.coefficient(h.datum()->identity()); }

LaurentPoly tau_bilinear(const DatumPtr& datum, GroupElement w, GroupElement w_prime) {
  return tau(HeckeElement::basis(datum, w) * HeckeElement::basis(datum, w_prime));
}

std::string to_string(const HeckeElement& h) {
  if (h.is_zero()) return "0";
  std::string out;
  for (const auto& [w, c] : h.support()) {
    if (!out.empty()) out += " + ";
    out += to_string(c) + " * T[" + h.datum()->format({w}) + "]";
  }
  return out;
}

HeckeElement parse_hecke(const DatumPtr& datum, std::string_view text) {
  HeckeElement h(datum);
  if (text == "0") return h;
  std::size_t pos = 0;
  for (;;) {
    const std::size_t end = text.find(" + ", pos);
    const std::string_view summand = text.substr(pos, end == std::string_view::npos ? end : end - pos);
    const std::size_t star = summand.find(" * T[");
    if (star == std::string_view::npos || summand.back() != ']')
      throw ParseError("bad Hecke summand '" + std::string(summand) + "'");
    const LaurentPoly c = parse_laurent(summand.substr(0, star));
    const std::string_view word = summand.substr(star + 5, summand.size() - star - 6);
    h.add_term(datum->parse_element(word), c);
    if (end == std::string_view::npos) break;
    pos = end + 3;
  }
  return h;
}

}  // namespace cbs
