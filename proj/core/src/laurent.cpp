#include "qhecke/laurent.hpp"

#include <sstream>

namespace qh {

void Laurent::add_term(int e, const Integer& c) {
  if (c.is_zero()) return;
  auto it = terms_.find(e);
  if (it == terms_.end()) {
    terms_.emplace(e, c);
  } else {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

Integer Laurent::coeff(int e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? Integer(0) : it->second;
}

int Laurent::min_exponent() const { return terms_.empty() ? 0 : terms_.begin()->first; }
int Laurent::max_exponent() const { return terms_.empty() ? 0 : terms_.rbegin()->first; }

Laurent& Laurent::operator+=(const Laurent& o) {
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

Laurent& Laurent::operator-=(const Laurent& o) {
  for (const auto& [e, c] : o.terms_) add_term(e, -c);
  return *this;
}

Laurent operator*(const Laurent& a, const Laurent& b) {
  Laurent r;
  for (const auto& [ea, ca] : a.terms_)
    for (const auto& [eb, cb] : b.terms_) r.add_term(ea + eb, ca * cb);
  return r;
}

Laurent Laurent::inverted() const {
  Laurent r;
  for (const auto& [e, c] : terms_) r.add_term(-e, c);
  return r;
}

Laurent Laurent::dilated(int k) const {
  Laurent r;
  for (const auto& [e, c] : terms_) r.add_term(e * k, c);
  return r;
}

Integer Laurent::at_one() const {
  Integer s = 0;
  for (const auto& [e, c] : terms_) s += c;
  return s;
}

std::string Laurent::str(const std::string& var) const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    Integer mag = c < 0 ? Integer(-c) : c;
    if (first) {
      if (c < 0) os << "-";
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    first = false;
    if (e == 0) {
      os << mag;
      continue;
    }
    if (mag != 1) os << mag << "*";
    os << var;
    if (e != 1) os << "^" << e;
  }
  return os.str();
}

Laurent truncate_above(const Laurent& a, int max_exp) {
  Laurent r;
  for (const auto& [e, c] : a.terms())
    if (e <= max_exp) r.add_term(e, c);
  return r;
}

Laurent geometric_series(int k, int cutoff) {
  Laurent r;
  for (int e = 0; e <= cutoff; e += k) r.add_term(e, 1);
  return r;
}

}  // namespace qh
