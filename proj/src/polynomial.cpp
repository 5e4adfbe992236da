#include "uflip/polynomial.hpp"

#include <nlohmann/json.hpp>
#include <sstream>
#include <stdexcept>

namespace uflip {

RatPoly::RatPoly(const Rat& constant) {
  if (!constant.is_zero()) terms_.emplace(0, constant);
}

RatPoly RatPoly::monomial(int exponent, const Rat& coefficient) {
  RatPoly p;
  p.add_term(exponent, coefficient);
  return p;
}

RatPoly RatPoly::geometric(int n) {
  RatPoly p;
  for (int i = 0; i < n; ++i) p.add_term(i, Rat(1));
  return p;
}

Rat RatPoly::coeff(int exponent) const {
  auto it = terms_.find(exponent);
  return it == terms_.end() ? Rat(0) : it->second;
}

void RatPoly::add_term(int exponent, const Rat& coefficient) {
  if (coefficient.is_zero()) return;
  auto [it, inserted] = terms_.emplace(exponent, coefficient);
  if (!inserted) {
    it->second += coefficient;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

std::pair<int, int> RatPoly::degree_and_valuation() const {
  if (terms_.empty()) throw std::domain_error("undefined degree");
  return {terms_.rbegin()->first, terms_.begin()->first};
}

RatPoly RatPoly::substitute_neg() const {
  RatPoly r = *this;
  for (auto& [e, c] : r.terms_)
    if (e % 2 != 0) c = -c;
  return r;
}

RatPoly RatPoly::substitute_power(int k) const {
  if (k <= 0) throw std::invalid_argument("substitute_power needs k > 0");
  RatPoly r;
  for (const auto& [e, c] : terms_) r.terms_.emplace(e * k, c);
  return r;
}

Rat RatPoly::evaluate(const Rat& x) const {
  Rat sum(0);
  for (const auto& [e, c] : terms_) {
    Rat term = c;
    if (e >= 0) {
      for (int i = 0; i < e; ++i) term *= x;
    } else {
      for (int i = 0; i < -e; ++i) term /= x;
    }
    sum += term;
  }
  return sum;
}

RatPoly RatPoly::scaled(const Rat& factor) const {
  RatPoly r = *this;
  r *= factor;
  return r;
}

RatPoly RatPoly::shifted(int k) const {
  RatPoly r;
  for (const auto& [e, c] : terms_) r.terms_.emplace(e + k, c);
  return r;
}

std::pair<RatPoly, RatPoly> RatPoly::divmod(const RatPoly& divisor) const {
  if (divisor.is_zero()) throw std::domain_error("polynomial division by zero");
  if ((!is_zero() && valuation() < 0) || divisor.valuation() < 0)
    throw std::domain_error("divmod needs ordinary polynomials");
  RatPoly quotient;
  RatPoly rem = *this;
  const auto [ddeg, dval] = divisor.degree_and_valuation();
  (void)dval;
  const Rat lead = divisor.coeff(ddeg);
  while (!rem.is_zero() && rem.degree() >= ddeg) {
    const int shift = rem.degree() - ddeg;
    const Rat factor = rem.coeff(rem.degree()) / lead;
    quotient.add_term(shift, factor);
    for (const auto& [e, c] : divisor.terms_) rem.add_term(e + shift, -(c * factor));
  }
  return {quotient, rem};
}

RatPoly& RatPoly::operator+=(const RatPoly& o) {
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

RatPoly& RatPoly::operator-=(const RatPoly& o) {
  for (const auto& [e, c] : o.terms_) add_term(e, -c);
  return *this;
}

RatPoly operator*(const RatPoly& a, const RatPoly& b) {
  RatPoly r;
  for (const auto& [ea, ca] : a.terms_)
    for (const auto& [eb, cb] : b.terms_) r.add_term(ea + eb, ca * cb);
  return r;
}

RatPoly& RatPoly::operator*=(const RatPoly& o) {
  *this = *this * o;
  return *this;
}

RatPoly& RatPoly::operator*=(const Rat& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [e, coef] : terms_) coef *= c;
  return *this;
}

std::string RatPoly::to_string(const std::string& var) const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [e, c] = *it;
    Rat mag = c.sign() < 0 ? -c : c;
    if (first) {
      if (c.sign() < 0) os << "-";
    } else {
      os << (c.sign() < 0 ? " - " : " + ");
    }
    first = false;
    const bool unit = (mag == Rat(1));
    if (e == 0) {
      os << mag.to_short_string();
      continue;
    }
    if (!unit) os << mag.to_short_string() << "*";
    os << var;
    if (e != 1) os << "^" << e;
  }
  return os.str();
}

RatPoly pow(const RatPoly& p, int e) {
  if (e < 0) throw std::invalid_argument("negative polynomial power");
  RatPoly r(1);
  for (int i = 0; i < e; ++i) r *= p;
  return r;
}

nlohmann::json to_json(const RatPoly& p) {
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& [e, c] : p.terms()) arr.push_back(nlohmann::json::array({e, c.to_string()}));
  return arr;
}

RatPoly poly_from_json(const nlohmann::json& j) {
  if (!j.is_array()) throw std::invalid_argument("polynomial JSON must be an array");
  RatPoly p;
  for (const auto& term : j) {
    if (!term.is_array() || term.size() != 2)
      throw std::invalid_argument("polynomial term must be [exponent, \"num/den\"]");
    p.add_term(term[0].get<int>(), Rat::parse(term[1].get<std::string>()));
  }
  return p;
}

}  // namespace uflip
