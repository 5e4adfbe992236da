#include "uflip/rational.hpp"

#include <stdexcept>

namespace uflip {

Rat::Rat(long num, long den) : value_(num, den) {
  if (den == 0) throw std::domain_error("rational with zero denominator");
  value_.canonicalize();
}

Rat::Rat(mpq_class value) : value_(std::move(value)) { value_.canonicalize(); }

Rat Rat::parse(std::string_view text) {
  std::string s(text);
  if (s.empty()) throw std::invalid_argument("empty rational literal");
  mpq_class q;
  if (q.set_str(s, 10) != 0) throw std::invalid_argument("bad rational literal: " + s);
  if (q.get_den() == 0) throw std::domain_error("rational with zero denominator: " + s);
  q.canonicalize();
  return Rat(q);
}

std::int64_t Rat::to_int64() const {
  if (!is_integer() || !value_.get_num().fits_slong_p())
    throw std::domain_error("rational " + to_string() + " is not a machine integer");
  return value_.get_num().get_si();
}

std::string Rat::to_string() const {
  return value_.get_num().get_str() + "/" + value_.get_den().get_str();
}

std::string Rat::to_short_string() const {
  if (is_integer()) return value_.get_num().get_str();
  return to_string();
}

Rat& Rat::operator+=(const Rat& o) {
  value_ += o.value_;
  return *this;
}
Rat& Rat::operator-=(const Rat& o) {
  value_ -= o.value_;
  return *this;
}
Rat& Rat::operator*=(const Rat& o) {
  value_ *= o.value_;
  return *this;
}
Rat& Rat::operator/=(const Rat& o) {
  if (o.is_zero()) throw std::domain_error("division by zero");
  value_ /= o.value_;
  return *this;
}

Rat pow2(int e) {
  mpz_class p = 1;
  mpz_mul_2exp(p.get_mpz_t(), p.get_mpz_t(), static_cast<unsigned long>(e < 0 ? -e : e));
  if (e >= 0) return Rat(p);
  return Rat(mpq_class(mpz_class(1), p));
}

}  // namespace uflip
