#include "uflip/cyclotomic.hpp"

#include <map>
#include <mutex>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace uflip {

namespace {

std::vector<std::int64_t> poly_mul(const std::vector<std::int64_t>& a,
                                   const std::vector<std::int64_t>& b) {
  std::vector<std::int64_t> r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  return r;
}

// Exact division by a monic polynomial.
std::vector<std::int64_t> poly_div_exact(std::vector<std::int64_t> num,
                                         const std::vector<std::int64_t>& den) {
  const std::size_t dd = den.size() - 1;
  std::vector<std::int64_t> q(num.size() - dd, 0);
  for (std::size_t k = num.size(); k-- > dd;) {
    const std::int64_t c = num[k];
    q[k - dd] = c;
    for (std::size_t i = 0; i <= dd; ++i) num[k - dd + i] -= c * den[i];
  }
  for (std::int64_t c : num)
    if (c != 0) throw std::logic_error("cyclotomic polynomial division not exact");
  return q;
}

}  // namespace

const std::vector<std::int64_t>& cyclotomic_polynomial(int n) {
  static std::mutex mu;
  static std::map<int, std::vector<std::int64_t>> cache;
  if (n < 1) throw std::invalid_argument("cyclotomic order must be positive");
  std::lock_guard<std::mutex> lock(mu);
  if (auto it = cache.find(n); it != cache.end()) return it->second;
  // x^n - 1 = prod_{d | n} Phi_d(x); compute divisors bottom-up without recursion
  // under the lock.
  for (int d = 1; d <= n; ++d) {
    if (n % d != 0 || cache.count(d)) continue;
    std::vector<std::int64_t> poly(d + 1, 0);
    poly[0] = -1;
    poly[d] = 1;
    for (int e = 1; e < d; ++e)
      if (d % e == 0) poly = poly_div_exact(poly, cache.at(e));
    cache.emplace(d, std::move(poly));
  }
  return cache.at(n);
}

Cyclotomic::Cyclotomic(int order) : order_(order) {
  if (order < 1) throw std::invalid_argument("cyclotomic order must be positive");
}

Cyclotomic::Cyclotomic(int order, std::vector<std::int64_t> raw) : order_(order) {
  const auto& phi = cyclotomic_polynomial(order);
  const std::size_t deg = phi.size() - 1;
  for (std::size_t k = raw.size(); k-- > deg;) {
    const std::int64_t c = raw[k];
    if (c == 0) continue;
    for (std::size_t i = 0; i <= deg; ++i) raw[k - deg + i] -= c * phi[i];
  }
  raw.resize(deg, 0);
  while (!raw.empty() && raw.back() == 0) raw.pop_back();
  coeffs_ = std::move(raw);
}

Cyclotomic Cyclotomic::integer(int order, std::int64_t value) {
  return Cyclotomic(order, std::vector<std::int64_t>{value});
}

Cyclotomic Cyclotomic::root_of_unity(int order, int k) {
  k %= order;
  if (k < 0) k += order;
  std::vector<std::int64_t> raw(static_cast<std::size_t>(k) + 1, 0);
  raw[k] = 1;
  return Cyclotomic(order, std::move(raw));
}

Cyclotomic Cyclotomic::lifted(int m) const {
  if (m % order_ != 0) throw std::invalid_argument("lift target must be a multiple of the order");
  const int step = m / order_;
  std::vector<std::int64_t> raw(coeffs_.empty() ? 1 : (coeffs_.size() - 1) * step + 1, 0);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) raw[i * step] = coeffs_[i];
  return Cyclotomic(m, std::move(raw));
}

Cyclotomic Cyclotomic::conjugate() const {
  std::vector<std::int64_t> raw(static_cast<std::size_t>(order_), 0);
  for (std::size_t i = 0; i < coeffs_.size(); ++i)
    raw[(order_ - static_cast<int>(i)) % order_] += coeffs_[i];
  return Cyclotomic(order_, std::move(raw));
}

bool Cyclotomic::is_zero() const { return coeffs_.empty(); }

std::optional<std::int64_t> Cyclotomic::as_integer() const {
  if (coeffs_.empty()) return 0;
  if (coeffs_.size() == 1) return coeffs_[0];
  return std::nullopt;
}

namespace {
void align(Cyclotomic& a, Cyclotomic& b) {
  if (a.order() == b.order()) return;
  const int m = std::lcm(a.order(), b.order());
  a = a.lifted(m);
  b = b.lifted(m);
}
}  // namespace

Cyclotomic& Cyclotomic::operator+=(const Cyclotomic& o) {
  Cyclotomic other = o;
  align(*this, other);
  std::vector<std::int64_t> raw(std::max(coeffs_.size(), other.coeffs_.size()), 0);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) raw[i] += coeffs_[i];
  for (std::size_t i = 0; i < other.coeffs_.size(); ++i) raw[i] += other.coeffs_[i];
  *this = Cyclotomic(order_, std::move(raw));
  return *this;
}

Cyclotomic& Cyclotomic::operator-=(const Cyclotomic& o) { return *this += o * -1; }

Cyclotomic operator*(const Cyclotomic& a, const Cyclotomic& b) {
  Cyclotomic x = a, y = b;
  align(x, y);
  if (x.coeffs_.empty() || y.coeffs_.empty()) return Cyclotomic(x.order_);
  return Cyclotomic(x.order_, poly_mul(x.coeffs_, y.coeffs_));
}

Cyclotomic Cyclotomic::operator*(std::int64_t k) const {
  Cyclotomic r = *this;
  if (k == 0) {
    r.coeffs_.clear();
    return r;
  }
  for (auto& c : r.coeffs_) c *= k;
  return r;
}

bool operator==(const Cyclotomic& a, const Cyclotomic& b) {
  if (a.order_ == b.order_) return a.coeffs_ == b.coeffs_;
  Cyclotomic x = a, y = b;
  align(x, y);
  return x.coeffs_ == y.coeffs_;
}

std::strong_ordering operator<=>(const Cyclotomic& a, const Cyclotomic& b) {
  Cyclotomic x = a, y = b;
  align(x, y);
  const std::size_t n = std::max(x.coeffs_.size(), y.coeffs_.size());
  for (std::size_t i = 0; i < n; ++i) {
    const std::int64_t u = i < x.coeffs_.size() ? x.coeffs_[i] : 0;
    const std::int64_t v = i < y.coeffs_.size() ? y.coeffs_[i] : 0;
    if (u != v) return u <=> v;
  }
  return std::strong_ordering::equal;
}

std::string Cyclotomic::to_string() const {
  if (auto k = as_integer()) return std::to_string(*k);
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    const std::int64_t c = coeffs_[i];
    if (c == 0) continue;
    if (!first) os << (c < 0 ? " - " : " + ");
    else if (c < 0) os << "-";
    first = false;
    const std::int64_t m = c < 0 ? -c : c;
    if (i == 0) {
      os << m;
      continue;
    }
    if (m != 1) os << m << "*";
    os << "E(" << order_ << ")";
    if (i != 1) os << "^" << i;
  }
  return os.str();
}

}  // namespace uflip
