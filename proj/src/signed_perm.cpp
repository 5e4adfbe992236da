#include "uflip/signed_perm.hpp"

#include <algorithm>
#include <cstdlib>
#include <functional>
#include <map>
#include <numeric>
#include <stdexcept>

namespace uflip {

SignedPerm::SignedPerm(std::vector<int> images) : img_(std::move(images)) {
  std::vector<bool> seen(img_.size() + 1, false);
  for (int x : img_) {
    const int a = std::abs(x);
    if (a < 1 || a > rank() || seen[a]) throw std::invalid_argument("not a signed permutation");
    seen[a] = true;
  }
}

SignedPerm SignedPerm::identity(int n) {
  std::vector<int> v(n);
  std::iota(v.begin(), v.end(), 1);
  return SignedPerm(std::move(v));
}

SignedPerm SignedPerm::longest(int n) {
  std::vector<int> v(n);
  for (int i = 0; i < n; ++i) v[i] = -(i + 1);
  return SignedPerm(std::move(v));
}

SignedPerm SignedPerm::simple_reflection(int n, int i, bool type_d) {
  if (i < 1 || i > n) throw std::invalid_argument("simple reflection index out of range");
  std::vector<int> v = identity(n).img_;
  if (i < n) {
    std::swap(v[i - 1], v[i]);
  } else if (!type_d) {
    v[n - 1] = -n;
  } else {
    if (n < 2) throw std::invalid_argument("type D needs rank at least 2");
    v[n - 2] = -n;
    v[n - 1] = -(n - 1);
  }
  return SignedPerm(std::move(v));
}

int SignedPerm::operator()(int i) const {
  const int v = img_.at(std::abs(i) - 1);
  return i > 0 ? v : -v;
}

bool SignedPerm::in_d() const {
  return std::count_if(img_.begin(), img_.end(), [](int x) { return x < 0; }) % 2 == 0;
}

namespace {

// w(e_i) + sign * w(e_j) is a negative root (first nonzero coordinate negative).
bool sent_negative(const std::vector<int>& img, int i, int j, int sign) {
  const int a = img[i], b = sign * img[j];
  return std::abs(a) < std::abs(b) ? a < 0 : b < 0;
}

}  // namespace

// Positive roots: e_i - e_j, e_i + e_j (i < j) and, for B, e_i.
int SignedPerm::length_b() const {
  int neg = 0;
  for (int x : img_) neg += x < 0;
  return length_d() + neg;
}

int SignedPerm::length_d() const {
  int count = 0;
  for (int i = 0; i < rank(); ++i)
    for (int j = i + 1; j < rank(); ++j) count += sent_negative(img_, i, j, -1) + sent_negative(img_, i, j, 1);
  return count;
}

SignedPerm operator*(const SignedPerm& a, const SignedPerm& b) {
  if (a.rank() != b.rank()) throw std::invalid_argument("rank mismatch");
  std::vector<int> v(a.rank());
  for (int i = 1; i <= a.rank(); ++i) v[i - 1] = a(b(i));
  return SignedPerm(std::move(v));
}

SignedPerm SignedPerm::inverse() const {
  std::vector<int> v(rank());
  for (int i = 1; i <= rank(); ++i) {
    const int x = img_[i - 1];
    v[std::abs(x) - 1] = x > 0 ? i : -i;
  }
  return SignedPerm(std::move(v));
}

SignedPerm SignedPerm::power(int k) const {
  SignedPerm base = k >= 0 ? *this : inverse();
  SignedPerm out = identity(rank());
  for (int e = std::abs(k); e > 0; e >>= 1) {
    if (e & 1) out = out * base;
    base = base * base;
  }
  return out;
}

std::string SignedPerm::to_string() const {
  std::string s = "[";
  for (std::size_t i = 0; i < img_.size(); ++i) s += (i ? "," : "") + std::to_string(img_[i]);
  return s + "]";
}

int SignedCycleType::rank() const { return partition_size(pos) + partition_size(neg); }

std::string SignedCycleType::to_string() const {
  std::string s = partition_string(pos) + "." + partition_string(neg);
  if (split != 0) s += split > 0 ? "+" : "-";
  return s;
}

bool is_split_type(const Partition& pos, const Partition& neg) {
  return neg.empty() && std::all_of(pos.begin(), pos.end(), [](int k) { return k % 2 == 0; });
}

SignedCycleType cycle_type(const SignedPerm& w, bool in_d) {
  const int n = w.rank();
  SignedCycleType c;
  std::vector<bool> seen(n + 1, false);
  std::vector<int> diag(n + 1, 1);  // conjugator to the unsigned permutation
  int minus = 0;
  for (int start = 1; start <= n; ++start) {
    if (seen[start]) continue;
    int len = 0, sign = 1, cur = start;
    while (!seen[cur]) {
      seen[cur] = true;
      const int img = w(cur);
      const int next = std::abs(img);
      const int s = img > 0 ? 1 : -1;
      if (next != start) {
        diag[next] = diag[cur] * s;
        minus += diag[next] < 0;
      }
      sign *= s;
      ++len;
      cur = next;
    }
    (sign > 0 ? c.pos : c.neg).push_back(len);
  }
  std::sort(c.pos.rbegin(), c.pos.rend());
  std::sort(c.neg.rbegin(), c.neg.rend());
  if (in_d && is_split_type(c.pos, c.neg)) c.split = minus % 2 == 0 ? 1 : -1;
  return c;
}

SignedPerm representative(const SignedCycleType& c) {
  const int n = c.rank();
  std::vector<int> v(n);
  int next = 1;
  auto place = [&](int len, bool negative) {
    const int first = next;
    for (int j = 0; j < len; ++j) v[first + j - 1] = first + (j + 1) % len;
    if (negative) v[first + len - 2] *= -1;  // last point returns to -first
    next += len;
  };
  for (int k : c.pos) place(k, false);
  for (int k : c.neg) place(k, true);
  SignedPerm w(std::move(v));
  if (c.split < 0) {
    const SignedPerm t = SignedPerm::simple_reflection(n, n, false);  // sign change of n
    w = t * w * t;
  }
  return w;
}

std::int64_t order_b(int n) {
  std::int64_t r = 1;
  for (int i = 1; i <= n; ++i) r *= 2 * i;
  return r;
}

std::int64_t order_d(int n) { return n == 0 ? 1 : order_b(n) / 2; }

std::int64_t centralizer_order_b(const Partition& pos, const Partition& neg) {
  std::int64_t z = 1;
  for (const Partition* p : {&pos, &neg}) {
    std::map<int, int> mult;
    for (int k : *p) ++mult[k];
    for (auto [k, a] : mult)
      for (int i = 1; i <= a; ++i) z *= 2 * k * i;
  }
  return z;
}

RatPoly det_one_minus_qw(const SignedCycleType& c) {
  RatPoly r(1);
  for (int k : c.pos) r = r * (RatPoly(1) - RatPoly::monomial(k));
  for (int k : c.neg) r = r * (RatPoly(1) + RatPoly::monomial(k));
  return r;
}

std::vector<Partition> partitions(int n) {
  std::vector<Partition> out;
  Partition cur;
  std::function<void(int, int)> rec = [&](int left, int max_part) {
    if (left == 0) {
      out.push_back(cur);
      return;
    }
    for (int k = std::min(left, max_part); k >= 1; --k) {
      cur.push_back(k);
      rec(left - k, k);
      cur.pop_back();
    }
  };
  rec(n, n);
  return out;
}

int partition_n(const Partition& p) {
  int s = 0;
  for (std::size_t i = 0; i < p.size(); ++i) s += static_cast<int>(i) * p[i];
  return s;
}

int partition_size(const Partition& p) { return std::accumulate(p.begin(), p.end(), 0); }

std::string partition_string(const Partition& p) {
  const bool wide = std::any_of(p.begin(), p.end(), [](int k) { return k >= 10; });
  std::string s;
  for (std::size_t i = 0; i < p.size(); ++i) s += (wide && i ? "," : "") + std::to_string(p[i]);
  return s;
}

std::vector<SignedCycleType> classical_classes(int n, bool type_d) {
  std::vector<SignedCycleType> out;
  for (int k = 0; k <= n; ++k)
    for (const auto& pos : partitions(n - k))
      for (const auto& neg : partitions(k)) {
        if (type_d && neg.size() % 2 != 0) continue;
        if (type_d && is_split_type(pos, neg)) {
          out.push_back({pos, neg, 1});
          out.push_back({pos, neg, -1});
        } else {
          out.push_back({pos, neg, 0});
        }
      }
  return out;
}

std::int64_t class_size(const SignedCycleType& c, bool type_d) {
  const std::int64_t size = order_b(c.rank()) / centralizer_order_b(c.pos, c.neg);
  return (type_d && c.split != 0) ? size / 2 : size;
}

namespace {

// Beta-set with a fixed number of beads.
std::vector<int> beta_set(const Partition& p, int beads) {
  std::vector<int> b(beads);
  for (int i = 0; i < beads; ++i) b[i] = (i < static_cast<int>(p.size()) ? p[i] : 0) + (beads - 1 - i);
  return b;  // decreasing
}

// Sum over ways to remove a k-rim hook from the beta set, each with its leg sign.
template <typename F>
void for_each_strip(const std::vector<int>& beta, int k, F&& f) {
  for (std::size_t i = 0; i < beta.size(); ++i) {
    const int target = beta[i] - k;
    if (target < 0 || std::find(beta.begin(), beta.end(), target) != beta.end()) continue;
    int between = 0;
    for (int x : beta) between += (x > target && x < beta[i]);
    std::vector<int> next = beta;
    next[i] = target;
    std::sort(next.rbegin(), next.rend());
    f(next, between % 2 == 0 ? 1 : -1);
  }
}

std::int64_t mn_rec(const std::vector<int>& a, const std::vector<int>& b, const std::vector<std::pair<int, int>>& cycles,
                    std::size_t idx) {
  if (idx == cycles.size()) return 1;
  const auto [k, sign] = cycles[idx];
  std::int64_t total = 0;
  for_each_strip(a, k, [&](const std::vector<int>& na, int s) { total += s * mn_rec(na, b, cycles, idx + 1); });
  for_each_strip(b, k, [&](const std::vector<int>& nb, int s) { total += s * sign * mn_rec(a, nb, cycles, idx + 1); });
  return total;
}

}  // namespace

std::int64_t hyperoctahedral_character(const Partition& alpha, const Partition& beta, const Partition& pos,
                                       const Partition& neg) {
  const int n = partition_size(alpha) + partition_size(beta);
  if (partition_size(pos) + partition_size(neg) != n) throw std::invalid_argument("class and character ranks differ");
  std::vector<std::pair<int, int>> cycles;
  for (int k : pos) cycles.emplace_back(k, 1);
  for (int k : neg) cycles.emplace_back(k, -1);
  // removing long cycles first keeps the recursion narrow
  std::stable_sort(cycles.begin(), cycles.end(), [](auto x, auto y) { return x.first > y.first; });
  return mn_rec(beta_set(alpha, n), beta_set(beta, n), cycles, 0);
}

std::int64_t symmetric_character(const Partition& alpha, const Partition& mu) {
  return hyperoctahedral_character(alpha, {}, mu, {});
}

}  // namespace uflip
