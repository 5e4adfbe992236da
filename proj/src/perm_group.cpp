#include "uflip/perm_group.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <nlohmann/json.hpp>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>

#include "uflip/error.hpp"

namespace uflip {

// ---------------------------------------------------------------------------
// Permutations

Perm identity_perm(std::size_t degree) {
  Perm p(degree);
  std::iota(p.begin(), p.end(), std::uint8_t{0});
  return p;
}

Perm compose(const Perm& a, const Perm& b) {
  Perm r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[b[i]];
  return r;
}

Perm inverse(const Perm& p) {
  Perm r(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) r[p[i]] = static_cast<std::uint8_t>(i);
  return r;
}

namespace {
std::vector<std::vector<std::size_t>> cycles_of(const Perm& p) {
  std::vector<std::vector<std::size_t>> cycles;
  std::vector<bool> seen(p.size(), false);
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (seen[i]) continue;
    std::vector<std::size_t> c;
    for (std::size_t j = i; !seen[j]; j = p[j]) {
      seen[j] = true;
      c.push_back(j);
    }
    cycles.push_back(std::move(c));
  }
  return cycles;
}
}  // namespace

int perm_order(const Perm& p) {
  int o = 1;
  for (const auto& c : cycles_of(p)) o = std::lcm(o, static_cast<int>(c.size()));
  return o;
}

int perm_parity(const Perm& p) {
  int transpositions = 0;
  for (const auto& c : cycles_of(p)) transpositions += static_cast<int>(c.size()) - 1;
  return transpositions % 2;
}

std::string cycle_string(const Perm& p) {
  std::ostringstream os;
  for (const auto& c : cycles_of(p)) {
    if (c.size() < 2) continue;
    os << "(";
    for (std::size_t k = 0; k < c.size(); ++k) os << (k ? "," : "") << c[k] + 1;
    os << ")";
  }
  const std::string s = os.str();
  return s.empty() ? "()" : s;
}

Perm parse_cycles(std::string_view text, std::size_t degree) {
  Perm p = identity_perm(degree);
  std::size_t i = 0;
  auto fail = [&]() { throw std::invalid_argument("bad cycle notation: " + std::string(text)); };
  while (i < text.size()) {
    if (text[i] == ' ') {
      ++i;
      continue;
    }
    if (text[i] != '(') fail();
    ++i;
    std::vector<std::size_t> cyc;
    while (i < text.size() && text[i] != ')') {
      if (text[i] == ',' || text[i] == ' ') {
        ++i;
        continue;
      }
      std::size_t v = 0;
      bool any = false;
      while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
        v = v * 10 + static_cast<std::size_t>(text[i] - '0');
        ++i;
        any = true;
      }
      if (!any || v < 1 || v > degree) fail();
      cyc.push_back(v - 1);
    }
    if (i >= text.size()) fail();
    ++i;
    // Applying the new cycle after the ones already read.
    Perm c = identity_perm(degree);
    for (std::size_t k = 0; k < cyc.size(); ++k) c[cyc[k]] = static_cast<std::uint8_t>(cyc[(k + 1) % cyc.size()]);
    p = compose(c, p);
  }
  return p;
}

std::int64_t CharTable::degree(std::size_t irr) const {
  auto d = rows.at(irr).at(0).as_integer();
  return d.value_or(0);
}

// ---------------------------------------------------------------------------
// PermGroup

PermGroup::PermGroup(std::size_t degree, const std::vector<Perm>& generators)
    : degree_(degree), generators_(generators) {
  if (degree > 255) throw std::invalid_argument("permutation degree above 255");
  for (const auto& g : generators_)
    if (g.size() != degree) throw std::invalid_argument("generator has wrong degree");
  std::set<Perm> seen{identity_perm(degree)};
  std::deque<Perm> queue{identity_perm(degree)};
  while (!queue.empty()) {
    Perm x = queue.front();
    queue.pop_front();
    for (const auto& g : generators_) {
      Perm y = compose(g, x);
      if (seen.insert(y).second) {
        if (seen.size() > kMaxOrder) throw GateError("permutation group exceeds the order limit");
        queue.push_back(std::move(y));
      }
    }
  }
  elements_.assign(seen.begin(), seen.end());
  build();
}

PermGroup::PermGroup(std::size_t degree, std::vector<Perm> generators, std::vector<Perm> sorted_elements)
    : degree_(degree), generators_(std::move(generators)), elements_(std::move(sorted_elements)) {
  build();
}

PermGroup PermGroup::symmetric(int n) {
  if (n < 1) throw std::invalid_argument("symmetric group needs n >= 1");
  std::vector<Perm> gens;
  for (int i = 0; i + 1 < n; ++i) {
    Perm t = identity_perm(static_cast<std::size_t>(n));
    std::swap(t[i], t[i + 1]);
    gens.push_back(t);
  }
  return PermGroup(static_cast<std::size_t>(n), gens);
}

PermGroup PermGroup::elementary_abelian_2(int rank) {
  std::vector<Perm> gens;
  const std::size_t deg = static_cast<std::size_t>(std::max(1, 2 * rank));
  for (int i = 0; i < rank; ++i) {
    Perm t = identity_perm(deg);
    std::swap(t[2 * i], t[2 * i + 1]);
    gens.push_back(t);
  }
  return PermGroup(deg, gens);
}

PermGroup PermGroup::trivial() { return PermGroup(1, {}); }

void PermGroup::build() {
  const std::size_t n = elements_.size();
  if (n > 2048) {
    mult_.clear();
  } else {
    mult_.resize(n * n);
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b)
        mult_[a * n + b] = static_cast<std::uint32_t>(index_of(compose(elements_[a], elements_[b])));
  }
  inverse_.resize(n);
  exponent_ = 1;
  for (std::size_t a = 0; a < n; ++a) {
    inverse_[a] = index_of(inverse(elements_[a]));
    exponent_ = std::lcm(exponent_, perm_order(elements_[a]));
  }
  build_classes();
  build_character_table();
}

bool PermGroup::contains(const Perm& p) const {
  return std::binary_search(elements_.begin(), elements_.end(), p);
}

std::size_t PermGroup::index_of(const Perm& p) const {
  auto it = std::lower_bound(elements_.begin(), elements_.end(), p);
  if (it == elements_.end() || *it != p) throw std::out_of_range("element not in group: " + cycle_string(p));
  return static_cast<std::size_t>(it - elements_.begin());
}

std::size_t PermGroup::multiply(std::size_t a, std::size_t b) const {
  if (!mult_.empty()) return mult_[a * elements_.size() + b];
  return index_of(compose(elements_.at(a), elements_.at(b)));
}

std::size_t PermGroup::power(std::size_t a, long k) const {
  std::size_t base = k < 0 ? inverse_of(a) : a;
  long e = k < 0 ? -k : k;
  std::size_t r = 0;
  for (long i = 0; i < e; ++i) r = multiply(r, base);
  return r;
}

int PermGroup::element_order(std::size_t a) const { return perm_order(elements_.at(a)); }

bool PermGroup::is_central(std::size_t a) const {
  for (std::size_t g = 0; g < order(); ++g)
    if (multiply(a, g) != multiply(g, a)) return false;
  return true;
}

bool PermGroup::is_abelian() const { return classes_.size() == elements_.size(); }

void PermGroup::build_classes() {
  const std::size_t n = elements_.size();
  class_of_.assign(n, static_cast<std::size_t>(-1));
  classes_.clear();
  std::vector<std::size_t> gen_idx;
  for (const auto& g : generators_) gen_idx.push_back(index_of(g));
  for (std::size_t x = 0; x < n; ++x) {
    if (class_of_[x] != static_cast<std::size_t>(-1)) continue;
    ConjugacyClass cls;
    cls.representative = x;
    const std::size_t id = classes_.size();
    std::deque<std::size_t> queue{x};
    class_of_[x] = id;
    while (!queue.empty()) {
      const std::size_t y = queue.front();
      queue.pop_front();
      cls.members.push_back(y);
      for (std::size_t g : gen_idx) {
        const std::size_t z = multiply(multiply(g, y), inverse_of(g));
        if (class_of_[z] == static_cast<std::size_t>(-1)) {
          class_of_[z] = id;
          queue.push_back(z);
        }
      }
    }
    std::sort(cls.members.begin(), cls.members.end());
    classes_.push_back(std::move(cls));
  }
}

std::size_t PermGroup::conjugator(std::size_t a, std::size_t b) const {
  for (std::size_t h = 0; h < order(); ++h)
    if (multiply(multiply(h, a), inverse_of(h)) == b) return h;
  throw std::invalid_argument("elements are not conjugate");
}

PermGroup PermGroup::centralizer(std::size_t g) const {
  if (g >= order()) throw std::out_of_range("centralizer of an element outside the group");
  std::vector<Perm> members;
  for (std::size_t h = 0; h < order(); ++h)
    if (multiply(g, h) == multiply(h, g)) members.push_back(elements_[h]);
  // members inherit the sorted order; use them all as generators for conjugation
  return PermGroup(degree_, members, members);
}

std::vector<int> PermGroup::sign_character() const {
  std::vector<bool> moved(degree_, false);
  for (const auto& p : elements_)
    for (std::size_t i = 0; i < degree_; ++i)
      if (p[i] != i) moved[i] = true;
  const auto k = static_cast<std::size_t>(std::count(moved.begin(), moved.end(), true));
  std::size_t factorial = 1;
  for (std::size_t i = 2; i <= k; ++i) factorial *= i;
  if (factorial != order()) throw std::invalid_argument("group is not a full symmetric group");
  std::vector<int> values;
  for (const auto& cls : classes_) values.push_back(perm_parity(elements_[cls.representative]) ? -1 : 1);
  return values;
}

// ---------------------------------------------------------------------------
// Character table by Dixon's modular method.
//
// The class-multiplication coefficients are reduced modulo a prime p = 1 (mod
// exponent) with p > 2 sqrt|G|. Simultaneous eigenvectors of the class matrices
// over F_p give the central characters; degrees follow from the orthogonality
// relation, and each value is lifted to Z[zeta_e] through the eigenvalue
// multiplicities of the element on the representation.

namespace {

using i64 = std::int64_t;

i64 mod(i64 a, i64 p) {
  a %= p;
  return a < 0 ? a + p : a;
}

i64 powmod(i64 b, i64 e, i64 p) {
  i64 r = 1;
  b = mod(b, p);
  while (e > 0) {
    if (e & 1) r = r * b % p;
    b = b * b % p;
    e >>= 1;
  }
  return r;
}

i64 invmod(i64 a, i64 p) { return powmod(a, p - 2, p); }

bool is_prime(i64 n) {
  if (n < 2) return false;
  for (i64 d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

i64 primitive_root(i64 p) {
  std::vector<i64> factors;
  i64 m = p - 1;
  for (i64 d = 2; d * d <= m; ++d) {
    if (m % d == 0) {
      factors.push_back(d);
      while (m % d == 0) m /= d;
    }
  }
  if (m > 1) factors.push_back(m);
  for (i64 g = 2; g < p; ++g) {
    bool ok = true;
    for (i64 f : factors)
      if (powmod(g, (p - 1) / f, p) == 1) {
        ok = false;
        break;
      }
    if (ok) return g;
  }
  throw std::logic_error("no primitive root");
}

using Mat = std::vector<std::vector<i64>>;

// Basis (as columns, returned row-wise per vector) of the nullspace of m over F_p.
std::vector<std::vector<i64>> nullspace(Mat m, i64 p) {
  const std::size_t rows = m.size();
  const std::size_t cols = rows ? m[0].size() : 0;
  std::vector<int> pivot_col;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t piv = r;
    while (piv < rows && m[piv][c] == 0) ++piv;
    if (piv == rows) continue;
    std::swap(m[piv], m[r]);
    const i64 inv = invmod(m[r][c], p);
    for (auto& v : m[r]) v = v * inv % p;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || m[i][c] == 0) continue;
      const i64 f = m[i][c];
      for (std::size_t j = 0; j < cols; ++j) m[i][j] = mod(m[i][j] - f * m[r][j], p);
    }
    pivot_col.push_back(static_cast<int>(c));
    ++r;
  }
  std::vector<bool> is_pivot(cols, false);
  for (int c : pivot_col) is_pivot[c] = true;
  std::vector<std::vector<i64>> basis;
  for (std::size_t free = 0; free < cols; ++free) {
    if (is_pivot[free]) continue;
    std::vector<i64> v(cols, 0);
    v[free] = 1;
    for (std::size_t i = 0; i < pivot_col.size(); ++i) v[pivot_col[i]] = mod(-m[i][free], p);
    basis.push_back(std::move(v));
  }
  return basis;
}

// Coordinates of target in the column span of basis (vectors given row-wise).
std::vector<i64> solve_in_span(const std::vector<std::vector<i64>>& basis, const std::vector<i64>& target, i64 p) {
  const std::size_t dim = basis.size();
  const std::size_t n = target.size();
  Mat aug(n, std::vector<i64>(dim + 1));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < dim; ++j) aug[i][j] = basis[j][i];
    aug[i][dim] = target[i];
  }
  std::size_t r = 0;
  std::vector<std::size_t> pivots;
  for (std::size_t c = 0; c < dim; ++c) {
    std::size_t piv = r;
    while (piv < n && aug[piv][c] == 0) ++piv;
    if (piv == n) throw std::logic_error("dependent basis in eigenspace splitting");
    std::swap(aug[piv], aug[r]);
    const i64 inv = invmod(aug[r][c], p);
    for (auto& v : aug[r]) v = v * inv % p;
    for (std::size_t i = 0; i < n; ++i) {
      if (i == r || aug[i][c] == 0) continue;
      const i64 f = aug[i][c];
      for (std::size_t j = 0; j <= dim; ++j) aug[i][j] = mod(aug[i][j] - f * aug[r][j], p);
    }
    pivots.push_back(c);
    ++r;
  }
  for (std::size_t i = r; i < n; ++i)
    if (aug[i][dim] != 0) throw std::logic_error("eigenspace is not invariant");
  std::vector<i64> coords(dim);
  for (std::size_t i = 0; i < dim; ++i) coords[pivots[i]] = aug[i][dim];
  return coords;
}

}  // namespace

void PermGroup::build_character_table() {
  const std::size_t r = classes_.size();
  const auto g_order = static_cast<i64>(order());
  table_ = CharTable{};
  table_.cyclotomic_order = exponent_;
  for (const auto& c : classes_) table_.class_sizes.push_back(c.size());

  i64 p = exponent_ + 1;
  const auto bound = static_cast<i64>(2.0 * std::sqrt(static_cast<double>(g_order))) + 1;
  while (!(is_prime(p) && p > bound && g_order % p != 0)) p += exponent_;

  // A[i][j][k] = #{x in C_i : x^-1 z_k in C_j}
  std::vector<Mat> a(r, Mat(r, std::vector<i64>(r, 0)));
  for (std::size_t k = 0; k < r; ++k) {
    const std::size_t z = classes_[k].representative;
    for (std::size_t x = 0; x < order(); ++x) {
      const std::size_t y = multiply(inverse_of(x), z);
      ++a[class_of_[x]][class_of_[y]][k];
    }
  }
  for (auto& m : a)
    for (auto& row : m)
      for (auto& v : row) v %= p;

  std::vector<std::vector<std::vector<i64>>> spaces;
  {
    std::vector<std::vector<i64>> full;
    for (std::size_t i = 0; i < r; ++i) {
      std::vector<i64> e(r, 0);
      e[i] = 1;
      full.push_back(e);
    }
    spaces.push_back(full);
  }
  for (std::size_t i = 1; i < r; ++i) {
    bool all_lines = std::all_of(spaces.begin(), spaces.end(), [](const auto& s) { return s.size() == 1; });
    if (all_lines) break;
    std::vector<std::vector<std::vector<i64>>> next;
    for (auto& space : spaces) {
      if (space.size() == 1) {
        next.push_back(space);
        continue;
      }
      const std::size_t dim = space.size();
      Mat restricted(dim, std::vector<i64>(dim));
      for (std::size_t t = 0; t < dim; ++t) {
        std::vector<i64> image(r, 0);
        for (std::size_t row = 0; row < r; ++row) {
          i64 s = 0;
          for (std::size_t col = 0; col < r; ++col) s = (s + a[i][row][col] * space[t][col]) % p;
          image[row] = s;
        }
        auto coords = solve_in_span(space, image, p);
        for (std::size_t u = 0; u < dim; ++u) restricted[u][t] = coords[u];
      }
      std::size_t found = 0;
      for (i64 lambda = 0; lambda < p && found < dim; ++lambda) {
        Mat shifted = restricted;
        for (std::size_t u = 0; u < dim; ++u) shifted[u][u] = mod(shifted[u][u] - lambda, p);
        auto ns = nullspace(shifted, p);
        if (ns.empty()) continue;
        std::vector<std::vector<i64>> sub;
        for (const auto& c : ns) {
          std::vector<i64> v(r, 0);
          for (std::size_t u = 0; u < dim; ++u)
            for (std::size_t row = 0; row < r; ++row) v[row] = (v[row] + c[u] * space[u][row]) % p;
          sub.push_back(v);
        }
        found += sub.size();
        next.push_back(std::move(sub));
      }
      if (found != dim) throw std::logic_error("class matrix does not split over F_p");
    }
    spaces = std::move(next);
  }
  if (spaces.size() != r) throw std::logic_error("character table computation did not separate all characters");

  // Power maps for the lifting step.
  std::vector<std::size_t> inv_class(r);
  for (std::size_t k = 0; k < r; ++k) inv_class[k] = class_of_[inverse_of(classes_[k].representative)];

  const i64 zeta = powmod(primitive_root(p), (p - 1) / exponent_, p);
  std::vector<std::vector<Cyclotomic>> rows;
  for (const auto& space : spaces) {
    std::vector<i64> w = space[0];
    const i64 norm = invmod(w[0], p);  // class 0 is the identity
    for (auto& v : w) v = v * norm % p;
    i64 s = 0;
    for (std::size_t k = 0; k < r; ++k)
      s = (s + w[k] * w[inv_class[k]] % p * invmod(static_cast<i64>(classes_[k].size()) % p, p)) % p;
    const i64 deg_sq = g_order % p * invmod(s, p) % p;
    i64 deg = 0;
    for (i64 d = 1; d * d <= g_order; ++d)
      if (d * d % p == deg_sq) {
        deg = d;
        break;
      }
    if (deg == 0) throw std::logic_error("could not recover a character degree");
    std::vector<i64> values(r);
    for (std::size_t k = 0; k < r; ++k)
      values[k] = w[k] * deg % p * invmod(static_cast<i64>(classes_[k].size()) % p, p) % p;

    std::vector<Cyclotomic> row;
    for (std::size_t k = 0; k < r; ++k) {
      const std::size_t g = classes_[k].representative;
      const int o = element_order(g);
      const int step = exponent_ / o;
      std::vector<i64> power_values(o);
      std::size_t gp = 0;
      for (int j = 0; j < o; ++j) {
        power_values[j] = values[class_of_[gp]];
        gp = multiply(gp, g);
      }
      Cyclotomic value(exponent_);
      const i64 inv_o = invmod(o, p);
      for (int t = 0; t < o; ++t) {
        i64 m = 0;
        for (int j = 0; j < o; ++j) {
          const i64 root = powmod(zeta, static_cast<i64>(exponent_) - static_cast<i64>(step) * j * t % exponent_, p);
          m = (m + power_values[j] * root) % p;
        }
        m = m * inv_o % p;
        if (m > deg) throw std::logic_error("eigenvalue multiplicity out of range");
        if (m != 0) value += Cyclotomic::root_of_unity(exponent_, step * t) * m;
      }
      row.push_back(value);
    }
    rows.push_back(std::move(row));
  }
  std::sort(rows.begin(), rows.end(), [](const auto& x, const auto& y) {
    const bool tx = std::all_of(x.begin(), x.end(), [](const Cyclotomic& c) { return c.as_integer() == 1; });
    const bool ty = std::all_of(y.begin(), y.end(), [](const Cyclotomic& c) { return c.as_integer() == 1; });
    if (tx != ty) return tx;
    const auto dx = x[0].as_integer().value_or(0), dy = y[0].as_integer().value_or(0);
    if (dx != dy) return dx < dy;
    return std::lexicographical_compare(x.begin(), x.end(), y.begin(), y.end());
  });
  table_.rows = std::move(rows);
}

nlohmann::json to_json(const PermGroup& g) {
  nlohmann::json j;
  nlohmann::json classes = nlohmann::json::array(), sizes = nlohmann::json::array();
  for (const auto& c : g.classes()) {
    classes.push_back(cycle_string(g.element(c.representative)));
    sizes.push_back(c.size());
  }
  nlohmann::json rows = nlohmann::json::array();
  for (const auto& row : g.character_table().rows) {
    nlohmann::json r = nlohmann::json::array();
    for (const auto& v : row) r.push_back(v.to_string());
    rows.push_back(r);
  }
  j["classes"] = classes;
  j["sizes"] = sizes;
  j["rows"] = rows;
  return j;
}

}  // namespace uflip
