#include "uflip/coxeter.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <stdexcept>

#include "uflip/error.hpp"
#include "uflip/rational.hpp"

namespace uflip {

IntMatrix cartan_matrix(const std::string& type, int rank) {
  auto chain = [](int n) {
    IntMatrix a(n, std::vector<int>(n, 0));
    for (int i = 0; i < n; ++i) {
      a[i][i] = 2;
      if (i + 1 < n) a[i][i + 1] = a[i + 1][i] = -1;
    }
    return a;
  };
  if (type == "A" || type == "A1") {
    if (rank < 1) throw std::invalid_argument("rank must be positive");
    return chain(rank);
  }
  if (type == "B" || type == "C") {
    if (rank < 1) throw std::invalid_argument("rank must be positive");
    IntMatrix a = chain(rank);
    if (rank >= 2) {
      // alpha_n short in B, long in C
      if (type == "B") a[rank - 1][rank - 2] = -2;
      else a[rank - 2][rank - 1] = -2;
    }
    return a;
  }
  if (type == "D") {
    if (rank < 4) throw std::invalid_argument("type D needs rank at least 4");
    IntMatrix a = chain(rank);
    a[rank - 2][rank - 1] = a[rank - 1][rank - 2] = 0;
    a[rank - 3][rank - 1] = a[rank - 1][rank - 3] = -1;
    return a;
  }
  if (type == "G2" || (type == "G" && rank == 2)) return {{2, -3}, {-1, 2}};
  if (type == "F4" || (type == "F" && rank == 4)) return {{2, -1, 0, 0}, {-1, 2, -1, 0}, {0, -2, 2, -1}, {0, 0, -1, 2}};
  throw std::invalid_argument("no Cartan matrix for type " + type);
}

namespace {

std::vector<int> reflect(const IntMatrix& a, int i, std::vector<int> beta) {
  int pairing = 0;
  for (std::size_t j = 0; j < beta.size(); ++j) pairing += a[i][j] * beta[j];
  beta[i] -= pairing;
  return beta;
}

bool is_positive(const std::vector<int>& r) {
  return std::all_of(r.begin(), r.end(), [](int x) { return x >= 0; });
}

int height(const std::vector<int>& r) {
  int h = 0;
  for (int x : r) h += x;
  return h;
}

RatPoly determinant(std::vector<std::vector<RatPoly>> m) {
  const std::size_t n = m.size();
  if (n == 0) return RatPoly(1);
  if (n == 1) return m[0][0];
  RatPoly total;
  for (std::size_t j = 0; j < n; ++j) {
    if (m[0][j] == RatPoly()) continue;
    std::vector<std::vector<RatPoly>> minor;
    for (std::size_t i = 1; i < n; ++i) {
      std::vector<RatPoly> row;
      for (std::size_t k = 0; k < n; ++k)
        if (k != j) row.push_back(m[i][k]);
      minor.push_back(std::move(row));
    }
    const RatPoly term = m[0][j] * determinant(std::move(minor));
    total = (j % 2 == 0) ? total + term : total - term;
  }
  return total;
}

}  // namespace

CoxeterGroup::CoxeterGroup(IntMatrix cartan, std::size_t max_order) : cartan_(std::move(cartan)) {
  const int r = rank();
  for (const auto& row : cartan_)
    if (static_cast<int>(row.size()) != r) throw std::invalid_argument("Cartan matrix must be square");

  // root lengths from the symmetrised form: len_i A_ij = len_j A_ji
  std::vector<Rat> len(r, Rat(0));
  for (int start = 0; start < r; ++start) {
    if (!len[start].is_zero()) continue;
    len[start] = Rat(1);
    std::deque<int> queue{start};
    while (!queue.empty()) {
      const int i = queue.front();
      queue.pop_front();
      for (int j = 0; j < r; ++j)
        if (j != i && cartan_[i][j] != 0 && len[j].is_zero()) {
          len[j] = len[i] * Rat(cartan_[i][j], cartan_[j][i]);
          queue.push_back(j);
        }
    }
  }
  const Rat longest_len = *std::max_element(len.begin(), len.end());
  for (int i = 0; i < r; ++i) long_.push_back(len[i] == longest_len);

  // root system as the orbit of the simple roots
  std::vector<std::vector<int>> simple(r, std::vector<int>(r, 0));
  for (int i = 0; i < r; ++i) simple[i][i] = 1;
  std::map<std::vector<int>, int> seen;
  std::vector<std::vector<int>> all;
  std::deque<std::vector<int>> queue(simple.begin(), simple.end());
  for (const auto& s : simple) seen[s] = 0;
  while (!queue.empty()) {
    auto beta = queue.front();
    queue.pop_front();
    all.push_back(beta);
    for (int i = 0; i < r; ++i) {
      auto img = reflect(cartan_, i, beta);
      if (seen.emplace(img, 0).second) queue.push_back(std::move(img));
    }
  }
  std::vector<std::vector<int>> positive;
  for (const auto& x : all)
    if (is_positive(x) && height(x) > 1) positive.push_back(x);
  std::sort(positive.begin(), positive.end(), [](const auto& x, const auto& y) {
    return height(x) != height(y) ? height(x) < height(y) : x < y;
  });
  roots_ = simple;
  roots_.insert(roots_.end(), positive.begin(), positive.end());
  const std::size_t npos = roots_.size();
  if (npos * 2 != all.size()) throw IntegrityError("root system is not symmetric");
  for (std::size_t k = 0; k < npos; ++k) {
    auto neg = roots_[k];
    for (int& x : neg) x = -x;
    roots_.push_back(neg);
  }
  if (roots_.size() > 255) throw GateError("root system too large");
  std::map<std::vector<int>, std::size_t> root_index;
  for (std::size_t k = 0; k < roots_.size(); ++k) root_index[roots_[k]] = k;

  std::vector<Perm> gens(r, Perm(roots_.size()));
  for (int i = 0; i < r; ++i)
    for (std::size_t k = 0; k < roots_.size(); ++k)
      gens[i][k] = static_cast<std::uint8_t>(root_index.at(reflect(cartan_, i, roots_[k])));

  // breadth-first enumeration by left multiplication
  std::map<Perm, std::size_t> index;
  elements_.push_back(identity_perm(roots_.size()));
  length_.push_back(0);
  index[elements_[0]] = 0;
  for (std::size_t w = 0; w < elements_.size(); ++w) {
    for (int s = 0; s < r; ++s) {
      Perm p(roots_.size());
      for (std::size_t k = 0; k < p.size(); ++k) p[k] = gens[s][elements_[w][k]];
      if (index.count(p)) continue;
      if (elements_.size() >= max_order) throw GateError("Coxeter group exceeds the order limit");
      index.emplace(p, elements_.size());
      elements_.push_back(std::move(p));
      length_.push_back(length_[w] + 1);
    }
  }
  for (const auto& [p, i] : index) {
    sorted_.push_back(p);
    sorted_index_.push_back(i);
  }
  lmul_.assign(r, std::vector<std::size_t>(order()));
  rmul_.assign(r, std::vector<std::size_t>(order()));
  for (std::size_t w = 0; w < order(); ++w)
    for (int s = 0; s < r; ++s) {
      Perm left(roots_.size()), right(roots_.size());
      for (std::size_t k = 0; k < left.size(); ++k) {
        left[k] = gens[s][elements_[w][k]];
        right[k] = elements_[w][gens[s][k]];
      }
      lmul_[s][w] = index_of(left);
      rmul_[s][w] = index_of(right);
    }
  longest_ = static_cast<std::size_t>(std::max_element(length_.begin(), length_.end()) - length_.begin());
  if (length_[longest_] != num_positive_roots()) throw IntegrityError("length of the longest element is wrong");
}

std::size_t CoxeterGroup::index_of(const Perm& p) const {
  auto it = std::lower_bound(sorted_.begin(), sorted_.end(), p);
  if (it == sorted_.end() || *it != p) throw std::out_of_range("not an element of the Coxeter group");
  return sorted_index_[it - sorted_.begin()];
}

std::size_t CoxeterGroup::multiply(std::size_t a, std::size_t b) const {
  return index_of(compose(elements_.at(a), elements_.at(b)));
}

std::size_t CoxeterGroup::inverse(std::size_t w) const { return index_of(uflip::inverse(elements_.at(w))); }

std::size_t CoxeterGroup::from_word(const std::vector<int>& word) const {
  std::size_t w = identity();
  for (int s : word) {
    if (s < 0 || s >= rank()) throw std::invalid_argument("generator index out of range");
    w = right_multiply(w, s);
  }
  return w;
}

std::vector<int> CoxeterGroup::reduced_word(std::size_t w) const {
  std::vector<int> word;
  while (length(w) > 0) {
    for (int s = 0; s < rank(); ++s) {
      const std::size_t sw = left_multiply(s, w);
      if (length(sw) < length(w)) {
        word.push_back(s);
        w = sw;
        break;
      }
    }
  }
  return word;
}

IntMatrix CoxeterGroup::matrix(std::size_t w) const {
  const int r = rank();
  IntMatrix m(r, std::vector<int>(r, 0));
  for (int j = 0; j < r; ++j) {
    const auto& img = roots_[elements_.at(w)[j]];
    for (int i = 0; i < r; ++i) m[i][j] = img[i];
  }
  return m;
}

RatPoly CoxeterGroup::det_one_minus_qw(std::size_t w) const {
  const IntMatrix m = matrix(w);
  const int r = rank();
  std::vector<std::vector<RatPoly>> a(r, std::vector<RatPoly>(r));
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < r; ++j) a[i][j] = RatPoly::monomial(1).scaled(Rat(-m[i][j])) + RatPoly(i == j ? 1 : 0);
  return determinant(std::move(a));
}

PermGroup CoxeterGroup::perm_group() const {
  std::vector<Perm> gens;
  for (int s = 0; s < rank(); ++s) gens.push_back(elements_[left_multiply(s, identity())]);
  return PermGroup(roots_.size(), gens);
}

}  // namespace uflip
