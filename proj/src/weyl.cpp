#include "uflip/weyl.hpp"

#include <algorithm>
#include <map>
#include <nlohmann/json.hpp>
#include <stdexcept>

#include "uflip/error.hpp"

namespace uflip {

namespace {

// Partitions compared by size, then lexicographically on decreasing parts.
bool partition_less(const Partition& a, const Partition& b) {
  const int sa = partition_size(a), sb = partition_size(b);
  return sa != sb ? sa < sb : a < b;
}

std::vector<int> reduced_word_of(SignedPerm w, bool type_d) {
  const int n = w.rank();
  auto length = [type_d](const SignedPerm& x) { return type_d ? x.length_d() : x.length_b(); };
  std::vector<int> word;
  while (length(w) > 0) {
    for (int i = 1; i <= n; ++i) {
      const SignedPerm sw = SignedPerm::simple_reflection(n, i, type_d) * w;
      if (length(sw) < length(w)) {
        word.push_back(i);
        w = sw;
        break;
      }
    }
  }
  return word;
}

std::string word_label(const std::vector<int>& word) {
  if (word.empty()) return "e";
  std::string s;
  for (int i : word) s += std::to_string(i);
  return s;
}

}  // namespace

std::string bipartition_label(const Partition& alpha, const Partition& beta, int split) {
  std::string s = partition_string(alpha) + "." + partition_string(beta);
  if (split != 0) s += split > 0 ? "+" : "-";
  return s;
}

std::shared_ptr<const WeylGroup> WeylGroup::build(const std::string& type, int rank) {
  std::shared_ptr<WeylGroup> w(new WeylGroup());
  std::string t = type;
  if (t == "G2") t = "G", rank = rank == 0 ? 2 : rank;
  if (t == "F4") t = "F", rank = rank == 0 ? 4 : rank;
  if (t == "A") {
    if (rank != 1) throw std::invalid_argument("type A is supported in rank 1 only (as B1)");
    t = "B";
  }
  w->type_ = t;
  w->rank_ = rank;
  if (t == "B" || t == "C") {
    if (rank < 1) throw std::invalid_argument("rank must be at least 1");
    if (rank > 8) throw GateError("classical rank above 8 is not supported");
    for (int i = 1; i <= rank; ++i) w->degrees_.push_back(2 * i);
    w->build_classical();
  } else if (t == "D") {
    if (rank < 4 || rank % 2 != 0) throw std::invalid_argument("type D needs an even rank of at least 4");
    if (rank > 8) throw GateError("classical rank above 8 is not supported");
    for (int i = 1; i < rank; ++i) w->degrees_.push_back(2 * i);
    w->degrees_.push_back(rank);
    std::sort(w->degrees_.begin(), w->degrees_.end());
    w->build_classical();
  } else if (t == "G" && rank == 2) {
    w->degrees_ = {2, 6};
    w->build_exceptional();
  } else if (t == "F" && rank == 4) {
    w->degrees_ = {2, 6, 8, 12};
    w->build_exceptional();
  } else {
    throw std::invalid_argument("unsupported type " + type + std::to_string(rank));
  }
  w->finish();
  return w;
}

void WeylGroup::build_classical() {
  const int n = rank_;
  const bool d = is_type_d();
  order_ = d ? order_d(n) : order_b(n);
  signed_classes_ = classical_classes(n, d);
  for (const auto& c : signed_classes_) {
    WeylClass wc;
    wc.label = c.to_string();
    wc.size = class_size(c, d);
    wc.det = det_one_minus_qw(c);
    wc.word = reduced_word_of(representative(c), d);
    classes_.push_back(std::move(wc));
  }
  auto class_index = [&](const SignedCycleType& c) {
    auto it = std::find(signed_classes_.begin(), signed_classes_.end(), c);
    if (it == signed_classes_.end()) throw IntegrityError("unknown class " + c.to_string());
    return static_cast<std::size_t>(it - signed_classes_.begin());
  };
  const SignedPerm w0 = SignedPerm::longest(n);
  for (std::size_t i = 0; i < signed_classes_.size(); ++i)
    classes_[i].times_w0 = class_index(cycle_type(representative(signed_classes_[i]) * w0, d));
  identity_class_ = class_index(cycle_type(SignedPerm::identity(n), d));
  w0_class_ = class_index(cycle_type(w0, d));

  auto values_of = [&](const Partition& a, const Partition& b) {
    std::vector<std::int64_t> v;
    for (const auto& c : signed_classes_) v.push_back(hyperoctahedral_character(a, b, c.pos, c.neg));
    return v;
  };

  std::vector<std::pair<Partition, Partition>> bips;
  for (int k = 0; k <= n; ++k)
    for (const auto& a : partitions(n - k))
      for (const auto& b : partitions(k)) bips.emplace_back(a, b);

  if (!d) {
    for (const auto& [a, b] : bips) {
      WeylIrr e;
      e.alpha = a;
      e.beta = b;
      e.label = bipartition_label(a, b);
      e.values = values_of(a, b);
      irrs_.push_back(std::move(e));
    }
    trivial_label_ = bipartition_label({n}, {});
    sign_label_ = bipartition_label({}, Partition(n, 1));
    return;
  }
  for (const auto& [a, b] : bips) {
    if (partition_less(a, b)) continue;  // {a, b} is listed once, larger first
    if (a != b) {
      WeylIrr e;
      e.alpha = a;
      e.beta = b;
      e.label = bipartition_label(a, b);
      e.values = values_of(a, b);
      irrs_.push_back(std::move(e));
      continue;
    }
    // (a, a) restricts to a sum of two irreducibles differing on split classes
    const std::vector<std::int64_t> restricted = values_of(a, a);
    for (int s : {1, -1}) {
      WeylIrr e;
      e.alpha = a;
      e.beta = a;
      e.split = s;
      e.label = bipartition_label(a, a, s);
      for (std::size_t c = 0; c < signed_classes_.size(); ++c) {
        const auto& cl = signed_classes_[c];
        std::int64_t delta = 0;
        if (cl.split != 0) {
          Partition half;
          for (int k : cl.pos) half.push_back(k / 2);
          delta = cl.split * (std::int64_t{1} << half.size()) * symmetric_character(a, half);
        }
        const std::int64_t twice = restricted[c] + s * delta;
        if (twice % 2 != 0) throw SplitClassError("split character value is not an integer on " + cl.to_string());
        e.values.push_back(twice / 2);
      }
      irrs_.push_back(std::move(e));
    }
  }
  trivial_label_ = bipartition_label({n}, {});
  // sign of W(D_n) is the restriction of ((1^n), ())
  sign_label_ = bipartition_label(Partition(n, 1), {});
}

void WeylGroup::build_exceptional() {
  coxeter_ = std::make_shared<CoxeterGroup>(cartan_matrix(type_ + std::to_string(rank_), rank_));
  perm_ = std::make_shared<PermGroup>(coxeter_->perm_group());
  order_ = static_cast<std::int64_t>(perm_->order());
  if (static_cast<std::size_t>(order_) != coxeter_->order()) throw IntegrityError("Weyl group order mismatch");
  const auto& pclasses = perm_->classes();

  // order classes by the first appearance of a member in length order
  std::vector<std::size_t> first_seen(pclasses.size(), coxeter_->order());
  for (std::size_t w = 0; w < coxeter_->order(); ++w) {
    const std::size_t c = perm_->class_of(coxeter_->root_permutation(w));
    if (first_seen[c] == coxeter_->order()) first_seen[c] = w;
  }
  std::vector<std::size_t> order_of_classes(pclasses.size());
  for (std::size_t i = 0; i < order_of_classes.size(); ++i) order_of_classes[i] = i;
  std::sort(order_of_classes.begin(), order_of_classes.end(),
            [&](std::size_t a, std::size_t b) { return first_seen[a] < first_seen[b]; });
  perm_class_to_class_.assign(pclasses.size(), 0);
  for (std::size_t k = 0; k < order_of_classes.size(); ++k) {
    const std::size_t pc = order_of_classes[k];
    perm_class_to_class_[pc] = k;
    WeylClass wc;
    const std::size_t w = first_seen[pc];
    wc.word = coxeter_->reduced_word(w);
    for (int& s : wc.word) ++s;
    wc.label = word_label(wc.word);
    wc.size = static_cast<std::int64_t>(pclasses[pc].size());
    wc.det = coxeter_->det_one_minus_qw(w);
    classes_.push_back(std::move(wc));
  }
  const std::size_t w0 = perm_->index_of(coxeter_->root_permutation(coxeter_->longest()));
  for (std::size_t pc = 0; pc < pclasses.size(); ++pc) {
    const std::size_t prod = perm_->multiply(pclasses[pc].representative, w0);
    classes_[perm_class_to_class_[pc]].times_w0 = perm_class_to_class_[perm_->class_of(prod)];
  }
  identity_class_ = perm_class_to_class_[perm_->class_of(std::size_t{0})];
  w0_class_ = perm_class_to_class_[perm_->class_of(w0)];

  const auto& table = perm_->character_table();
  for (const auto& row : table.rows) {
    WeylIrr e;
    e.values.assign(classes_.size(), 0);
    for (std::size_t pc = 0; pc < row.size(); ++pc) {
      const auto v = row[pc].as_integer();
      if (!v) throw IntegrityError("Weyl group character with an irrational value");
      e.values[perm_class_to_class_[pc]] = *v;
    }
    irrs_.push_back(std::move(e));
  }
}

void WeylGroup::finish() {
  nu_ = 0;
  for (int dj : degrees_) nu_ += dj - 1;
  for (auto& e : irrs_) {
    e.dim = e.values.at(identity_class_);
    std::vector<Rat> v(e.values.begin(), e.values.end());
    e.fake_degree = molien(v);
    e.b = e.fake_degree.valuation();
  }
  if (!is_classical()) {
    // phi_{dim,b}; of two irreducibles sharing (dim, b) the primed one has the
    // larger value on a reflection in a long root, then the smaller value on a
    // reflection in a short root, then the larger value on the first class
    // where they differ
    std::size_t long_class = 0, short_class = 0;
    for (int s = 0; s < rank_; ++s) {
      const std::size_t c = class_of_word({s + 1});
      (coxeter_->is_long(s) ? long_class : short_class) = c;
    }
    std::map<std::pair<std::int64_t, int>, std::vector<std::size_t>> groups;
    for (std::size_t i = 0; i < irrs_.size(); ++i) groups[{irrs_[i].dim, irrs_[i].b}].push_back(i);
    for (auto& [key, ids] : groups) {
      const std::string base = "phi" + std::to_string(key.first) + "," + std::to_string(key.second);
      if (ids.size() == 1) {
        irrs_[ids[0]].label = base;
        continue;
      }
      if (ids.size() != 2) throw IntegrityError("more than two irreducibles share " + base);
      auto& x = irrs_[ids[0]];
      auto& y = irrs_[ids[1]];
      std::vector<std::int64_t> kx{x.values[long_class], -x.values[short_class]};
      std::vector<std::int64_t> ky{y.values[long_class], -y.values[short_class]};
      kx.insert(kx.end(), x.values.begin(), x.values.end());
      ky.insert(ky.end(), y.values.begin(), y.values.end());
      if (kx == ky) throw IntegrityError("cannot separate the pair " + base);
      x.label = base + (kx > ky ? "'" : "''");
      y.label = base + (kx > ky ? "''" : "'");
    }
    trivial_label_ = "phi1,0";
    sign_label_ = "phi1," + std::to_string(nu_);
  }
  std::stable_sort(irrs_.begin(), irrs_.end(), [](const WeylIrr& a, const WeylIrr& b) {
    return a.b != b.b ? a.b < b.b : a.label < b.label;
  });
}

std::size_t WeylGroup::find_class(const std::string& label) const {
  for (std::size_t i = 0; i < classes_.size(); ++i)
    if (classes_[i].label == label) return i;
  throw std::invalid_argument("no class labelled " + label + " in " + name());
}

std::size_t WeylGroup::find_irreducible(const std::string& label) const {
  for (std::size_t i = 0; i < irrs_.size(); ++i)
    if (irrs_[i].label == label) return i;
  throw std::invalid_argument("no irreducible labelled " + label + " in " + name());
}

std::size_t WeylGroup::class_of_word(const std::vector<int>& word) const {
  for (int s : word)
    if (s < 1 || s > rank_) throw std::invalid_argument("generator index out of range in word");
  if (is_classical()) {
    SignedPerm w = SignedPerm::identity(rank_);
    for (int s : word) w = w * SignedPerm::simple_reflection(rank_, s, is_type_d());
    const auto c = cycle_type(w, is_type_d());
    return static_cast<std::size_t>(std::find(signed_classes_.begin(), signed_classes_.end(), c) -
                                    signed_classes_.begin());
  }
  std::vector<int> zero_based(word);
  for (int& s : zero_based) --s;
  const std::size_t w = coxeter_->from_word(zero_based);
  return perm_class_to_class_[perm_->class_of(coxeter_->root_permutation(w))];
}

std::size_t WeylGroup::power_class(std::size_t c, int k) const {
  if (is_classical()) {
    const auto t = cycle_type(representative(signed_classes_.at(c)).power(k), is_type_d());
    return static_cast<std::size_t>(std::find(signed_classes_.begin(), signed_classes_.end(), t) -
                                    signed_classes_.begin());
  }
  std::size_t pc = 0;
  while (perm_class_to_class_[pc] != c) ++pc;
  return perm_class_to_class_[perm_->class_of(perm_->power(perm_->classes()[pc].representative, k))];
}

Rat WeylGroup::inner_product(const std::vector<Rat>& f, const std::vector<Rat>& g) const {
  Rat s;
  for (std::size_t c = 0; c < classes_.size(); ++c) s += Rat(classes_[c].size) * f.at(c) * g.at(c);
  return s / Rat(order_);
}

RatPoly WeylGroup::molien(const std::vector<Rat>& values) const {
  const int top = nu_ + 2;
  // sum over classes of |C| f(c) / det(1 - q w) as a truncated power series
  std::vector<Rat> series(top + 1);
  for (std::size_t c = 0; c < classes_.size(); ++c) {
    if (values.at(c).is_zero()) continue;
    const RatPoly& det = classes_[c].det;
    std::vector<Rat> inv(top + 1);
    inv[0] = Rat(1);
    for (int k = 1; k <= top; ++k) {
      Rat s;
      for (const auto& [e, coeff] : det.terms())
        if (e >= 1 && e <= k) s += coeff * inv[k - e];
      inv[k] = -s;
    }
    const Rat weight = Rat(classes_[c].size) * values[c];
    for (int k = 0; k <= top; ++k) series[k] += weight * inv[k];
  }
  RatPoly numer;
  for (int k = 0; k <= top; ++k) numer.add_term(k, series[k]);
  RatPoly prod(1);
  for (int dj : degrees_) prod = prod * (RatPoly(1) - RatPoly::monomial(dj));
  RatPoly full = numer * prod;
  RatPoly out;
  for (const auto& [e, coeff] : full.terms()) {
    if (e > top) continue;
    if (e > nu_) throw IntegrityError("graded multiplicity has terms above degree nu");
    out.add_term(e, coeff / Rat(order_));
  }
  return out;
}

RatPoly WeylGroup::poincare_polynomial() const {
  RatPoly p(1);
  for (int dj : degrees_) p = p * RatPoly::geometric(dj);
  return p;
}

bool WeylGroup::fake_degree_parity_check(std::size_t irr) const {
  const auto& e = irrs_.at(irr);
  for (const auto& [exp, coeff] : e.fake_degree.terms())
    if ((exp - e.b) % 2 != 0) return false;
  return true;
}

Symbol WeylGroup::symbol(std::size_t irr) const {
  if (!is_classical()) throw std::invalid_argument("symbols exist for classical types only");
  const auto& e = irrs_.at(irr);
  return symbol_of_bipartition(e.alpha, e.beta, is_type_d() ? 0 : 1, rank_);
}

std::shared_ptr<const CoxeterGroup> WeylGroup::coxeter() const {
  if (coxeter_) return coxeter_;
  return std::make_shared<CoxeterGroup>(cartan_matrix(type_, rank_));
}

nlohmann::json character_table_json(const WeylGroup& w) {
  nlohmann::json j;
  j["type"] = w.name();
  j["order"] = w.order();
  j["degrees"] = w.degrees();
  j["nu"] = w.nu();
  nlohmann::json classes = nlohmann::json::array();
  for (const auto& c : w.classes())
    classes.push_back({{"label", c.label}, {"size", c.size}, {"word", c.word}});
  j["classes"] = classes;
  nlohmann::json irrs = nlohmann::json::array();
  for (const auto& e : w.irreducibles())
    irrs.push_back({{"label", e.label},
                    {"dim", e.dim},
                    {"b", e.b},
                    {"values", e.values},
                    {"fake_degree", to_json(e.fake_degree)}});
  j["irreducibles"] = irrs;
  return j;
}

bool verify_orthogonality(const WeylGroup& w, nlohmann::json* cex) {
  const auto& irrs = w.irreducibles();
  std::vector<std::vector<Rat>> vals;
  for (const auto& e : irrs) {
    std::vector<Rat> v;
    for (auto x : e.values) v.push_back(Rat(x));
    vals.push_back(std::move(v));
  }
  for (std::size_t i = 0; i < irrs.size(); ++i)
    for (std::size_t j = i; j < irrs.size(); ++j) {
      const Rat ip = w.inner_product(vals[i], vals[j]);
      if (ip != Rat(i == j ? 1 : 0)) {
        if (cex) *cex = {{"E", irrs[i].label}, {"F", irrs[j].label}, {"inner_product", ip.to_string()}};
        return false;
      }
    }
  return true;
}

bool verify_poincare(const WeylGroup& w, nlohmann::json* cex) {
  RatPoly lhs;
  for (const auto& e : w.irreducibles()) lhs += e.fake_degree.scaled(Rat(e.dim));
  const RatPoly rhs = w.poincare_polynomial();
  if (lhs == rhs) return true;
  if (cex) *cex = {{"sum", lhs.to_string("q")}, {"poincare", rhs.to_string("q")}};
  return false;
}

bool verify_fake_degrees(const WeylGroup& w, nlohmann::json* cex) {
  for (std::size_t i = 0; i < w.irreducibles().size(); ++i) {
    const auto& e = w.irreducibles()[i];
    const RatPoly flipped = e.fake_degree.substitute_neg();
    const RatPoly expected = (e.b % 2 == 0) ? e.fake_degree : -e.fake_degree;
    const bool parity = w.fake_degree_parity_check(i) && flipped == expected;
    const bool w0 = w.character_value(i, w.w0_class()) == ((e.b % 2 == 0) ? e.dim : -e.dim);
    const bool at_one = e.fake_degree.evaluate(Rat(1)) == Rat(e.dim);
    if (!parity || !w0 || !at_one) {
      if (cex)
        *cex = {{"E", e.label}, {"b", e.b}, {"fake_degree", e.fake_degree.to_string("q")}, {"parity", parity},
                {"w0", w0}, {"at_one", at_one}};
      return false;
    }
  }
  return verify_poincare(w, cex);
}

}  // namespace uflip
