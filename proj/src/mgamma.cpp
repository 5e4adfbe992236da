#include "uflip/mgamma.hpp"

#include <algorithm>
#include <nlohmann/json.hpp>
#include <stdexcept>

#include "uflip/error.hpp"

namespace uflip {

namespace {
constexpr std::size_t kNone = static_cast<std::size_t>(-1);
}

MGamma::MGamma(PermGroup gamma, std::string name) : gamma_(std::move(gamma)), name_(std::move(name)) {
  const auto& classes = gamma_.classes();
  for (std::size_t c = 0; c < classes.size(); ++c) {
    centralizers_.push_back(std::make_unique<PermGroup>(gamma_.centralizer(classes[c].representative)));
    const PermGroup& z = *centralizers_.back();
    std::vector<std::size_t> map(gamma_.order(), kNone);
    for (std::size_t h = 0; h < gamma_.order(); ++h)
      if (z.contains(gamma_.element(h))) map[h] = z.class_of(gamma_.element(h));
    zclass_.push_back(std::move(map));
    for (std::size_t r = 0; r < z.character_table().num_irreducibles(); ++r) elements_.push_back({c, r});
  }
  sums_.assign(elements_.size(), std::vector<Cyclotomic>(elements_.size()));
  for (std::size_t i = 0; i < elements_.size(); ++i)
    for (std::size_t j = i; j < elements_.size(); ++j) {
      sums_[i][j] = pairing_sum(elements_[i], elements_[j]);
      sums_[j][i] = sums_[i][j];
      rational_ = rational_ && sums_[i][j].as_integer().has_value();
    }
}

std::size_t MGamma::index_of(const MGammaElt& x) const {
  auto it = std::lower_bound(elements_.begin(), elements_.end(), x);
  if (it == elements_.end() || *it != x) throw std::out_of_range("not an element of M(Gamma)");
  return static_cast<std::size_t>(it - elements_.begin());
}

Cyclotomic MGamma::rho_at(std::size_t g_class, std::size_t rho, std::size_t gamma_element) const {
  const std::size_t zc = zclass_.at(g_class).at(gamma_element);
  if (zc == kNone) throw std::logic_error("character evaluated outside its centralizer");
  return centralizers_[g_class]->character_table().rows.at(rho).at(zc).lifted(gamma_.exponent());
}

Cyclotomic MGamma::pairing_sum(const MGammaElt& x, const MGammaElt& y) const {
  const std::size_t g = gamma_.classes().at(x.g_class).representative;
  const std::size_t gp = gamma_.classes().at(y.g_class).representative;
  const std::size_t g_inv = gamma_.inverse_of(g);
  Cyclotomic sum(gamma_.exponent());
  for (std::size_t h = 0; h < gamma_.order(); ++h) {
    const std::size_t h_inv = gamma_.inverse_of(h);
    const std::size_t a = gamma_.multiply(gamma_.multiply(h, gp), h_inv);      // h g' h^-1
    if (zclass_[x.g_class][a] == kNone) continue;                                // must commute with g
    const std::size_t b = gamma_.multiply(gamma_.multiply(h_inv, g_inv), h);   // h^-1 g^-1 h
    sum += rho_at(x.g_class, x.rho, a) * rho_at(y.g_class, y.rho, b);
  }
  return sum;
}

std::int64_t MGamma::pairing_denominator(std::size_t i, std::size_t j) const {
  return static_cast<std::int64_t>(centralizer_order(elements_.at(i)) * centralizer_order(elements_.at(j)));
}

Rat MGamma::pairing(std::size_t i, std::size_t j) const {
  const auto value = sums_.at(i).at(j).as_integer();
  if (!value) throw Error("pairing of " + label(elements_[i]) + " and " + label(elements_[j]) + " is irrational");
  return Rat(*value, static_cast<long>(pairing_denominator(i, j)));
}

std::vector<std::vector<Rat>> MGamma::pairing_matrix() const {
  std::vector<std::vector<Rat>> out(size(), std::vector<Rat>(size()));
  for (std::size_t i = 0; i < size(); ++i)
    for (std::size_t j = 0; j < size(); ++j) out[i][j] = pairing(i, j);
  return out;
}

bool MGamma::is_invertible(const MGammaElt& x) const {
  return gamma_.classes().at(x.g_class).size() == 1 && rho_degree(x) == 1;
}

std::vector<MGammaElt> MGamma::invertibles() const {
  std::vector<MGammaElt> out;
  for (const auto& e : elements_)
    if (is_invertible(e)) out.push_back(e);
  return out;
}

MGammaElt MGamma::convolve_star(const MGammaElt& s, const MGammaElt& x) const {
  if (!is_invertible(s)) throw std::invalid_argument("convolution needs an invertible object");
  const std::size_t z = gamma_.classes()[s.g_class].representative;
  const std::size_t g = gamma_.classes()[x.g_class].representative;
  const std::size_t u = gamma_.multiply(z, g);
  const std::size_t target_class = gamma_.class_of(u);
  const std::size_t rep = gamma_.classes()[target_class].representative;
  const std::size_t h = gamma_.conjugator(u, rep);
  const std::size_t h_inv = gamma_.inverse_of(h);
  const PermGroup& zt = *centralizers_[target_class];
  std::vector<Cyclotomic> values;
  for (const auto& cls : zt.classes()) {
    const std::size_t y = gamma_.index_of(zt.element(cls.representative));
    const std::size_t pulled = gamma_.multiply(gamma_.multiply(h_inv, y), h);  // in Z(g)
    values.push_back(rho_at(s.g_class, s.rho, pulled) * rho_at(x.g_class, x.rho, pulled));
  }
  const auto& rows = zt.character_table().rows;
  for (std::size_t r = 0; r < rows.size(); ++r) {
    bool same = true;
    for (std::size_t k = 0; k < values.size() && same; ++k) same = (rows[r][k] == values[k]);
    if (same) return {target_class, r};
  }
  throw IntegrityError("convolution result is not an irreducible of the centralizer");
}

std::int64_t MGamma::rho_degree(const MGammaElt& x) const {
  return centralizer(x.g_class).character_table().degree(x.rho);
}

Rat MGamma::dim_over_centralizer(const MGammaElt& x) const {
  return Rat(rho_degree(x), static_cast<long>(centralizer_order(x)));
}

bool MGamma::verify_ring_hom(const MGammaElt& z) const {
  // cleared of denominators: S(z,yx) dim(z) |Z(y)| = S(z,x) S(z,y), using Z(yx) = Z(x)
  const std::size_t zi = index_of(z);
  for (const auto& y : invertibles()) {
    const std::size_t yi = index_of(y);
    const auto zy = static_cast<std::int64_t>(centralizer_order(y));
    for (std::size_t xi = 0; xi < elements_.size(); ++xi) {
      const std::size_t prod = index_of(convolve_star(y, elements_[xi]));
      if (sums_[zi][prod] * (rho_degree(z) * zy) != sums_[zi][xi] * sums_[zi][yi]) return false;
    }
  }
  return true;
}

bool MGamma::verify_ring_hom() const {
  return std::all_of(elements_.begin(), elements_.end(), [&](const MGammaElt& z) { return verify_ring_hom(z); });
}

MGammaElt MGamma::find(const Perm& g, const std::map<Perm, std::int64_t>& rho_values) const {
  const std::size_t gi = gamma_.index_of(g);
  const std::size_t c = gamma_.class_of(gi);
  const std::size_t rep = gamma_.classes()[c].representative;
  const std::size_t h = gamma_.conjugator(gi, rep);
  const std::size_t h_inv = gamma_.inverse_of(h);
  const PermGroup& z = *centralizers_[c];
  std::vector<std::size_t> matches;
  for (std::size_t r = 0; r < z.character_table().num_irreducibles(); ++r) {
    bool ok = true;
    for (const auto& [elem, value] : rho_values) {
      const std::size_t e = gamma_.index_of(elem);
      const std::size_t moved = gamma_.multiply(gamma_.multiply(h, e), h_inv);  // into Z(rep)
      if (zclass_[c][moved] == kNone) throw std::invalid_argument("element does not centralize g: " + cycle_string(elem));
      if (rho_at(c, r, moved) != Cyclotomic::integer(gamma_.exponent(), value)) {
        ok = false;
        break;
      }
    }
    if (ok) matches.push_back(r);
  }
  if (matches.size() != 1)
    throw std::invalid_argument("character description matches " + std::to_string(matches.size()) +
                                " irreducibles of Z(" + cycle_string(g) + ")");
  return {c, matches.front()};
}

MGammaElt MGamma::identity_class_with(const std::vector<int>& linear_values) const {
  const auto& rows = centralizers_.at(0)->character_table().rows;
  for (std::size_t r = 0; r < rows.size(); ++r) {
    bool ok = rows[r].size() == linear_values.size();
    for (std::size_t k = 0; k < linear_values.size() && ok; ++k)
      ok = (rows[r][k] == Cyclotomic::integer(1, linear_values[k]));
    if (ok) return {0, r};
  }
  throw std::invalid_argument("no irreducible of Gamma with the given values");
}

std::string MGamma::label(const MGammaElt& x) const {
  const PermGroup& z = centralizer(x.g_class);
  std::string s = "(" + cycle_string(gamma_.element(gamma_.classes()[x.g_class].representative)) + ", [";
  const auto& row = z.character_table().rows.at(x.rho);
  for (std::size_t k = 0; k < row.size(); ++k) s += (k ? "," : "") + row[k].to_string();
  return s + "])";
}

GroupFourierModel::GroupFourierModel(std::shared_ptr<const MGamma> mgamma) : mgamma_(std::move(mgamma)) {}

std::size_t GroupFourierModel::identity() const { return mgamma_->index_of({0, 0}); }

bool GroupFourierModel::is_invertible(std::size_t x) const {
  return mgamma_->is_invertible(mgamma_->elements().at(x));
}

std::size_t GroupFourierModel::convolve(std::size_t s, std::size_t x) const {
  return mgamma_->index_of(mgamma_->convolve_star(mgamma_->elements().at(s), mgamma_->elements().at(x)));
}

Rat GroupFourierModel::dim_over_centralizer(std::size_t x) const {
  return mgamma_->dim_over_centralizer(mgamma_->elements().at(x));
}

std::string GroupFourierModel::label(std::size_t x) const { return mgamma_->label(mgamma_->elements().at(x)); }

nlohmann::json pairing_matrix_json(const MGamma& m) {
  nlohmann::json rows = nlohmann::json::array();
  for (std::size_t i = 0; i < m.size(); ++i) {
    nlohmann::json r = nlohmann::json::array();
    for (std::size_t j = 0; j < m.size(); ++j) {
      if (m.pairing_sum(i, j).as_integer()) r.push_back(m.pairing(i, j).to_string());
      else r.push_back("(" + m.pairing_sum(i, j).to_string() + ")/" + std::to_string(m.pairing_denominator(i, j)));
    }
    rows.push_back(r);
  }
  return rows;
}

}  // namespace uflip
