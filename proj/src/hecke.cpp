#include "uflip/hecke.hpp"

#include <algorithm>
#include <array>
#include <cstdlib>
#include <set>
#include <stdexcept>

#include <nlohmann/json.hpp>

#include "uflip/error.hpp"

namespace uflip {

int hecke_rank_gate_from_env() {
  const char* env = std::getenv("UFLIP_HECKE_RANK_GATE");
  if (env == nullptr || *env == '\0') return kDefaultHeckeRankGate;
  char* end = nullptr;
  const long g = std::strtol(env, &end, 10);
  if (*end != '\0' || g < 1) throw std::invalid_argument("UFLIP_HECKE_RANK_GATE must be a positive integer");
  return static_cast<int>(g);
}

namespace {

const RatPoly& v_squared() {
  static const RatPoly q = RatPoly::monomial(2);
  return q;
}

template <class C>
void accumulate(std::map<std::size_t, C>& out, std::size_t w, const C& c) {
  if (c == C()) return;
  auto it = out.find(w);
  if (it == out.end()) {
    out.emplace(w, c);
    return;
  }
  it->second += c;
  if (it->second == C()) out.erase(it);
}

}  // namespace

HeckeAlgebra::HeckeAlgebra(std::shared_ptr<const CoxeterGroup> w) : w_(std::move(w)) {
  w0_word_ = w_->reduced_word(w_->longest());
}

HeckeAlgebra HeckeAlgebra::build(const std::string& type, int rank, int rank_gate) {
  if (rank > rank_gate)
    throw GateError("Hecke algebra of rank " + std::to_string(rank) + " exceeds the rank gate " +
                    std::to_string(rank_gate));
  const std::string t = (type == "A") ? "B" : type;
  return HeckeAlgebra(std::make_shared<CoxeterGroup>(cartan_matrix(t, rank)));
}

HeckeElement HeckeAlgebra::left_multiply(int s, const HeckeElement& x) const {
  HeckeElement out;
  for (const auto& [w, c] : x) {
    const std::size_t sw = w_->left_multiply(s, w);
    if (w_->length(sw) > w_->length(w)) {
      accumulate(out, sw, c);
    } else {
      accumulate(out, w, c * (v_squared() - RatPoly(1)));
      accumulate(out, sw, c * v_squared());
    }
  }
  return out;
}

HeckeElement HeckeAlgebra::right_multiply(const HeckeElement& x, int s) const {
  HeckeElement out;
  for (const auto& [w, c] : x) {
    const std::size_t ws = w_->right_multiply(w, s);
    if (w_->length(ws) > w_->length(w)) {
      accumulate(out, ws, c);
    } else {
      accumulate(out, w, c * (v_squared() - RatPoly(1)));
      accumulate(out, ws, c * v_squared());
    }
  }
  return out;
}

HeckeElement HeckeAlgebra::left_multiply_T(std::size_t w, const HeckeElement& x) const {
  const auto word = (w == w_->longest()) ? w0_word_ : w_->reduced_word(w);
  HeckeElement y = x;
  for (auto it = word.rbegin(); it != word.rend(); ++it) y = left_multiply(*it, y);
  return y;
}

HeckeElement HeckeAlgebra::multiply(const HeckeElement& x, const HeckeElement& y) const {
  HeckeElement out;
  for (const auto& [w, c] : x)
    for (const auto& [z, d] : left_multiply_T(w, y)) accumulate(out, z, c * d);
  return out;
}

HeckeValue HeckeAlgebra::left_multiply(int s, const HeckeValue& x, const Rat& v) const {
  const Rat q = v * v;
  HeckeValue out;
  for (const auto& [w, c] : x) {
    const std::size_t sw = w_->left_multiply(s, w);
    if (w_->length(sw) > w_->length(w)) {
      accumulate(out, sw, c);
    } else {
      accumulate(out, w, c * (q - Rat(1)));
      accumulate(out, sw, c * q);
    }
  }
  return out;
}

HeckeValue HeckeAlgebra::left_multiply_T(std::size_t w, const HeckeValue& x, const Rat& v) const {
  const auto word = (w == w_->longest()) ? w0_word_ : w_->reduced_word(w);
  HeckeValue y = x;
  for (auto it = word.rbegin(); it != word.rend(); ++it) y = left_multiply(*it, y, v);
  return y;
}

std::vector<HeckeElement> HeckeAlgebra::generator_matrix(int s) const {
  std::vector<HeckeElement> cols;
  for (std::size_t w = 0; w < dimension(); ++w) cols.push_back(left_multiply(s, basis(w)));
  return cols;
}

std::vector<HeckeElement> HeckeAlgebra::Tw0_matrix() const {
  std::vector<HeckeElement> cols;
  for (std::size_t w = 0; w < dimension(); ++w) cols.push_back(left_multiply_T(w_->longest(), basis(w)));
  return cols;
}

bool HeckeAlgebra::verify_quadratic(nlohmann::json* cex) const {
  for (int s = 0; s < w_->rank(); ++s)
    for (std::size_t w = 0; w < dimension(); ++w) {
      // (T_s + 1)(T_s - v^2) e_w = T_s T_s e_w + (1 - v^2) T_s e_w - v^2 e_w
      const HeckeElement x = basis(w);
      const HeckeElement tx = left_multiply(s, x);
      HeckeElement r = left_multiply(s, tx);
      for (const auto& [z, c] : tx) accumulate(r, z, c * (RatPoly(1) - v_squared()));
      accumulate(r, w, -v_squared());
      if (!r.empty()) {
        if (cex) *cex = {{"generator", s + 1}, {"basis", w_->reduced_word(w)}};
        return false;
      }
    }
  return true;
}

bool HeckeAlgebra::verify_braid(nlohmann::json* cex) const {
  for (int s = 0; s < w_->rank(); ++s)
    for (int t = s + 1; t < w_->rank(); ++t) {
      // order of st
      int m = 1;
      for (std::size_t x = w_->multiply(w_->from_word({s}), w_->from_word({t})); x != w_->identity();
           x = w_->multiply(x, w_->multiply(w_->from_word({s}), w_->from_word({t}))))
        ++m;
      for (std::size_t w = 0; w < dimension(); ++w) {
        HeckeElement a = basis(w), b = basis(w);
        for (int k = 0; k < m; ++k) {
          a = left_multiply((k % 2 == 0) ? s : t, a);
          b = left_multiply((k % 2 == 0) ? t : s, b);
        }
        if (a != b) {
          if (cex) *cex = {{"generators", {s + 1, t + 1}}, {"m", m}, {"basis", w_->reduced_word(w)}};
          return false;
        }
      }
    }
  return true;
}

bool HeckeAlgebra::verify_length_additivity(std::size_t limit, nlohmann::json* cex) const {
  const std::size_t n = std::min(limit, dimension());
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y) {
      const std::size_t xy = w_->multiply(x, y);
      if (w_->length(xy) != w_->length(x) + w_->length(y)) continue;
      if (left_multiply_T(x, basis(y)) != basis(xy)) {
        if (cex) *cex = {{"x", w_->reduced_word(x)}, {"y", w_->reduced_word(y)}};
        return false;
      }
    }
  return true;
}

bool HeckeAlgebra::verify_Tw0_central(nlohmann::json* cex) const {
  const std::size_t w0 = w_->longest();
  // as elements first: T_s T_w0 = T_w0 T_s
  for (int s = 0; s < w_->rank(); ++s)
    if (left_multiply(s, basis(w0)) != right_multiply(basis(w0), s)) {
      if (cex) *cex = {{"generator", s + 1}, {"mode", "element"}};
      return false;
    }
  if (dimension() > 400) return true;
  for (std::size_t w = 0; w < dimension(); ++w) {
    const HeckeElement tw0 = left_multiply_T(w0, basis(w));
    for (int s = 0; s < w_->rank(); ++s)
      if (left_multiply(s, tw0) != left_multiply_T(w0, left_multiply(s, basis(w)))) {
        if (cex) *cex = {{"generator", s + 1}, {"basis", w_->reduced_word(w)}, {"mode", "operator"}};
        return false;
      }
  }
  return true;
}

RatPoly HeckeAlgebra::regular_trace(std::size_t w) const {
  RatPoly tr;
  for (std::size_t x = 0; x < dimension(); ++x) {
    const HeckeElement y = left_multiply_T(w, basis(x));
    auto it = y.find(x);
    if (it != y.end()) tr += it->second;
  }
  return tr;
}

CentralScalarCheck verify_central_scalar(const HeckeAlgebra& h, const InvolutionTable& t, const Rat& v0) {
  const WeylGroup& w = t.weyl();
  if (static_cast<std::size_t>(w.order()) != h.dimension())
    throw std::invalid_argument("Hecke algebra and Weyl group disagree");
  CentralScalarCheck out;
  out.v0 = v0;
  std::set<Rat> scalars;
  for (std::size_t i = 0; i < w.irreducibles().size(); ++i) {
    const auto& inv = t.family(t.families().family_of(i));
    const int e = 2 * w.nu() - inv.a() - inv.A();
    Rat lambda = Rat(1);
    for (int k = 0; k < e; ++k) lambda *= v0;
    if (w.irreducibles()[i].b % 2 != 0) lambda = -lambda;
    scalars.insert(lambda);
  }
  out.predicted.assign(scalars.begin(), scalars.end());
  const std::size_t w0 = h.coxeter().longest();
  // the regular representation is faithful, so p(T_w0) = 0 iff p(T_w0) T_1 = 0
  auto product_without = [&](std::size_t skip) {
    HeckeValue x{{h.coxeter().identity(), Rat(1)}};
    for (std::size_t j = 0; j < out.predicted.size(); ++j) {
      if (j == skip) continue;
      HeckeValue y = h.left_multiply_T(w0, x, v0);
      for (const auto& [z, c] : x) accumulate(y, z, -out.predicted[j] * c);
      x = std::move(y);
    }
    return x;
  };
  out.annihilates = product_without(static_cast<std::size_t>(-1)).empty();
  for (std::size_t j = 0; j < out.predicted.size(); ++j)
    if (product_without(j).empty()) out.redundant.push_back(out.predicted[j]);
  out.pass = out.annihilates && out.redundant.empty();
  return out;
}

nlohmann::json to_json(const CentralScalarCheck& c) {
  nlohmann::json j;
  j["pass"] = c.pass;
  j["v0"] = c.v0.to_string();
  nlohmann::json p = nlohmann::json::array();
  for (const auto& x : c.predicted) p.push_back(x.to_string());
  j["predicted"] = p;
  j["annihilates"] = c.annihilates;
  nlohmann::json r = nlohmann::json::array();
  for (const auto& x : c.redundant) r.push_back(x.to_string());
  j["redundant"] = r;
  return j;
}

namespace {

using Mat2 = std::array<std::array<RatPoly, 2>, 2>;

Mat2 mul(const Mat2& a, const Mat2& b) {
  Mat2 c;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) c[i][j] = a[i][0] * b[0][j] + a[i][1] * b[1][j];
  return c;
}

}  // namespace

std::vector<std::vector<RatPoly>> dihedral_hecke_traces(const WeylGroup& weyl) {
  if (weyl.rank() != 2) throw std::invalid_argument("explicit Hecke models exist for rank 2 only");
  const auto cox = weyl.coxeter();
  const std::size_t m = cox->order() / 2;
  std::vector<Rat> products;  // mu_st mu_ts = 4 cos^2(pi j / m), rational for m = 2, 3, 4, 6
  switch (m) {
    case 2: break;
    case 3: products = {Rat(1)}; break;
    case 4: products = {Rat(2)}; break;
    case 6: products = {Rat(3), Rat(1)}; break;
    default: throw std::invalid_argument("no rational two-dimensional models for this dihedral group");
  }
  const RatPoly q = v_squared();
  std::vector<std::array<Mat2, 2>> models;
  for (int e1 : {0, 1})
    for (int e2 : {0, 1}) {
      if (m % 2 == 1 && e1 != e2) continue;
      Mat2 a{}, b{};
      a[0][0] = e1 ? RatPoly(-1) : q;
      b[0][0] = e2 ? RatPoly(-1) : q;
      models.push_back({a, b});  // one-dimensional, padded
    }
  const std::size_t n_linear = models.size();
  for (const Rat& c : products) {
    Mat2 a{}, b{};
    a[0][0] = RatPoly(-1);
    a[0][1] = q.scaled(c);
    a[1][1] = q;
    b[0][0] = q;
    b[1][0] = RatPoly(1);
    b[1][1] = RatPoly(-1);
    models.push_back({a, b});
  }
  // traces element by element along reduced words
  std::vector<std::vector<RatPoly>> by_model(models.size(), std::vector<RatPoly>(cox->order()));
  for (std::size_t k = 0; k < models.size(); ++k) {
    const int dim = k < n_linear ? 1 : 2;
    for (std::size_t w = 0; w < cox->order(); ++w) {
      Mat2 x{};
      x[0][0] = RatPoly(1);
      if (dim == 2) x[1][1] = RatPoly(1);
      for (int s : cox->reduced_word(w)) x = mul(x, models[k][s]);
      by_model[k][w] = dim == 1 ? x[0][0] : x[0][0] + x[1][1];
    }
    if (dim == 2) {
      // braid relation of the model
      Mat2 l{}, r{};
      l[0][0] = l[1][1] = r[0][0] = r[1][1] = RatPoly(1);
      for (std::size_t i = 0; i < m; ++i) {
        l = mul(l, models[k][i % 2]);
        r = mul(r, models[k][(i + 1) % 2]);
      }
      if (l != r) throw IntegrityError("two-dimensional Hecke model fails the braid relation");
    }
  }
  std::vector<std::vector<RatPoly>> traces(cox->order(), std::vector<RatPoly>(weyl.irreducibles().size()));
  std::vector<bool> matched(weyl.irreducibles().size(), false);
  std::vector<std::size_t> cls(cox->order());
  for (std::size_t w = 0; w < cox->order(); ++w) {
    auto word = cox->reduced_word(w);
    for (int& s : word) ++s;
    cls[w] = weyl.class_of_word(word);
  }
  for (std::size_t k = 0; k < models.size(); ++k) {
    bool found = false;
    for (std::size_t i = 0; i < weyl.irreducibles().size() && !found; ++i) {
      if (matched[i]) continue;
      bool same = true;
      for (std::size_t w = 0; w < cox->order() && same; ++w)
        same = by_model[k][w].evaluate(Rat(1)) == Rat(weyl.character_value(i, cls[w]));
      if (!same) continue;
      matched[i] = found = true;
      for (std::size_t w = 0; w < cox->order(); ++w) traces[w][i] = by_model[k][w];
    }
    if (!found) throw IntegrityError("a Hecke model specialises to no irreducible character");
  }
  if (std::count(matched.begin(), matched.end(), false) != 0)
    throw IntegrityError("some irreducible has no Hecke model");
  return traces;
}

}  // namespace uflip
