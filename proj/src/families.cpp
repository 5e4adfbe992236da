#include "uflip/families.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <map>
#include <mutex>
#include <stdexcept>

#include <nlohmann/json.hpp>

#include "uflip/error.hpp"

namespace uflip {

namespace detail {
extern const char* const exceptional_json_text;
}

std::optional<std::size_t> Family::member_at(std::size_t m) const {
  for (std::size_t i = 0; i < members.size(); ++i)
    if (members[i].m == m) return i;
  return std::nullopt;
}

std::string Family::name() const {
  if (classical) return classical->to_string();
  return special().label + " (" + gamma() + ")";
}

std::shared_ptr<const MGamma> symmetric_mgamma(int k) {
  if (k < 1 || k > 5) throw std::invalid_argument("M(S_k) is available for 1 <= k <= 5");
  static std::mutex lock;
  static std::map<int, std::shared_ptr<const MGamma>> cache;
  std::lock_guard<std::mutex> guard(lock);
  auto& slot = cache[k];
  if (!slot) slot = std::make_shared<MGamma>(PermGroup::symmetric(k), k == 1 ? "1" : "S" + std::to_string(k));
  return slot;
}

const nlohmann::json& exceptional_data() {
  static const nlohmann::json data = [] {
    // an alternative file is useful for trying out other m_E assignments
    if (const char* path = std::getenv("UFLIP_EXCEPTIONAL_DATA"); path && *path) {
      std::ifstream in(path);
      if (!in) throw std::invalid_argument(std::string("cannot read ") + path);
      return nlohmann::json::parse(in);
    }
    return nlohmann::json::parse(detail::exceptional_json_text);
  }();
  return data;
}

namespace {

RatPoly poly_of_coefficients(const nlohmann::json& coeffs) {
  RatPoly p;
  for (std::size_t i = 0; i < coeffs.size(); ++i) {
    const long c = coeffs[i].get<long>();
    if (c != 0) p += RatPoly::monomial(static_cast<int>(i), Rat(c));
  }
  return p;
}

const nlohmann::json& record_for(const WeylGroup& w) {
  const std::string key = w.name();
  const auto& data = exceptional_data();
  if (!data.contains(key)) throw std::invalid_argument("no embedded family data for " + key);
  return data.at(key);
}

FamilyMember member_of(const WeylGroup& w, std::size_t irr) {
  const auto& e = w.irreducibles().at(irr);
  FamilyMember m;
  m.irr = irr;
  m.label = e.label;
  m.dim = e.dim;
  m.b = e.b;
  m.fake_degree = e.fake_degree;
  return m;
}

void sort_members(Family& f) {
  std::sort(f.members.begin(), f.members.end(), [](const FamilyMember& x, const FamilyMember& y) {
    return x.b != y.b ? x.b < y.b : x.label < y.label;
  });
}

}  // namespace

std::vector<std::string> validate_exceptional_data(const WeylGroup& w) {
  std::vector<std::string> problems;
  const auto& rec = record_for(w);
  const auto& irrs = rec.at("irreducibles");
  if (irrs.size() != w.irreducibles().size()) problems.push_back("irreducible count differs");
  for (const auto& r : irrs) {
    const std::string label = r.at("label");
    std::size_t i = 0;
    try {
      i = w.find_irreducible(label);
    } catch (const std::exception&) {
      problems.push_back(label + ": not in the computed table");
      continue;
    }
    const auto& e = w.irreducibles()[i];
    if (r.at("dim").get<std::int64_t>() != e.dim) problems.push_back(label + ": dimension differs");
    if (r.at("b").get<int>() != e.b) problems.push_back(label + ": b differs");
    if (poly_of_coefficients(r.at("fake_degree")) != e.fake_degree) problems.push_back(label + ": fake degree differs");
  }
  return problems;
}

std::shared_ptr<const FamilyTable> FamilyTable::build(std::shared_ptr<const WeylGroup> w) {
  std::shared_ptr<FamilyTable> t(new FamilyTable());
  t->weyl_ = std::move(w);
  if (t->weyl_->is_classical()) t->build_classical();
  else t->build_exceptional();
  t->finish();
  return t;
}

void FamilyTable::build_classical() {
  const WeylGroup& w = *weyl_;
  const FamilyKind kind = w.is_type_d() ? FamilyKind::D : FamilyKind::BC;
  std::map<ClassicalFamily, std::vector<std::size_t>> groups;
  for (std::size_t i = 0; i < w.irreducibles().size(); ++i) {
    const auto& e = w.irreducibles()[i];
    const Symbol s = w.symbol(i);
    groups[ClassicalFamily::containing(s, kind, e.split)].push_back(i);
  }
  for (const auto& [cf, irrs] : groups) {
    Family f;
    f.classical = cf;
    auto model = std::make_shared<SymbolFourierModel>(cf);
    f.model = model;
    for (std::size_t i : irrs) {
      FamilyMember m = member_of(w, i);
      const LambdaY y = lambda_of(cf, w.symbol(i));
      if (!is_member(cf, y)) throw IntegrityError(m.label + " does not sit in the image of its family");
      m.m = model->index_of(y);
      f.members.push_back(std::move(m));
    }
    if (f.members.size() != family_members(cf).size())
      throw IntegrityError("family " + cf.to_string() + " has the wrong number of members");
    sort_members(f);
    if (f.special().m != model->identity())
      throw IntegrityError("special member of " + cf.to_string() + " is not at (1,1)");
    for (std::size_t k = 0; k < f.members.size(); ++k) {
      const int parity = b_prime_parity(cf, model->elements()[f.members[k].m]);
      if (((f.b_prime(k) % 2) + 2) % 2 != parity)
        throw IntegrityError("b' parity of " + f.members[k].label + " disagrees with its symbol");
    }
    families_.push_back(std::move(f));
  }
}

void FamilyTable::build_exceptional() {
  const WeylGroup& w = *weyl_;
  const auto problems = validate_exceptional_data(w);
  if (!problems.empty()) throw IntegrityError("embedded data for " + w.name() + ": " + problems.front());
  std::vector<bool> placed(w.irreducibles().size(), false);
  for (const auto& rec : record_for(w).at("families")) {
    const std::string gamma = rec.at("gamma");
    if (gamma.size() != 2 || gamma[0] != 'S') throw IntegrityError("unsupported group " + gamma);
    Family f;
    f.mgamma = symmetric_mgamma(gamma[1] - '0');
    f.model = std::make_shared<GroupFourierModel>(f.mgamma);
    for (const auto& mr : rec.at("members")) {
      const std::size_t i = w.find_irreducible(mr.at("label").get<std::string>());
      if (placed[i]) throw IntegrityError(w.irreducibles()[i].label + " is in two families");
      placed[i] = true;
      FamilyMember m = member_of(w, i);
      const std::string target = mr.at("m");
      bool found = false;
      for (std::size_t x = 0; x < f.model->size(); ++x)
        if (f.model->label(x) == target) {
          m.m = x;
          found = true;
        }
      if (!found) throw IntegrityError("no element " + target + " in M(" + gamma + ")");
      f.members.push_back(std::move(m));
    }
    sort_members(f);
    if (f.special().m != f.model->identity()) throw IntegrityError("special member of " + gamma + " family is not at (1,1)");
    families_.push_back(std::move(f));
  }
  auto trivial_model = std::make_shared<GroupFourierModel>(symmetric_mgamma(1));
  for (std::size_t i = 0; i < placed.size(); ++i) {
    if (placed[i]) continue;
    Family f;
    f.mgamma = symmetric_mgamma(1);
    f.model = trivial_model;
    FamilyMember m = member_of(w, i);
    m.m = trivial_model->identity();
    f.members.push_back(std::move(m));
    families_.push_back(std::move(f));
  }
}

void FamilyTable::finish() {
  std::sort(families_.begin(), families_.end(), [](const Family& x, const Family& y) {
    return x.special().b != y.special().b ? x.special().b < y.special().b : x.special().label < y.special().label;
  });
  family_of_.assign(weyl_->irreducibles().size(), static_cast<std::size_t>(-1));
  position_.assign(weyl_->irreducibles().size(), 0);
  for (std::size_t id = 0; id < families_.size(); ++id) {
    families_[id].id = id;
    const auto& f = families_[id];
    std::vector<bool> used(f.model->size(), false);
    for (std::size_t k = 0; k < f.members.size(); ++k) {
      const auto& m = f.members[k];
      if (used[m.m]) throw IntegrityError("two members of family " + f.name() + " share m_E");
      used[m.m] = true;
      if (f.b_prime(k) < 0) throw IntegrityError("negative b' in family " + f.name());
      family_of_[m.irr] = id;
      position_[m.irr] = k;
    }
  }
  for (std::size_t i = 0; i < family_of_.size(); ++i)
    if (family_of_[i] == static_cast<std::size_t>(-1))
      throw IntegrityError(weyl_->irreducibles()[i].label + " lies in no family");
}

std::size_t FamilyTable::unipotent_count() const {
  std::size_t n = 0;
  for (const auto& f : families_) n += f.model->size();
  return n;
}

std::shared_ptr<const FamilyTable> build_families(const std::string& type, int rank) {
  return FamilyTable::build(WeylGroup::build(type, rank));
}

nlohmann::json to_json(const Family& f) {
  nlohmann::json j;
  j["id"] = f.id;
  j["gamma"] = f.gamma();
  j["size"] = f.size();
  j["unipotent"] = f.model->size();
  if (f.classical) j["symbol"] = to_json(*f.classical);
  nlohmann::json members = nlohmann::json::array();
  for (std::size_t k = 0; k < f.members.size(); ++k) {
    const auto& m = f.members[k];
    members.push_back({{"label", m.label},
                       {"dim", m.dim},
                       {"b", m.b},
                       {"b_prime", f.b_prime(k)},
                       {"m", f.model->label(m.m)},
                       {"fake_degree", m.fake_degree.to_string("q")}});
  }
  j["members"] = members;
  return j;
}

nlohmann::json families_json(const FamilyTable& t) {
  nlohmann::json j;
  j["type"] = t.weyl().name();
  j["unipotent"] = t.unipotent_count();
  nlohmann::json fs = nlohmann::json::array();
  for (const auto& f : t.families()) fs.push_back(to_json(f));
  j["families"] = fs;
  return j;
}

}  // namespace uflip
