#include "uflip/symbols.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <nlohmann/json.hpp>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace uflip {

IntSet symmetric_difference(const IntSet& u, const IntSet& v) {
  IntSet out;
  std::set_symmetric_difference(u.begin(), u.end(), v.begin(), v.end(), std::back_inserter(out));
  return out;
}

IntSet set_union(const IntSet& u, const IntSet& v) {
  IntSet out;
  std::set_union(u.begin(), u.end(), v.begin(), v.end(), std::back_inserter(out));
  return out;
}

IntSet set_intersection(const IntSet& u, const IntSet& v) {
  IntSet out;
  std::set_intersection(u.begin(), u.end(), v.begin(), v.end(), std::back_inserter(out));
  return out;
}

IntSet set_minus(const IntSet& u, const IntSet& v) {
  IntSet out;
  std::set_difference(u.begin(), u.end(), v.begin(), v.end(), std::back_inserter(out));
  return out;
}

namespace {

void check_row(const std::vector<int>& row) {
  for (std::size_t i = 0; i < row.size(); ++i) {
    if (row[i] < 0) throw std::invalid_argument("symbol entries must be natural numbers");
    if (i > 0 && row[i] <= row[i - 1]) throw std::invalid_argument("symbol rows must be strictly increasing");
  }
}

int sum_of(const IntSet& s) { return std::accumulate(s.begin(), s.end(), 0); }

bool contains(const IntSet& s, int x) { return std::binary_search(s.begin(), s.end(), x); }

std::string join(const std::vector<int>& v) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) out += (i ? "," : "") + std::to_string(v[i]);
  return out;
}

std::vector<int> parse_row(std::string_view text) {
  std::vector<int> row;
  std::size_t pos = 0;
  while (pos < text.size()) {
    std::size_t comma = text.find(',', pos);
    if (comma == std::string_view::npos) comma = text.size();
    std::string item(text.substr(pos, comma - pos));
    item.erase(std::remove_if(item.begin(), item.end(), ::isspace), item.end());
    if (item.empty()) throw std::invalid_argument("empty symbol entry");
    std::size_t used = 0;
    const int value = std::stoi(item, &used);
    if (used != item.size()) throw std::invalid_argument("bad symbol entry: " + item);
    row.push_back(value);
    pos = comma + 1;
  }
  return row;
}

}  // namespace

Symbol::Symbol(std::vector<int> top, std::vector<int> bottom) : top_(std::move(top)), bottom_(std::move(bottom)) {
  check_row(top_);
  check_row(bottom_);
}

int Symbol::entry_sum() const { return sum_of(top_) + sum_of(bottom_); }

Symbol Symbol::reduced() const {
  std::vector<int> t = top_, b = bottom_;
  while (!t.empty() && !b.empty() && t.front() == 0 && b.front() == 0) {
    t.erase(t.begin());
    b.erase(b.begin());
    for (int& x : t) --x;
    for (int& x : b) --x;
  }
  return Symbol(std::move(t), std::move(b));
}

Symbol Symbol::shifted(int k) const {
  if (k < 0) throw std::invalid_argument("negative shift");
  auto shift_row = [k](const std::vector<int>& row) {
    std::vector<int> out(static_cast<std::size_t>(k));
    std::iota(out.begin(), out.end(), 0);
    for (int x : row) out.push_back(x + k);
    return out;
  };
  return Symbol(shift_row(top_), shift_row(bottom_));
}

int Symbol::rank() const {
  const int m = static_cast<int>(bottom_.size());
  if (defect() == 1) return entry_sum() - m * m;
  if (defect() == 0) return entry_sum() - (m * m - m);
  throw std::invalid_argument("rank is defined for symbols of defect 0 or 1");
}

std::string Symbol::to_string() const { return "(" + join(top_) + "|" + join(bottom_) + ")"; }

std::string Symbol::to_pretty() const {
  // top entries on even columns, bottom entries between them
  std::size_t width = 1;
  for (int x : top_) width = std::max(width, std::to_string(x).size());
  for (int x : bottom_) width = std::max(width, std::to_string(x).size());
  auto cell = [width](int x) {
    std::string s = std::to_string(x);
    return std::string(width - s.size(), ' ') + s;
  };
  const std::string pad(width, ' ');
  std::string t, b;
  const bool offset = defect() >= 1;
  for (std::size_t i = 0; i < top_.size(); ++i) t += (i ? pad + " " : "") + cell(top_[i]) + (i + 1 < top_.size() ? " " : "");
  if (offset) b += pad + " ";
  for (std::size_t i = 0; i < bottom_.size(); ++i) b += (i ? pad + " " : "") + cell(bottom_[i]) + " ";
  while (!t.empty() && t.back() == ' ') t.pop_back();
  while (!b.empty() && b.back() == ' ') b.pop_back();
  return t + "\n" + b;
}

Symbol Symbol::parse(std::string_view text) {
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front()))) text.remove_prefix(1);
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) text.remove_suffix(1);
  if (text.size() < 3 || text.front() != '(' || text.back() != ')')
    throw std::invalid_argument("symbol must look like (a1,a2|b1)");
  text = text.substr(1, text.size() - 2);
  const auto bar = text.find('|');
  if (bar == std::string_view::npos || text.find('|', bar + 1) != std::string_view::npos)
    throw std::invalid_argument("symbol needs exactly one '|'");
  return Symbol(parse_row(text.substr(0, bar)), parse_row(text.substr(bar + 1)));
}

Symbol symbol_of_bipartition(const Partition& alpha, const Partition& beta, int defect, int m) {
  auto row = [](const Partition& p, int len) {
    if (static_cast<int>(p.size()) > len) throw std::invalid_argument("partition has too many parts for the symbol");
    std::vector<int> parts(static_cast<std::size_t>(len) - p.size(), 0);
    parts.insert(parts.end(), p.rbegin(), p.rend());  // increasing
    for (int i = 0; i < len; ++i) parts[i] += i;
    return parts;
  };
  return Symbol(row(alpha, m + defect), row(beta, m));
}

std::pair<Partition, Partition> bipartition_of_symbol(const Symbol& s) {
  auto parts = [](const std::vector<int>& row) {
    Partition p;
    for (int i = static_cast<int>(row.size()) - 1; i >= 0; --i)
      if (row[i] - i > 0) p.push_back(row[i] - i);
    return p;
  };
  return {parts(s.top()), parts(s.bottom())};
}

std::string to_string(FamilyKind kind) { return kind == FamilyKind::BC ? "B/C" : "D"; }

int ClassicalFamily::gamma_rank() const {
  if (kind == FamilyKind::BC) return d();
  return d() > 0 ? d() - 1 : 0;
}

int ClassicalFamily::rank() const { return special_symbol().rank(); }

Symbol ClassicalFamily::special_symbol() const { return Symbol(set_union(Z2, A), set_union(Z2, B)); }

void ClassicalFamily::validate() const {
  auto sorted_set = [](const IntSet& s, const char* name) {
    for (std::size_t i = 0; i < s.size(); ++i)
      if (s[i] < 0 || (i > 0 && s[i] <= s[i - 1]))
        throw std::invalid_argument(std::string(name) + " must be a strictly increasing list of naturals");
  };
  sorted_set(Z2, "Z2");
  sorted_set(A, "A");
  sorted_set(B, "B");
  if (!set_intersection(Z2, A).empty() || !set_intersection(Z2, B).empty() || !set_intersection(A, B).empty())
    throw std::invalid_argument("Z2, A, B must be pairwise disjoint");
  if (contains(Z2, 0)) throw std::invalid_argument("family is not in reduced form (0 lies in both rows)");
  const int dd = d();
  if (kind == FamilyKind::BC) {
    if (static_cast<int>(A.size()) != dd + 1) throw std::invalid_argument("type B/C needs |A| = |B| + 1");
    for (int i = 0; i < dd; ++i)
      if (!(A[i] < B[i] && B[i] < A[i + 1])) throw std::invalid_argument("type B/C needs a1 < b1 < a2 < ... < a_{d+1}");
    if (split != 0) throw std::invalid_argument("split tag only applies to degenerate type D symbols");
  } else {
    if (static_cast<int>(A.size()) != dd) throw std::invalid_argument("type D needs |A| = |B|");
    for (int i = 0; i < dd; ++i) {
      if (!(B[i] < A[i])) throw std::invalid_argument("type D needs b1 < a1 < b2 < ... < a_d");
      if (i + 1 < dd && !(A[i] < B[i + 1])) throw std::invalid_argument("type D needs b1 < a1 < b2 < ... < a_d");
    }
    if ((sum_of(A) + sum_of(B)) % 2 != 0) throw std::invalid_argument("type D needs an even sum over Z1");
    if (dd == 0 && split != 1 && split != -1) throw std::invalid_argument("degenerate type D symbol needs split = +1 or -1");
    if (dd > 0 && split != 0) throw std::invalid_argument("split tag only applies to degenerate type D symbols");
  }
}

ClassicalFamily ClassicalFamily::containing(const Symbol& s, FamilyKind kind, int split) {
  IntSet z2 = set_intersection(s.top(), s.bottom());
  IntSet z1 = symmetric_difference(s.top(), s.bottom());
  while (!z2.empty() && z2.front() == 0) {
    z2.erase(z2.begin());
    for (int& x : z2) --x;
    for (int& x : z1) --x;
  }
  ClassicalFamily f;
  f.kind = kind;
  f.Z2 = std::move(z2);
  // B/C: a1 < b1 < a2 ...; D: b1 < a1 < b2 ...
  const std::size_t first_a = kind == FamilyKind::BC ? 0 : 1;
  for (std::size_t i = 0; i < z1.size(); ++i) ((i % 2 == first_a) ? f.A : f.B).push_back(z1[i]);
  f.split = (kind == FamilyKind::D && z1.empty()) ? split : 0;
  f.validate();
  return f;
}

std::string ClassicalFamily::to_string() const {
  std::string s = uflip::to_string(kind) + " " + special_symbol().to_string();
  if (split != 0) s += split > 0 ? "+" : "-";
  return s;
}

nlohmann::json to_json(const ClassicalFamily& f) {
  nlohmann::json j;
  j["kind"] = to_string(f.kind);
  j["Z2"] = f.Z2;
  j["A"] = f.A;
  j["B"] = f.B;
  j["n"] = f.rank();
  j["d"] = f.d();
  j["special"] = f.special_symbol().to_string();
  if (f.split != 0) j["split"] = f.split;
  return j;
}

LambdaY canonical_lambda(const ClassicalFamily& f, IntSet Y) {
  if (f.kind == FamilyKind::D) {
    IntSet other = set_minus(f.Z1(), Y);
    if (other < Y) Y = std::move(other);
  }
  return LambdaY{std::move(Y)};
}

Symbol symbol_of(const ClassicalFamily& f, const LambdaY& x) {
  return Symbol(set_union(f.Z2, set_minus(f.Z1(), x.Y)), set_union(f.Z2, x.Y));
}

LambdaY lambda_of(const ClassicalFamily& f, const Symbol& s) {
  const Symbol r = s.reduced();
  const int rows = static_cast<int>(f.Z2.size()) + f.d();
  const int shift = rows - static_cast<int>(r.bottom().size());
  if (shift < 0 || r.defect() != (f.kind == FamilyKind::BC ? 1 : 0))
    throw std::invalid_argument("symbol " + s.to_string() + " is not in family " + f.to_string());
  const Symbol t = r.shifted(shift);
  const IntSet Y = set_minus(t.bottom(), f.Z2);
  if (set_intersection(t.top(), t.bottom()) != f.Z2 || symmetric_difference(t.top(), t.bottom()) != f.Z1())
    throw std::invalid_argument("symbol " + s.to_string() + " is not in family " + f.to_string());
  return canonical_lambda(f, Y);
}

IntSet v_coordinate(const ClassicalFamily& f, const LambdaY& x) { return symmetric_difference(x.Y, f.B); }

bool is_member(const ClassicalFamily& f, const LambdaY& x) { return static_cast<int>(x.Y.size()) == f.d(); }

namespace {

std::vector<IntSet> subsets(const IntSet& ground) {
  if (ground.size() > 24) throw std::invalid_argument("family too large to enumerate");
  std::vector<IntSet> out;
  for (std::uint32_t mask = 0; mask < (1u << ground.size()); ++mask) {
    IntSet s;
    for (std::size_t i = 0; i < ground.size(); ++i)
      if (mask & (1u << i)) s.push_back(ground[i]);
    out.push_back(std::move(s));
  }
  return out;
}

}  // namespace

std::vector<LambdaY> enumerate_MGamma_symbols(const ClassicalFamily& f) {
  std::vector<LambdaY> out;
  for (auto& Y : subsets(f.Z1()))
    if (static_cast<int>(Y.size()) % 2 == f.d() % 2) out.push_back(canonical_lambda(f, std::move(Y)));
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::vector<LambdaY> family_members(const ClassicalFamily& f) {
  std::vector<LambdaY> out;
  for (auto& x : enumerate_MGamma_symbols(f))
    if (is_member(f, x)) out.push_back(x);
  return out;
}

Rat symbol_pairing(const ClassicalFamily& f, const LambdaY& x, const LambdaY& y) {
  const auto meet = set_intersection(v_coordinate(f, x), v_coordinate(f, y));
  return pow2(-f.gamma_rank()) * Rat(sign_power(static_cast<long>(meet.size())));
}

LambdaY convolve(const ClassicalFamily& f, const LambdaY& s, const LambdaY& x) {
  return canonical_lambda(f, symmetric_difference(symmetric_difference(s.Y, x.Y), f.B));
}

int b_prime_parity(const ClassicalFamily& f, const LambdaY& x) {
  if (!is_member(f, x)) throw std::invalid_argument("not a family member");
  if (f.kind == FamilyKind::BC)
    return static_cast<int>(set_intersection(v_coordinate(f, x), compute_Zstar(f)).size()) % 2;
  return static_cast<int>(set_intersection(v_coordinate(f, x), odd_entries(f.Z1())).size()) % 2;
}

int b_prime_sum(const ClassicalFamily& f, const LambdaY& x) {
  if (!is_member(f, x)) throw std::invalid_argument("not a family member");
  return sum_of(f.B) - sum_of(x.Y);
}

IntSet odd_entries(const IntSet& s) {
  IntSet out;
  std::copy_if(s.begin(), s.end(), std::back_inserter(out), [](int x) { return x % 2 != 0; });
  return out;
}

IntSet even_entries(const IntSet& s) {
  IntSet out;
  std::copy_if(s.begin(), s.end(), std::back_inserter(out), [](int x) { return x % 2 == 0; });
  return out;
}

IntSet compute_Zstar(const ClassicalFamily& f) {
  if (f.kind != FamilyKind::BC) throw std::invalid_argument("Z1_* is defined for type B/C families");
  const IntSet z1 = f.Z1();
  IntSet odd = odd_entries(z1), even = even_entries(z1);
  const bool odd_ok = odd.size() % 2 == 0, even_ok = even.size() % 2 == 0;
  if (odd_ok == even_ok) throw std::logic_error("Z1 of a type B/C family must have odd size");
  return odd_ok ? odd : even;
}

LambdaY closed_form_mc(const ClassicalFamily& f) {
  const IntSet moved = f.kind == FamilyKind::BC ? compute_Zstar(f) : odd_entries(f.Z1());
  return canonical_lambda(f, symmetric_difference(f.B, moved));
}

Symbol odd_entry_swap_view(const ClassicalFamily& f, const LambdaY& x) {
  const Symbol s = symbol_of(f, x);
  const IntSet odd = odd_entries(f.Z1());
  const IntSet top = set_union(set_minus(s.top(), odd), set_intersection(s.bottom(), odd));
  const IntSet bottom = set_union(set_minus(s.bottom(), odd), set_intersection(s.top(), odd));
  if (f.kind == FamilyKind::D) return symbol_of(f, canonical_lambda(f, set_minus(bottom, f.Z2)));
  // the bottom row must keep |Y| = d mod 2; otherwise the rows trade places
  const int moved_y = static_cast<int>(bottom.size() - f.Z2.size());
  if (moved_y % 2 != f.d() % 2) return Symbol(bottom, top);
  return Symbol(top, bottom);
}

int member_span_rank(const ClassicalFamily& f) {
  const IntSet z1 = f.Z1();
  auto mask_of = [&z1](const IntSet& s) {
    std::uint64_t m = 0;
    for (int x : s) m |= std::uint64_t{1} << (std::lower_bound(z1.begin(), z1.end(), x) - z1.begin());
    return m;
  };
  std::vector<std::uint64_t> rows;
  for (const auto& x : family_members(f)) rows.push_back(mask_of(v_coordinate(f, x)));
  if (f.kind == FamilyKind::D) rows.push_back(mask_of(z1));  // work modulo Z1
  int rank = 0;
  for (int bit = 0; bit < static_cast<int>(z1.size()); ++bit) {
    const std::uint64_t b = std::uint64_t{1} << bit;
    auto pivot = std::find_if(rows.begin() + rank, rows.end(), [b](std::uint64_t r) { return r & b; });
    if (pivot == rows.end()) continue;
    std::iter_swap(rows.begin() + rank, pivot);
    for (std::size_t i = 0; i < rows.size(); ++i)
      if (i != static_cast<std::size_t>(rank) && (rows[i] & b)) rows[i] ^= rows[rank];
    ++rank;
  }
  return f.kind == FamilyKind::D ? rank - (z1.empty() ? 0 : 1) : rank;
}

SymbolFourierModel::SymbolFourierModel(ClassicalFamily f) : family_(std::move(f)) {
  family_.validate();
  elements_ = enumerate_MGamma_symbols(family_);
  identity_ = index_of(canonical_lambda(family_, family_.B));
}

std::size_t SymbolFourierModel::index_of(const LambdaY& x) const {
  auto it = std::lower_bound(elements_.begin(), elements_.end(), x);
  if (it == elements_.end() || *it != x) throw std::out_of_range("not an element of M(Gamma_c)");
  return static_cast<std::size_t>(it - elements_.begin());
}

Rat SymbolFourierModel::pairing(std::size_t x, std::size_t y) const {
  return symbol_pairing(family_, elements_.at(x), elements_.at(y));
}

std::size_t SymbolFourierModel::convolve(std::size_t s, std::size_t x) const {
  return index_of(uflip::convolve(family_, elements_.at(s), elements_.at(x)));
}

std::string SymbolFourierModel::label(std::size_t x) const { return symbol_of(family_, elements_.at(x)).to_string(); }

std::string SymbolFourierModel::group_name() const {
  const int r = family_.gamma_rank();
  if (r == 0) return "1";
  if (r == 1) return "Z/2";
  return "(Z/2)^" + std::to_string(r);
}

}  // namespace uflip
