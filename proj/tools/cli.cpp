#include "cli.hpp"

#include <CLI11.hpp>

#include <future>
#include <iostream>
#include <map>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "uflip/dl_expansion.hpp"
#include "uflip/error.hpp"
#include "uflip/families.hpp"
#include "uflip/hecke.hpp"
#include "uflip/involution.hpp"
#include "uflip/mgamma.hpp"
#include "uflip/weyl.hpp"

namespace uflip::cli {

namespace {

using nlohmann::json;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Selector {
  std::string type;
  int rank = 0;
  std::string format = "json";

  void add_to(CLI::App* app) {
    app->add_option("--type", type, "B, C, D, G2 or F4")->required();
    app->add_option("--rank", rank, "rank (implied for G2 and F4)");
    app->add_option("--format", format, "json, tsv or pretty")
        ->check(CLI::IsMember({"json", "tsv", "pretty"}));
  }

  std::pair<std::string, int> resolve() const {
    std::string t = type;
    int r = rank;
    if (t == "G2" || t == "F4") {
      const int implied = t[1] - '0';
      if (r != 0 && r != implied) throw UsageError(t + " has rank " + std::to_string(implied));
      t = t.substr(0, 1);
      r = implied;
    } else if ((t == "G" || t == "F") && r == 0) {
      r = t == "G" ? 2 : 4;
    }
    if (r <= 0) throw UsageError("--rank is required for type " + type);
    return {t, r};
  }

  std::shared_ptr<const WeylGroup> weyl() const {
    auto [t, r] = resolve();
    return WeylGroup::build(t, r);
  }
};

std::string tsv(const std::vector<std::vector<std::string>>& rows) {
  std::string s;
  for (const auto& r : rows) {
    for (std::size_t i = 0; i < r.size(); ++i) s += (i ? "\t" : "") + r[i];
    s += "\n";
  }
  return s;
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

std::string member_list(const Family& f) {
  std::string s;
  for (const auto& m : f.members) s += (s.empty() ? "" : ",") + m.label;
  return s;
}

const Family& pick_family(const FamilyTable& t, int id) {
  if (id < 0 || static_cast<std::size_t>(id) >= t.families().size())
    throw UsageError("no family " + std::to_string(id) + " (there are " + std::to_string(t.families().size()) + ")");
  return t.family(static_cast<std::size_t>(id));
}

std::vector<std::size_t> family_ids(const FamilyTable& t, int id) {
  if (id >= 0) return {pick_family(t, id).id};
  std::vector<std::size_t> ids;
  for (const auto& f : t.families()) ids.push_back(f.id);
  return ids;
}

// families ------------------------------------------------------------------

int cmd_families(const Selector& sel, std::ostream& out) {
  auto table = FamilyTable::build(sel.weyl());
  if (sel.format == "json") {
    json j = families_json(*table);
    j["count"] = table->families().size();
    out << dump(j);
  } else if (sel.format == "tsv") {
    std::vector<std::vector<std::string>> rows{{"id", "gamma", "size", "unipotent", "special", "members"}};
    for (const auto& f : table->families())
      rows.push_back({std::to_string(f.id), f.gamma(), std::to_string(f.size()), std::to_string(f.model->size()),
                      f.special().label, member_list(f)});
    out << tsv(rows);
  } else {
    out << table->weyl().name() << ": " << table->families().size() << " families, " << table->unipotent_count()
        << " unipotent representations\n";
    for (const auto& f : table->families()) {
      out << "\nfamily " << f.id << "  Gamma = " << f.gamma() << "  |c| = " << f.size()
          << "  |M| = " << f.model->size() << "\n";
      if (f.classical) out << f.classical->special_symbol().to_pretty() << "\n";
      for (std::size_t k = 0; k < f.size(); ++k)
        out << "  " << f.members[k].label << "  b=" << f.members[k].b << "  b'=" << f.b_prime(k)
            << "  m=" << f.model->label(f.members[k].m) << "\n";
    }
  }
  return 0;
}

// symbol --------------------------------------------------------------------

int cmd_symbol(const Selector& sel, const std::string& irr_label, int family_id, std::ostream& out) {
  auto w = sel.weyl();
  if (!w->is_classical()) throw UsageError("symbols exist for classical types only");
  auto table = FamilyTable::build(w);
  std::vector<std::size_t> irrs;
  if (!irr_label.empty()) {
    irrs.push_back(w->find_irreducible(irr_label));
  } else {
    for (std::size_t id : family_ids(*table, family_id))
      for (const auto& m : table->family(id).members) irrs.push_back(m.irr);
  }
  json arr = json::array();
  std::vector<std::vector<std::string>> rows{{"irreducible", "symbol", "family", "Y", "b", "b_prime"}};
  std::string pretty;
  for (std::size_t i : irrs) {
    const Family& f = table->family(table->family_of(i));
    const auto& cf = *f.classical;
    const auto& model = dynamic_cast<const SymbolFourierModel&>(*f.model);
    const std::size_t pos = table->position(i);
    const LambdaY& y = model.elements()[f.members[pos].m];
    const Symbol s = w->symbol(i).reduced();
    std::string ys;
    for (int v : y.Y) ys += (ys.empty() ? "" : ",") + std::to_string(v);
    ys = "{" + ys + "}";
    arr.push_back({{"irreducible", w->irreducibles()[i].label},
                   {"symbol", s.to_string()},
                   {"family", f.id},
                   {"special_symbol", cf.special_symbol().to_string()},
                   {"Y", y.Y},
                   {"b", w->irreducibles()[i].b},
                   {"b_prime", f.b_prime(pos)}});
    rows.push_back({w->irreducibles()[i].label, s.to_string(), std::to_string(f.id), ys,
                    std::to_string(w->irreducibles()[i].b), std::to_string(f.b_prime(pos))});
    pretty += w->irreducibles()[i].label + "  family " + std::to_string(f.id) + "  Y = " + ys + "\n" +
              s.to_pretty() + "\n\n";
  }
  if (sel.format == "json") out << dump({{"type", w->name()}, {"symbols", arr}});
  else if (sel.format == "tsv") out << tsv(rows);
  else out << pretty;
  return 0;
}

// degrees -------------------------------------------------------------------

int cmd_degrees(const Selector& sel, int family_id, std::ostream& out) {
  InvolutionTable inv(FamilyTable::build(sel.weyl()));
  json arr = json::array();
  std::vector<std::vector<std::string>> rows{{"family", "xi", "member", "degree", "a", "A"}};
  std::string pretty;
  for (std::size_t id : family_ids(inv.families(), family_id)) {
    const auto& fi = inv.family(id);
    const Family& f = fi.family();
    for (std::size_t m = 0; m < f.model->size(); ++m) {
      const auto pos = f.member_at(m);
      const std::string member = pos ? f.members[*pos].label : "";
      const std::string d = fi.degree(m).to_string();
      json e{{"family", id}, {"xi", f.model->label(m)}, {"degree", d}, {"a", fi.a()}, {"A", fi.A()}};
      if (pos) e["member"] = member;
      arr.push_back(e);
      rows.push_back({std::to_string(id), f.model->label(m), member, d, std::to_string(fi.a()), std::to_string(fi.A())});
      pretty += "family " + std::to_string(id) + "  " + f.model->label(m) + (pos ? "  [" + member + "]" : "") +
                "\n  D(u) = " + d + "\n";
    }
  }
  if (sel.format == "json") out << dump({{"type", inv.weyl().name()}, {"degrees", arr}});
  else if (sel.format == "tsv") out << tsv(rows);
  else out << pretty;
  return 0;
}

// involution ----------------------------------------------------------------

int cmd_involution(const Selector& sel, int family_id, std::ostream& out) {
  InvolutionTable inv(FamilyTable::build(sel.weyl()));
  json arr = json::array();
  std::vector<std::vector<std::string>> rows{{"family", "xi", "xi_bang", "degree", "degree_bang"}};
  std::string pretty;
  bool ok = true;
  for (std::size_t id : family_ids(inv.families(), family_id)) {
    const auto& fi = inv.family(id);
    const Family& f = fi.family();
    json rep = fi.report();
    json map = json::array();
    pretty += "family " + std::to_string(id) + "  Gamma = " + f.gamma() + "  m(c) = " + f.model->label(fi.mc()) +
              "  a = " + std::to_string(fi.a()) + "  A = " + std::to_string(fi.A()) + "\n";
    for (std::size_t m = 0; m < f.model->size(); ++m) {
      const std::size_t b = fi.bang(m);
      map.push_back({f.model->label(m), f.model->label(b)});
      rows.push_back({std::to_string(id), f.model->label(m), f.model->label(b), fi.degree(m).to_string(),
                      fi.degree(b).to_string()});
      pretty += "  " + f.model->label(m) + " -> " + f.model->label(b) + "\n";
    }
    rep["bang"] = map;
    for (const auto& [k, v] : rep["checks"].items()) ok = ok && v["pass"].get<bool>();
    arr.push_back(rep);
  }
  if (sel.format == "json" || !ok) out << dump({{"type", inv.weyl().name()}, {"families", arr}});
  else if (sel.format == "tsv") out << tsv(rows);
  else out << pretty;
  return ok ? 0 : 1;
}

// expand --------------------------------------------------------------------

std::vector<int> parse_word(const std::string& text) {
  std::vector<int> word;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    try {
      word.push_back(std::stoi(item));
    } catch (const std::exception&) {
      throw UsageError("bad word " + text);
    }
  }
  return word;
}

int cmd_expand(const Selector& sel, const std::string& cls, const std::string& word, bool sums, std::ostream& out) {
  InvolutionTable inv(FamilyTable::build(sel.weyl()));
  const WeylGroup& w = inv.weyl();
  json j{{"type", w.name()}};
  std::vector<std::vector<std::string>> rows{{"w", "xi", "coefficient"}};
  auto add_rows = [&](const std::string& label, const json& e) {
    for (const auto& c : e["coefficients"]) rows.push_back({label, c[0], c[1]});
  };
  if (sums) {
    const auto s = uflip::w0_sums(inv);
    j["ungraded"] = expansion_json(inv, "w0", s.ungraded)["coefficients"];
    j["graded"] = graded_json(inv, s.graded);
    add_rows("w0", expansion_json(inv, "w0", s.ungraded));
  } else {
    std::vector<std::size_t> classes;
    if (!cls.empty()) classes.push_back(w.find_class(cls));
    else if (!word.empty()) classes.push_back(w.class_of_word(parse_word(word)));
    else
      for (std::size_t c = 0; c < w.classes().size(); ++c) classes.push_back(c);
    json arr = json::array();
    for (std::size_t c : classes) {
      json e = expansion_json(inv, w.classes()[c].label, hstar_expansion(inv, c));
      add_rows(w.classes()[c].label, e);
      arr.push_back(e);
    }
    j["expansions"] = arr;
  }
  if (sel.format == "tsv") {
    out << tsv(rows);
  } else if (sel.format == "pretty") {
    std::string last;
    for (std::size_t r = 1; r < rows.size(); ++r) {
      if (rows[r][0] != last) out << "H*(X_w), w in " << rows[r][0] << "\n";
      last = rows[r][0];
      out << "  " << rows[r][2] << "  " << rows[r][1] << "\n";
    }
  } else {
    out << dump(j);
  }
  return 0;
}

// verify --------------------------------------------------------------------

struct CheckSet {
  bool all = false, tables = false, mc_unique = false, sign_rule = false, degree_flip = false, aA = false, w0_duality = false,
       w0_sums = false, weight = false, hecke = false;
};

int cmd_verify(const Selector& sel, CheckSet c, int gate, const std::string& v0, std::ostream& out) {
  if (c.all) c.tables = c.mc_unique = c.sign_rule = c.degree_flip = c.aA = c.w0_duality = c.w0_sums = c.weight = c.hecke = true;
  if (!(c.tables || c.mc_unique || c.sign_rule || c.degree_flip || c.aA || c.w0_duality || c.w0_sums || c.weight || c.hecke))
    throw UsageError("nothing to verify; pass --all or a check flag");
  auto w = sel.weyl();
  InvolutionTable inv(FamilyTable::build(w));
  json checks;
  bool ok = true;
  auto record = [&](const std::string& name, bool pass, const json& cex) {
    json r{{"pass", pass}};
    if (!pass) r["counterexample"] = cex;
    checks[name] = r;
    ok = ok && pass;
  };
  json cex;
  if (c.tables) {
    cex = nullptr;
    const bool orth = verify_orthogonality(*w, &cex);
    record("orthogonality", orth, cex);
    cex = nullptr;
    record("fake_degrees", verify_fake_degrees(*w, &cex), cex);
  }
  // families are checked concurrently; the first failure in id order is reported
  auto per_family = [&](const std::string& name, auto check) {
    const std::size_t n = inv.families().families().size();
    std::vector<std::future<std::pair<bool, json>>> jobs;
    for (std::size_t id = 0; id < n; ++id)
      jobs.push_back(std::async(std::launch::async, [&, id] {
        json e;
        const bool pass = check(inv.family(id), &e);
        return std::make_pair(pass, e);
      }));
    bool pass = true;
    json bad;
    for (std::size_t id = 0; id < n; ++id) {
      auto [p, e] = jobs[id].get();
      if (!p && pass) {
        pass = false;
        bad = {{"family", id}, {"detail", e}};
      }
    }
    record(name, pass, bad);
  };
  if (c.mc_unique) per_family("mc_unique", [](const FamilyInvolution& f, json* e) { return f.verify_mc_unique(e); });
  if (c.sign_rule) per_family("sign_rule", [](const FamilyInvolution& f, json* e) { return f.verify_sign_rule(e); });
  if (c.degree_flip) per_family("degree_flip", [](const FamilyInvolution& f, json* e) { return f.verify_degree_flip(e); });
  if (c.aA) per_family("aA", [](const FamilyInvolution& f, json* e) { return f.a_A_well_defined(e); });
  if (c.w0_duality) {
    cex = nullptr;
    record("w0_duality", verify_w0_duality(inv, &cex), cex);
  }
  if (c.w0_sums) {
    cex = nullptr;
    record("w0_sums", verify_w0_sums(inv, &cex), cex);
  }
  if (c.weight) {
    // w = 1: tr(T_1, E(v)) = dim E, tr(T_w0, E(v)) from the central scalar
    std::vector<RatPoly> at_one, at_w0;
    for (std::size_t i = 0; i < w->irreducibles().size(); ++i) {
      const auto& fi = inv.family(inv.families().family_of(i));
      const auto& e = w->irreducibles()[i];
      at_one.push_back(RatPoly(Rat(e.dim)));
      at_w0.push_back(RatPoly::monomial(2 * w->nu() - fi.a() - fi.A(), Rat(e.b % 2 == 0 ? e.dim : -e.dim)));
    }
    const bool pass = verify_weight_shift(inv, at_one, at_w0);
    record("weight_shift_w1", pass, pass ? json() : json{{"graded", graded_json(inv, graded_expansion(inv, at_w0))}});
  }
  if (c.hecke) {
    const auto [t, r] = sel.resolve();
    if (r > gate) {
      checks["hecke"] = {{"skipped", "rank " + std::to_string(r) + " exceeds the Hecke rank gate " + std::to_string(gate)}};
    } else {
      auto h = HeckeAlgebra::build(t, r, gate);
      cex = nullptr;
      const bool rel = h.verify_quadratic(&cex) && h.verify_braid(&cex) && h.verify_Tw0_central(&cex);
      record("hecke_relations", rel, cex);
      const auto spectrum = verify_central_scalar(h, inv, Rat::parse(v0));
      record("hecke_spectrum", spectrum.pass, to_json(spectrum));
    }
  }
  json j{{"type", w->name()}, {"checks", checks}, {"pass", ok}};
  if (sel.format == "json" || !ok) {
    out << dump(j);
  } else if (sel.format == "tsv") {
    std::vector<std::vector<std::string>> rows{{"check", "result"}};
    for (const auto& [k, v] : checks.items())
      rows.push_back({k, v.contains("skipped") ? "skipped" : (v["pass"].get<bool>() ? "pass" : "fail")});
    out << tsv(rows);
  } else {
    for (const auto& [k, v] : checks.items())
      out << (v.contains("skipped") ? "SKIP" : (v["pass"].get<bool>() ? "PASS" : "FAIL")) << "  " << k << "\n";
  }
  return ok ? 0 : 1;
}

// hecke-check ---------------------------------------------------------------

int cmd_hecke(const Selector& sel, int gate, const std::string& v0_text, std::ostream& out) {
  const auto [t, r] = sel.resolve();
  auto h = HeckeAlgebra::build(t, r, gate);
  InvolutionTable inv(FamilyTable::build(WeylGroup::build(t, r)));
  Rat v0;
  try {
    v0 = Rat::parse(v0_text);
  } catch (const std::exception&) {
    throw UsageError("bad --v0 " + v0_text);
  }
  json checks;
  bool ok = true;
  json cex;
  auto record = [&](const char* name, bool pass) {
    json rr{{"pass", pass}};
    if (!pass) rr["counterexample"] = cex;
    checks[name] = rr;
    ok = ok && pass;
    cex = nullptr;
  };
  record("quadratic", h.verify_quadratic(&cex));
  record("braid", h.verify_braid(&cex));
  record("length_additivity", h.verify_length_additivity(200, &cex));
  record("central", h.verify_Tw0_central(&cex));
  const auto spectrum = verify_central_scalar(h, inv, v0);
  checks["spectrum"] = to_json(spectrum);
  ok = ok && spectrum.pass;
  json j{{"type", inv.weyl().name()}, {"dimension", h.dimension()}, {"checks", checks}, {"pass", ok}};
  if (sel.format == "json" || !ok) {
    out << dump(j);
  } else if (sel.format == "tsv") {
    std::vector<std::vector<std::string>> rows{{"check", "result"}};
    for (const auto& [k, v] : checks.items()) rows.push_back({k, v["pass"].get<bool>() ? "pass" : "fail"});
    std::string scal;
    for (const auto& x : spectrum.predicted) scal += (scal.empty() ? "" : ",") + x.to_string();
    rows.push_back({"scalars", scal});
    out << tsv(rows);
  } else {
    out << inv.weyl().name() << " Hecke algebra, dimension " << h.dimension() << ", v0 = " << v0.to_string() << "\n";
    for (const auto& [k, v] : checks.items()) out << (v["pass"].get<bool>() ? "PASS" : "FAIL") << "  " << k << "\n";
    out << "predicted scalars:";
    for (const auto& x : spectrum.predicted) out << " " << x.to_string();
    out << "\n";
  }
  return ok ? 0 : 1;
}

// dump-tables ---------------------------------------------------------------

int cmd_dump(const Selector& sel, const std::string& what, const std::string& gamma, std::ostream& out) {
  if (what == "pairing") {
    if (gamma.size() != 2 || gamma[0] != 'S' || gamma[1] < '1' || gamma[1] > '5') throw UsageError("--gamma must be S1..S5");
    auto m = symmetric_mgamma(gamma[1] - '0');
    json labels = json::array();
    for (const auto& x : m->elements()) labels.push_back(m->label(x));
    const json rows = pairing_matrix_json(*m);
    if (sel.format == "tsv") {
      std::vector<std::vector<std::string>> t;
      std::vector<std::string> head{""};
      for (const auto& l : labels) head.push_back(l);
      t.push_back(head);
      for (std::size_t i = 0; i < rows.size(); ++i) {
        std::vector<std::string> r{labels[i]};
        for (const auto& v : rows[i]) r.push_back(v);
        t.push_back(r);
      }
      out << tsv(t);
    } else {
      out << dump({{"gamma", gamma}, {"elements", labels}, {"pairing", rows}});
    }
    return 0;
  }
  auto w = sel.weyl();
  if (what == "characters") {
    const json j = character_table_json(*w);
    if (sel.format == "json") {
      out << dump(j);
    } else {
      std::vector<std::vector<std::string>> t;
      std::vector<std::string> head{"irreducible", "b", "fake_degree"};
      for (const auto& c : w->classes()) head.push_back(c.label);
      t.push_back(head);
      for (const auto& e : w->irreducibles()) {
        std::vector<std::string> r{e.label, std::to_string(e.b), e.fake_degree.to_string("q")};
        for (auto v : e.values) r.push_back(std::to_string(v));
        t.push_back(r);
      }
      out << tsv(t);
    }
    return 0;
  }
  if (what == "exceptional") {
    if (w->is_classical()) throw UsageError("embedded data exists for G2 and F4 only");
    const auto problems = validate_exceptional_data(*w);
    json j{{"type", w->name()}, {"data", exceptional_data().at(w->name())}, {"problems", problems},
           {"pass", problems.empty()}};
    out << dump(j);
    return problems.empty() ? 0 : 1;
  }
  throw UsageError("unknown table " + what + " (characters, exceptional, pairing)");
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Families, Fourier data and the q -> -q involution for Weyl groups", "uflip"};
  app.require_subcommand(1);
  app.set_help_all_flag("--help-all");

  Selector sel;
  int family_id = -1;
  std::string irr_label, cls, word, what = "characters", gamma = "S3", v0 = "3";
  bool w0_sums = false;
  CheckSet checks;
  int gate = kDefaultHeckeRankGate;
  try {
    gate = hecke_rank_gate_from_env();
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }

  auto* families = app.add_subcommand("families", "list the families of Irr(W)");
  sel.add_to(families);

  auto* symbol = app.add_subcommand("symbol", "symbols of classical irreducibles");
  sel.add_to(symbol);
  symbol->add_option("--irr", irr_label, "irreducible label, e.g. 1.1");
  symbol->add_option("--family", family_id, "family id");

  auto* degrees = app.add_subcommand("degrees", "degree polynomials D(u) of unipotent representations");
  sel.add_to(degrees);
  degrees->add_option("--family", family_id, "family id");

  auto* involution = app.add_subcommand("involution", "m(c) and the involution on each family");
  sel.add_to(involution);
  involution->add_option("--family", family_id, "family id");

  auto* expand = app.add_subcommand("expand", "unipotent multiplicities of H*(X_w)");
  sel.add_to(expand);
  expand->add_option("--class", cls, "class label");
  expand->add_option("--word", word, "comma separated simple reflections, numbered from 1");
  expand->add_flag("--w0-sums", w0_sums, "the w0 sums over principal series members");

  auto* verify = app.add_subcommand("verify", "run identity checks");
  sel.add_to(verify);
  verify->add_flag("--all", checks.all, "every check below");
  verify->add_flag("--tables", checks.tables, "orthogonality and fake degree identities");
  verify->add_flag("--mc-unique", checks.mc_unique, "existence and uniqueness of m(c)");
  verify->add_flag("--sign-rule", checks.sign_rule, "sign rule for m(c) * m");
  verify->add_flag("--degree-flip", checks.degree_flip, "degree polynomials under u -> -u");
  verify->add_flag("--aA", checks.aA, "a and A constant on families");
  verify->add_flag("--w0-duality", checks.w0_duality, "H*(X_w) against H*(X_{w w0})");
  verify->add_flag("--w0-sums", checks.w0_sums, "w0 sums against H*(X_w0)");
  verify->add_flag("--weight-shift", checks.weight, "graded shift at w = 1");
  verify->add_flag("--hecke", checks.hecke, "Hecke relations and T_w0 spectrum (rank gated)");
  verify->add_option("--hecke-rank-gate", gate, "largest rank for Hecke checks");
  verify->add_option("--v0", v0, "specialisation of v for the spectrum");

  auto* hecke = app.add_subcommand("hecke-check", "Hecke relations, centrality of T_w0 and its spectrum");
  sel.add_to(hecke);
  hecke->add_option("--hecke-rank-gate", gate, "largest rank allowed");
  hecke->add_option("--v0", v0, "specialisation of v");

  auto* dumpt = app.add_subcommand("dump-tables", "character tables, embedded data, pairing matrices");
  dumpt->add_option("--type", sel.type, "B, C, D, G2 or F4");
  dumpt->add_option("--rank", sel.rank, "rank");
  dumpt->add_option("--format", sel.format, "json or tsv")->check(CLI::IsMember({"json", "tsv", "pretty"}));
  dumpt->add_option("--what", what, "characters, exceptional or pairing");
  dumpt->add_option("--gamma", gamma, "S1..S5 for --what pairing");

  std::vector<std::string> rev(args.rbegin(), args.rend());
  try {
    app.parse(rev);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp& e) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }

  try {
    if (*families) return cmd_families(sel, out);
    if (*symbol) return cmd_symbol(sel, irr_label, family_id, out);
    if (*degrees) return cmd_degrees(sel, family_id, out);
    if (*involution) return cmd_involution(sel, family_id, out);
    if (*expand) return cmd_expand(sel, cls, word, w0_sums, out);
    if (*verify) return cmd_verify(sel, checks, gate, v0, out);
    if (*hecke) return cmd_hecke(sel, gate, v0, out);
    if (*dumpt) {
      if (what != "pairing" && sel.type.empty()) throw UsageError("--type is required");
      return cmd_dump(sel, what, gamma, out);
    }
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const GateError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const IntegrityError& e) {
    out << json{{"error", "integrity"}, {"message", e.what()}}.dump(2) << "\n";
    return 1;
  } catch (const ScalarRelationError& e) {
    out << json{{"error", "scalar relation"}, {"irreducible", e.irreducible()}, {"message", e.what()}}.dump(2)
        << "\n";
    return 1;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::out_of_range& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}

}  // namespace uflip::cli
