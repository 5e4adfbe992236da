#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include <nlohmann/json.hpp>

#include "cli.hpp"
#include "uflip/dl_expansion.hpp"
#include "uflip/error.hpp"
#include "uflip/families.hpp"
#include "uflip/hecke.hpp"
#include "uflip/involution.hpp"
#include "uflip/mgamma.hpp"
#include "uflip/weyl.hpp"

namespace py = pybind11;
using nlohmann::json;

namespace {

// Results cross the boundary as JSON text; the Python side parses them.
std::string text(const json& j) { return j.dump(); }

class Involutions {
 public:
  Involutions(const std::string& type, int rank)
      : table_(std::make_shared<uflip::InvolutionTable>(uflip::build_families(type, rank))) {}

  std::string name() const { return table_->weyl().name(); }
  std::size_t unipotent_count() const { return table_->unipotents().size(); }
  std::string families() const { return text(uflip::families_json(table_->families())); }
  std::string report() const { return text(table_->report()); }
  bool all_pass() const { return table_->all_pass(); }

  std::vector<std::pair<std::string, std::string>> degrees(std::size_t family) const {
    const auto& fi = table_->family(check(family));
    std::vector<std::pair<std::string, std::string>> out;
    for (std::size_t m = 0; m < fi.family().model->size(); ++m)
      out.emplace_back(fi.family().model->label(m), fi.degree(m).to_string());
    return out;
  }

  std::string mc(std::size_t family) const {
    const auto& fi = table_->family(check(family));
    return fi.family().model->label(fi.mc());
  }

  std::vector<std::pair<std::string, std::string>> bang(std::size_t family) const {
    const auto& fi = table_->family(check(family));
    std::vector<std::pair<std::string, std::string>> out;
    for (std::size_t m = 0; m < fi.family().model->size(); ++m)
      out.emplace_back(fi.family().model->label(m), fi.family().model->label(fi.bang(m)));
    return out;
  }

  std::string expand_word(const std::vector<int>& word) const {
    return text(uflip::expansion_json(*table_, "w", uflip::hstar_expansion_word(*table_, word)));
  }

  std::string expand_class(const std::string& label) const {
    const std::size_t c = table_->weyl().find_class(label);
    return text(uflip::expansion_json(*table_, label, uflip::hstar_expansion(*table_, c)));
  }

  bool w0_duality() const { return uflip::verify_w0_duality(*table_); }
  bool w0_sums() const { return uflip::verify_w0_sums(*table_); }

  std::string hecke_check(const std::string& v0, int gate) const {
    const auto& w = table_->weyl();
    auto h = uflip::HeckeAlgebra::build(w.type(), w.rank(), gate);
    return text(uflip::to_json(uflip::verify_central_scalar(h, *table_, uflip::Rat::parse(v0))));
  }

 private:
  std::size_t check(std::size_t family) const {
    if (family >= table_->families().families().size()) throw py::index_error("no such family");
    return family;
  }
  std::shared_ptr<const uflip::InvolutionTable> table_;
};

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Families, Fourier data and the q -> -q involution for Weyl groups";

  py::register_exception<uflip::IntegrityError>(m, "IntegrityError");
  py::register_exception<uflip::GateError>(m, "GateError");
  py::register_exception<uflip::ScalarRelationError>(m, "ScalarRelationError");

  m.def("character_table", [](const std::string& type, int rank) {
    return text(uflip::character_table_json(*uflip::WeylGroup::build(type, rank)));
  });
  m.def("check_tables", [](const std::string& type, int rank) {
    const auto w = uflip::WeylGroup::build(type, rank);
    return uflip::verify_orthogonality(*w) && uflip::verify_fake_degrees(*w);
  });
  m.def("pairing_matrix", [](int n) { return text(uflip::pairing_matrix_json(*uflip::symmetric_mgamma(n))); },
        py::arg("n"), "Pairing on M(S_n) as strings, row by row.");
  m.def("ring_hom", [](int n) { return uflip::symmetric_mgamma(n)->verify_ring_hom(); }, py::arg("n"));

  py::class_<Involutions>(m, "Involutions")
      .def(py::init<const std::string&, int>(), py::arg("type"), py::arg("rank"))
      .def_property_readonly("name", &Involutions::name)
      .def_property_readonly("unipotent_count", &Involutions::unipotent_count)
      .def("families_json", &Involutions::families)
      .def("report_json", &Involutions::report)
      .def("all_pass", &Involutions::all_pass)
      .def("degrees", &Involutions::degrees, py::arg("family"))
      .def("mc", &Involutions::mc, py::arg("family"))
      .def("bang", &Involutions::bang, py::arg("family"))
      .def("expand_word_json", &Involutions::expand_word, py::arg("word"))
      .def("expand_class_json", &Involutions::expand_class, py::arg("label"))
      .def("w0_duality", &Involutions::w0_duality)
      .def("w0_sums", &Involutions::w0_sums)
      .def("hecke_check_json", &Involutions::hecke_check, py::arg("v0") = "3",
           py::arg("gate") = uflip::kDefaultHeckeRankGate);

  m.def(
      "run_cli",
      [](const std::vector<std::string>& args) {
        std::ostringstream out, err;
        const int code = uflip::cli::run(args, out, err);
        return py::make_tuple(code, out.str(), err.str());
      },
      py::arg("args"), "Runs the command line in process; returns (exit code, stdout, stderr).");
}
