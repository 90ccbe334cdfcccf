// Python bindings. Structured objects cross the boundary as JSON text in the
// same schemas the CLI uses; scalars as exact rational strings.

#include "liefam/contraction.hpp"
#include "liefam/family.hpp"
#include "liefam/json_io.hpp"
#include "liefam/so_catalog.hpp"
#include "liefam/symmetric.hpp"
#include "liefam/verify.hpp"

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <stdexcept>

namespace py = pybind11;
using namespace liefam;
using nlohmann::json;

namespace {

LieAlgebra algebra_from_text(const std::string& text) { return lie_algebra_from_json(json::parse(text)); }

std::string algebra_to_text(const LieAlgebra& g) { return dump_canonical(lie_algebra_to_json(g)); }

SymmetricPair pair_from_text(const std::string& involution_text) {
    return split(involution_from_json(json::parse(involution_text)));
}

}  // namespace

PYBIND11_MODULE(_liefam, m) {
    m.doc() = "Exact Inonu-Wigner contractions, dual real forms and deformation families";

    py::register_exception<SchemaError>(m, "SchemaError", PyExc_ValueError);

    m.def("catalog", [](const std::string& name) { return algebra_to_text(build_reference(name)); },
          py::arg("name"), "Reference algebra by name, e.g. 'so:2,1' or 'iso:3', as lie-algebra/v1 JSON");

    m.def("validate", [](const std::string& algebra) {
              ValidationReport rep = algebra_from_text(algebra).validate();
              return py::make_tuple(rep.ok, dump_canonical(validation_report_to_json(rep)));
          },
          py::arg("algebra"), "(ok, report JSON) for a lie-algebra/v1 table");

    m.def("fingerprint", [](const std::string& algebra) {
              return dump_canonical(fingerprint_to_json(algebra_from_text(algebra).fingerprint()));
          },
          py::arg("algebra"), "Isomorphism-invariant fingerprint as JSON");

    m.def("fingerprint_equal", [](const std::string& a, const std::string& b) {
              return algebra_from_text(a).fingerprint() == algebra_from_text(b).fingerprint();
          },
          py::arg("a"), py::arg("b"));

    m.def("structurally_equal", [](const std::string& a, const std::string& b) {
              return algebra_from_text(a).structurally_equal(algebra_from_text(b));
          },
          py::arg("a"), py::arg("b"), "Entrywise equality of structure-constant tables");

    m.def("contract", [](const std::string& algebra, const std::vector<int>& k_indices) {
              LieAlgebra g = algebra_from_text(algebra);
              std::vector<Vec> k_basis;
              for (int i : k_indices) {
                  if (i < 1 || i > g.dim()) throw std::invalid_argument("k index out of range");
                  k_basis.push_back(g.basis_vector(i - 1));
              }
              return algebra_to_text(iw_contract(decomposition_with_canonical_complement(g, k_basis)));
          },
          py::arg("algebra"), py::arg("k_indices"),
          "Simple IW contraction over the subalgebra spanned by 1-based basis indices");

    m.def("gcontract", [](const std::string& algebra, const std::vector<int>& exponents) {
              auto res = generalized_iw_contract(algebra_from_text(algebra), ExponentAssignment{exponents});
              if (res.failure) throw std::domain_error(res.failure->str());
              return algebra_to_text(*res.algebra);
          },
          py::arg("algebra"), py::arg("exponents"),
          "Generalized diagonal contraction; raises if the limit does not exist");

    m.def("dualize", [](const std::string& involution) {
              return algebra_to_text(dual_form(pair_from_text(involution)).algebra);
          },
          py::arg("involution"), "Dual real form of an involution/v1 symmetric pair");

    m.def("dualize_so", [](int p, int d, int q) {
              return algebra_to_text(dual_form(build_theta_pair(SOParams{p, d, q})).algebra);
          },
          py::arg("p"), py::arg("d"), py::arg("q"));

    m.def("family", [](const std::string& involution) {
              return dump_canonical(family_to_json(contraction_family(pair_from_text(involution)).family));
          },
          py::arg("involution"), "Deformation family of a symmetric pair as family/v1 JSON");

    m.def("family_so", [](int p, int d, int q) {
              return dump_canonical(family_to_json(contraction_family(build_theta_pair(SOParams{p, d, q})).family));
          },
          py::arg("p"), py::arg("d"), py::arg("q"));

    m.def("fiber", [](const std::string& family_text, const std::string& alpha) {
              Family fam = family_from_json(json::parse(family_text));
              return algebra_to_text(fiber(fam, GQ(rational_from_string(alpha))));
          },
          py::arg("family"), py::arg("alpha"), "Evaluate a family/v1 at a rational parameter string");

    m.def("verify", [](int p, int d, int q, const std::vector<std::string>& alphas) {
              std::vector<Rational> as;
              for (const auto& a : alphas) as.push_back(rational_from_string(a));
              VerifyReport rep = verify_trichotomy(SOParams{p, d, q}, as);
              return py::make_tuple(rep.pass, dump_canonical(rep.to_json()));
          },
          py::arg("p"), py::arg("d"), py::arg("q"),
          py::arg("alphas") = std::vector<std::string>{"-4", "-1", "0", "1", "4"},
          "(pass, report JSON) for the fiber trichotomy of the catalog pair (p,d,q)");
}
