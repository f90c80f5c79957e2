#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>
#include <string>
#include <vector>

#include "char2lift/classes.hpp"
#include "char2lift/errors.hpp"
#include "char2lift/graphs.hpp"
#include "char2lift/lift.hpp"
#include "char2lift/tournaments.hpp"

namespace py = pybind11;

namespace {

using namespace char2lift;

py::object to_py_int(const BigInt& value) {
  return py::module_::import("builtins").attr("int")(value.str());
}

struct AnyExpr {
  GraphExprPtr graph;
  TournExprPtr tourn;
};

AnyExpr parse_any(const std::string& text) {
  std::string graph_problem, tourn_problem;
  try {
    return {parse_graph_expr(text), nullptr};
  } catch (const ParseError& e) {
    graph_problem = e.what();
  }
  try {
    return {nullptr, parse_tourn_expr(text)};
  } catch (const ParseError& e) {
    tourn_problem = e.what();
  }
  throw std::invalid_argument("expression parses as neither a graph [" + graph_problem +
                              "] nor a tournament [" + tourn_problem + "]");
}

py::dict certificate_dict(const LiftCertificate& cert) {
  py::dict d;
  d["kind"] = to_string(cert.kind);
  d["e"] = cert.e;
  if (cert.f) d["f"] = *cert.f;
  d["passed"] = cert.passed;
  py::list checks;
  for (const auto& c : cert.checks) {
    py::dict check;
    check["cond"] = c.cond;
    check["k"] = c.k;
    check["expected"] = c.expected;
    check["observed"] = c.observed;
    check["modulus"] = c.modulus;
    check["ok"] = c.ok;
    checks.append(check);
  }
  d["checks"] = checks;
  return d;
}

LiftCertificate dispatch_certificate(const std::string& expr, const std::string& kind, int e,
                                     std::optional<int> f) {
  const bool type_one = kind == "I";
  if (!type_one && kind != "II") throw std::invalid_argument("kind must be 'I' or 'II'");
  if (type_one && !f) throw std::invalid_argument("kind I requires f");
  if (!type_one && f) throw std::invalid_argument("kind II does not take f");
  const AnyExpr any = parse_any(expr);
  if (any.graph)
    return type_one ? check_lift_graph_I(*any.graph, e, *f) : check_lift_graph_II(*any.graph, e);
  return type_one ? check_lift_tournament_I(*any.tourn, e, *f)
                  : check_lift_tournament_II(*any.tourn, e);
}

}  // namespace

PYBIND11_MODULE(_char2lift, m) {
  m.doc() = "Congruence classes of characteristic polynomials of sign matrices";
  m.attr("__version__") = "0.1.0";

  m.def(
      "order_of_expr",
      [](const std::string& expr) {
        const AnyExpr any = parse_any(expr);
        return to_py_int(any.graph ? order_of(*any.graph) : order_of(*any.tourn));
      },
      py::arg("expr"), "Number of vertices of a graph or tournament expression.");

  m.def(
      "canonical_expr",
      [](const std::string& expr) {
        const AnyExpr any = parse_any(expr);
        return any.graph ? to_string(*any.graph) : to_string(*any.tourn);
      },
      py::arg("expr"), "Parse an expression and print it back in canonical form.");

  m.def(
      "class_of_expr",
      [](const std::string& expr, int e) {
        const AnyExpr any = parse_any(expr);
        return any.graph ? extract_class(*any.graph, e) : extract_class(*any.tourn, e);
      },
      py::arg("expr"), py::arg("e"),
      "Class tuple (c_2..c_e) mod 2^e of J-2A for the expression.");

  m.def(
      "enumerate_classes",
      [](const std::string& family, int n, int e, int workers) {
        return enumerate_classes(family_from_string(family), n, e, workers).classes;
      },
      py::arg("family"), py::arg("n"), py::arg("e"), py::arg("workers") = 1,
      "Exhaustive, sorted class set of the family at order n.");

  m.def(
      "sample_classes",
      [](const std::string& family, int n, int e, std::uint64_t trials, std::uint64_t seed) {
        return sample_classes(family_from_string(family), n, e, trials, seed).classes;
      },
      py::arg("family"), py::arg("n"), py::arg("e"), py::arg("trials"), py::arg("seed"),
      "Classes hit by deterministic random sampling.");

  m.def(
      "predicted_count",
      [](const std::string& family, int e, bool odd_n) {
        return to_py_int(predicted_count(family_from_string(family), e, odd_n));
      },
      py::arg("family"), py::arg("e"), py::arg("odd_n"),
      "Predicted class count of the counting theorems.");

  m.def(
      "verify_lift",
      [](const std::string& expr, const std::string& kind, int e, std::optional<int> f) {
        return certificate_dict(dispatch_certificate(expr, kind, e, f));
      },
      py::arg("expr"), py::arg("kind"), py::arg("e"), py::arg("f") = std::nullopt,
      "Full lift certificate for a graph or tournament expression.");

  m.def(
      "construct_lift",
      [](const std::string& family, const std::string& kind, int e, std::optional<int> f) {
        const bool type_one = kind == "I";
        if (!type_one && kind != "II") throw std::invalid_argument("kind must be 'I' or 'II'");
        if (type_one && !f) throw std::invalid_argument("kind I requires f");
        if (!type_one && f) throw std::invalid_argument("kind II does not take f");
        if (family == "S")
          return to_string(type_one ? *construct_lift_graph_I(e, *f) : *construct_lift_graph_II(e));
        if (family == "T")
          return to_string(type_one ? *construct_lift_tournament_I(e, *f)
                                    : *construct_lift_tournament_II(e));
        throw std::invalid_argument("family must be 'S' (graphs) or 'T' (tournaments)");
      },
      py::arg("family"), py::arg("kind"), py::arg("e"), py::arg("f") = std::nullopt,
      "Expression of a verified lift graph or tournament.");

  m.def(
      "u_witness",
      [](int e, const std::vector<std::uint64_t>& targets) {
        const WitnessResult w = u_class_witness(e, targets);
        py::dict d;
        d["expr"] = to_string(*w.expr);
        d["targets"] = w.targets;
        d["achieved"] = w.achieved;
        py::list multipliers;
        for (const BigInt& v : w.multipliers) multipliers.append(to_py_int(v));
        d["multipliers"] = multipliers;
        d["order"] = to_py_int(order_of(*w.expr));
        d["verified"] = w.verified;
        return d;
      },
      py::arg("e"), py::arg("targets"),
      "Directed-path union whose class hits the requested residues mod 2^e.");

  m.def(
      "admissible_u_targets", [](int e) { return admissible_u_targets(e); }, py::arg("e"),
      "All residue tuples reachable by witnesses, in lexicographic order.");

  m.def(
      "theorem_report",
      [](const std::string& family, int e, const std::vector<int>& ns, int workers) {
        py::list rows;
        for (const TheoremRow& row : theorem_report(family_from_string(family), e, ns, workers)) {
          py::dict d;
          d["n"] = row.n;
          d["observed"] = to_py_int(row.observed);
          d["predicted"] = to_py_int(row.predicted);
          d["bound_ok"] = row.bound_ok;
          d["equal"] = row.equal;
          rows.append(d);
        }
        return rows;
      },
      py::arg("family"), py::arg("e"), py::arg("ns"), py::arg("workers") = 1,
      "Observed exhaustive counts against the predicted ones.");
}
