#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "scops/analysis.hpp"
#include "scops/bounds.hpp"
#include "scops/constructions.hpp"
#include "scops/document.hpp"
#include "scops/error.hpp"
#include "scops/harness.hpp"
#include "scops/minimize.hpp"
#include "scops/witnesses.hpp"

namespace py = pybind11;
using namespace scops;

namespace {

std::vector<std::vector<State>> rows_of(const Dfa& d) {
  std::vector<std::vector<State>> rows(d.symbol_count(), std::vector<State>(d.state_count()));
  for (Symbol a = 0; a < d.symbol_count(); ++a) {
    for (State q = 0; q < d.state_count(); ++q) rows[a][q] = d.next(q, a);
  }
  return rows;
}

py::dict report_dict(const BoundReport& r) {
  py::dict out;
  out["op"] = r.op;
  out["m"] = r.m;
  out["n"] = r.n;
  out["k1"] = r.k1 ? py::object(py::int_(*r.k1)) : py::object(py::none());
  out["formula"] = r.formula;
  out["constructed"] = r.constructed;
  out["minimal"] = r.minimal;
  out["pass"] = r.pass;
  out["line"] = format_report(r);
  return out;
}

std::vector<std::string> words(const Dfa& d, const std::vector<Word>& ws) {
  std::vector<std::string> out;
  out.reserve(ws.size());
  for (const auto& w : ws) out.push_back(d.alphabet().format_word(w));
  return out;
}

}  // namespace

PYBIND11_MODULE(_scops, m) {
  m.doc() = "Finite automata, reversal/star with catenation, and their state complexity";

  auto input_error = py::register_exception<InputError>(m, "InputError", PyExc_ValueError);
  py::register_exception<ShapeError>(m, "ShapeError", input_error.ptr());
  py::register_exception<DocumentError>(m, "DocumentError", PyExc_ValueError);
  py::register_exception<BudgetError>(m, "BudgetError", PyExc_RuntimeError);

  py::class_<Dfa>(m, "Dfa")
      .def(py::init([](const std::string& alphabet, const std::vector<std::vector<State>>& rows,
                       State initial, const std::vector<State>& finals) {
             return Dfa::from_rows(Alphabet(alphabet), rows, initial, finals);
           }),
           py::arg("alphabet"), py::arg("rows"), py::arg("initial"), py::arg("finals"),
           "rows[a][q] is the successor of state q on the a-th letter")
      .def_property_readonly("alphabet", [](const Dfa& d) { return d.alphabet().letters(); })
      .def_property_readonly("state_count", &Dfa::state_count)
      .def_property_readonly("initial", &Dfa::initial)
      .def_property_readonly("finals", &Dfa::finals)
      .def_property_readonly("rows", &rows_of)
      .def("next", [](const Dfa& d, State q, const std::string& letter) {
        if (letter.size() != 1) throw InputError("expected a single letter");
        if (q >= d.state_count()) throw InputError("state out of range");
        return d.next(q, d.alphabet().index_of(letter[0]));
      })
      .def("accepts", [](const Dfa& d, const std::string& w) { return accepts(d, w); })
      .def("to_json", [](const Dfa& d) { return emit_document(d); })
      .def("to_dot", [](const Dfa& d) { return emit_dot(d); })
      .def("__len__", &Dfa::state_count)
      .def("__eq__", [](const Dfa& a, const Dfa& b) { return a == b; })
      .def("__repr__", [](const Dfa& d) {
        return "<Dfa states=" + std::to_string(d.state_count()) + " alphabet='" +
               d.alphabet().letters() + "'>";
      });

  m.def("from_json", &parse_dfa_document, py::arg("text"));

  m.def("sigma_star", [](const std::string& letters) { return sigma_star_dfa(Alphabet(letters)); });
  m.def("empty", [](const std::string& letters) { return empty_dfa(Alphabet(letters)); });
  m.def(
      "witness",
      [](const std::string& family, int size, std::size_t sigma) {
        return make_witness(parse_witness_family(family), size, sigma);
      },
      py::arg("family"), py::arg("size"), py::arg("sigma") = 2);
  m.def("witness_families", [] {
    std::vector<std::string> tags;
    for (const auto f : all_witness_families()) tags.emplace_back(to_string(f));
    return tags;
  });

  m.def("minimize", &minimize_hopcroft, py::arg("dfa"));
  m.def("minimize_brzozowski", &minimize_brzozowski, py::arg("dfa"));
  m.def("equivalent", &equivalent, py::arg("a"), py::arg("b"));
  m.def(
      "distinguishing_word",
      [](const Dfa& d, State p, State q) -> std::optional<std::string> {
        const auto w = distinguishing_word(d, p, q);
        if (!w) return std::nullopt;
        return d.alphabet().format_word(*w);
      },
      py::arg("dfa"), py::arg("p"), py::arg("q"));
  m.def(
      "enumerate_accepted",
      [](const Dfa& d, std::size_t max_len) { return words(d, enumerate_accepted(d, max_len)); },
      py::arg("dfa"), py::arg("max_len"));

  m.def(
      "combined",
      [](const std::string& op, const Dfa& a, const Dfa& b, bool minimize_result) {
        return combined(parse_operation(op), a, b, minimize_result);
      },
      py::arg("op"), py::arg("a"), py::arg("b"), py::arg("minimize") = false);
  m.def(
      "oracle_pipeline",
      [](const std::string& op, const Dfa& a, const Dfa& b) {
        return oracle_pipeline(parse_operation(op), a, b);
      },
      py::arg("op"), py::arg("a"), py::arg("b"));
  m.def(
      "oracle_sc",
      [](const std::string& op, const Dfa& a, const Dfa& b) {
        return oracle_sc(parse_operation(op), a, b);
      },
      py::arg("op"), py::arg("a"), py::arg("b"));

  m.def("sc_revcat", &sc_revcat, py::arg("m"), py::arg("n"));
  m.def("ub_revcat", &ub_revcat, py::arg("m"), py::arg("n"));
  m.def("ub_revcat_n1", &ub_revcat_n1, py::arg("m"));
  m.def("sc_starcat_special", &sc_starcat_special, py::arg("m"), py::arg("n"));
  m.def("ub_starcat_general", &ub_starcat_general, py::arg("m"), py::arg("n"), py::arg("k1"));
  m.def("sc_starcat", &sc_starcat, py::arg("m"), py::arg("n"));
  m.def(
      "evaluate",
      [](const std::string& kind, int mm, int n, std::optional<int> k1) {
        return evaluate(parse_bound_kind(kind), mm, n, k1);
      },
      py::arg("op"), py::arg("m"), py::arg("n"), py::arg("k1") = py::none());

  m.def(
      "verify_witness",
      [](const std::string& kind, int mm, int n) {
        return report_dict(verify_witness(parse_bound_kind(kind), mm, n));
      },
      py::arg("op"), py::arg("m"), py::arg("n"));
  m.def(
      "verify_construction",
      [](const std::string& op, const Dfa& a, const Dfa& b) {
        return report_dict(verify_construction(parse_operation(op), a, b));
      },
      py::arg("op"), py::arg("a"), py::arg("b"));
  m.def(
      "random_check",
      [](std::size_t trials, int m_max, int n_max, std::size_t sigma_max, std::uint64_t seed) {
        py::list out;
        for (const auto& r : random_check(trials, m_max, n_max, sigma_max, seed)) {
          out.append(report_dict(r));
        }
        return out;
      },
      py::arg("trials"), py::arg("m_max"), py::arg("n_max"), py::arg("sigma_max"),
      py::arg("seed"));
  m.def(
      "exhaustive_search",
      [](const std::string& op, int mm, int n, std::size_t sigma, std::optional<std::uint64_t> sample,
         std::uint64_t seed, std::uint64_t budget, unsigned threads) {
        SearchOptions options;
        options.sample_count = sample;
        options.seed = seed;
        options.budget = budget;
        options.threads = threads;
        SearchResult r;
        {
          py::gil_scoped_release release;
          r = exhaustive_search(parse_operation(op), mm, n, sigma, options);
        }
        py::dict out;
        out["max_minimal"] = r.max_minimal;
        out["pairs_examined"] = r.pairs_examined;
        out["argmax"] = r.argmax ? py::object(py::make_tuple(r.argmax->first, r.argmax->second))
                                 : py::object(py::none());
        out["line"] = format_search(r);
        return out;
      },
      py::arg("op"), py::arg("m"), py::arg("n"), py::arg("sigma"), py::arg("sample") = py::none(),
      py::arg("seed") = 1, py::arg("budget") = SearchOptions{}.budget, py::arg("threads") = 0);
}
