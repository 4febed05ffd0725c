#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "oseq/circuits.hpp"
#include "oseq/counting.hpp"
#include "oseq/graph.hpp"
#include "oseq/lempel.hpp"
#include "oseq/sequence_io.hpp"
#include "oseq/verify.hpp"

namespace py = pybind11;
using namespace oseq;

namespace {

Params make_params(int k, int n, rank_t max_rank) { return {k, n, max_rank}; }

py::tuple ni_tuple(const NiCounts& ni) {
  return py::make_tuple(ni.n0, ni.n1, ni.n2);
}

}  // namespace

PYBIND11_MODULE(_oseq, m) {
  m.doc() = "Constructions and certification for k-ary orientable and "
            "negative orientable sequences.";

  m.attr("HARD_RANK_LIMIT") = kHardRankLimit;
  m.attr("DEFAULT_RANK_CAP") = kDefaultRankCap;

  py::register_exception<internal_error>(m, "InternalError");
  py::register_exception<not_eulerian>(m, "NotEulerianError");

  // tuple algebra
  m.def("pseudoweight2", [](const KTuple& t, int k) { return pseudoweight2(t, k); },
        py::arg("t"), py::arg("k"),
        "Doubled pseudoweight: zeros count k, symbol s counts 2*s.");
  m.def("negate_tuple", [](const KTuple& t, int k) { return negate_tuple(t, k); });
  m.def("reverse_tuple", [](const KTuple& t) { return reverse_tuple(t); });
  m.def("reverse_negate", [](const KTuple& t, int k) { return reverse_negate(t, k); });
  m.def("is_negasymmetric", [](const KTuple& t, int k) { return is_negasymmetric(t, k); });
  m.def("encode_tuple", [](const KTuple& t, int k) { return encode_tuple(t, k); });
  m.def("decode_tuple", &decode_tuple, py::arg("rank"), py::arg("k"), py::arg("n"));

  // counting
  m.def("r_count", &r_count, py::arg("k"), py::arg("n"), py::arg("s2"));
  m.def("r_middle", &r_middle);
  m.def("nega_tuple_count", &nega_tuple_count);
  m.def("odd_part", &odd_part);
  m.def("n_i_counts_formula",
        [](int k, int n) { return ni_tuple(n_i_counts_formula(k, n)); });
  m.def("e_size", &e_size);
  m.def("s_partition_bound", &s_partition_bound);
  m.def("s_closed_form", &s_closed_form);
  m.def("s_lower_bound", &s_lower_bound);
  m.def("nos_upper_bound", &nos_upper_bound);
  m.def("os_upper_bound", &os_upper_bound);

  py::class_<CountReport>(m, "CountReport")
      .def_readonly("k", &CountReport::k)
      .def_readonly("n", &CountReport::n)
      .def_readonly("delta", &CountReport::delta)
      .def_readonly("m_odd_part", &CountReport::m_odd_part)
      .def_readonly("r_middle", &CountReport::r_middle)
      .def_readonly("e_size", &CountReport::e_size)
      .def_readonly("nega_tuples", &CountReport::nega_tuples)
      .def_property_readonly(
          "n_formula", [](const CountReport& r) { return ni_tuple(r.n_formula); })
      .def_readonly("s_partition", &CountReport::s_partition)
      .def_readonly("s_bound", &CountReport::s_bound)
      .def_readonly("nos_ub", &CountReport::nos_ub)
      .def_readonly("os_ub_next", &CountReport::os_ub_next);
  m.def("count_report", &count_report);

  // circuits
  py::class_<Circuit>(m, "Circuit")
      .def_readonly("canonical", &Circuit::canonical)
      .def_readonly("period", &Circuit::period)
      .def("__repr__", [](const Circuit& c) {
        std::string s = "Circuit([";
        for (std::size_t i = 0; i < c.canonical.size(); ++i) {
          if (i) s += ",";
          s += std::to_string(c.canonical[i]);
        }
        return s + "], period=" + std::to_string(c.period) + ")";
      });
  py::class_<CircuitClass>(m, "CircuitClass")
      .def_readonly("circuit", &CircuitClass::circuit)
      .def_readonly("negasymmetric", &CircuitClass::negasymmetric)
      .def_readonly("nega_window_count", &CircuitClass::nega_window_count)
      .def_readonly("partner_canonical", &CircuitClass::partner_canonical);

  m.def("circuit_of", [](const KTuple& t, int k) { return circuit_of(t, k); });
  m.def("circuit_is_negasymmetric",
        [](const Circuit& c, int k) { return circuit_is_negasymmetric(c, k); });
  m.def("nega_window_count",
        [](const Circuit& c, int k) { return nega_window_count(c, k); });
  m.def("classify_circuit",
        [](const Circuit& c, int k) { return classify_circuit(c, k); });
  m.def("partition_h",
        [](int k, int n, rank_t cap) { return partition_h(make_params(k, n, cap)); },
        py::arg("k"), py::arg("n"), py::arg("max_rank") = kDefaultRankCap);
  m.def("n_i_counts_enumerated",
        [](int k, int n, rank_t cap) {
          return ni_tuple(n_i_counts_enumerated(make_params(k, n, cap)));
        },
        py::arg("k"), py::arg("n"), py::arg("max_rank") = kDefaultRankCap);
  m.def("select_addable_circuits",
        [](int k, int n, rank_t cap) {
          return select_addable_circuits(make_params(k, n, cap));
        },
        py::arg("k"), py::arg("n"), py::arg("max_rank") = kDefaultRankCap);
  m.def("x_size",
        [](int k, int n, rank_t cap) { return x_size(make_params(k, n, cap)); },
        py::arg("k"), py::arg("n"), py::arg("max_rank") = kDefaultRankCap);

  // edge sets and sequences
  py::class_<EdgeSet>(m, "EdgeSet")
      .def(py::init<int, int>(), py::arg("k"), py::arg("order"))
      .def_property_readonly("k", &EdgeSet::k)
      .def_property_readonly("order", &EdgeSet::order)
      .def_property_readonly("universe", &EdgeSet::universe)
      .def("__len__", [](const EdgeSet& es) { return es.size(); })
      .def("test", &EdgeSet::test)
      .def("add", &EdgeSet::set)
      .def("ranks", [](const EdgeSet& es) {
        std::vector<rank_t> out;
        out.reserve(static_cast<std::size_t>(es.size()));
        es.for_each([&](rank_t r) { out.push_back(r); });
        return out;
      })
      .def("__eq__", [](const EdgeSet& a, const EdgeSet& b) { return a == b; });

  py::class_<Sequence>(m, "Sequence")
      .def(py::init([](std::vector<symbol_t> symbols, int k, int order) {
             return Sequence{std::move(symbols), k, order};
           }),
           py::arg("symbols"), py::arg("k"), py::arg("order"))
      .def_readonly("symbols", &Sequence::symbols)
      .def_readonly("k", &Sequence::k)
      .def_readonly("order", &Sequence::order)
      .def_property_readonly("period", &Sequence::period)
      .def("__len__", [](const Sequence& s) { return s.symbols.size(); });

  m.def("build_e",
        [](int k, int n, rank_t cap) { return build_e(make_params(k, n, cap)); },
        py::arg("k"), py::arg("n"), py::arg("max_rank") = kDefaultRankCap);
  m.def("build_x",
        [](int k, int n, rank_t cap) { return build_x(make_params(k, n, cap)); },
        py::arg("k"), py::arg("n"), py::arg("max_rank") = kDefaultRankCap);
  m.def("check_balanced", &check_balanced);
  m.def("check_connected", &check_connected);
  m.def("eulerian_circuit", &eulerian_circuit);
  m.def("nos_from_x",
        [](int k, int n, rank_t cap) { return nos_from_x(make_params(k, n, cap)); },
        py::arg("k"), py::arg("n"), py::arg("max_rank") = kDefaultRankCap);

  // difference map and lift
  m.def("lempel_d",
        [](const KTuple& t, int k, int beta) { return lempel_d(t, k, beta); },
        py::arg("t"), py::arg("k"), py::arg("beta") = 1);
  m.def("lift_edges", &lift_edges, py::arg("edges"),
        py::arg("max_rank") = kDefaultRankCap);
  m.def("os_from_x",
        [](int k, int n, rank_t cap) { return os_from_x(make_params(k, n, cap)); },
        py::arg("k"), py::arg("n"), py::arg("max_rank") = kDefaultRankCap);

  // certification
  py::enum_<VerifyMode>(m, "VerifyMode")
      .value("window", VerifyMode::window)
      .value("orientable", VerifyMode::orientable)
      .value("negative_orientable", VerifyMode::negative_orientable);
  m.def("windows", &windows, py::arg("s"), py::arg("n"));
  m.def("find_violation",
        [](const Sequence& s, int n, VerifyMode mode) -> py::object {
          const auto v = find_violation(s, n, mode);
          if (!v) return py::none();
          const char* kind = v->kind == Violation::Kind::duplicate ? "duplicate"
                             : v->kind == Violation::Kind::reverse_match
                                 ? "reverse"
                                 : "reverse-negate";
          return py::make_tuple(v->i, v->j, kind);
        });
  m.def("is_n_window_seq", &is_n_window_seq);
  m.def("is_orientable", &is_orientable);
  m.def("is_negative_orientable", &is_negative_orientable);
  m.def("minimal_period", &minimal_period);
  m.def("window_multiset_equals", &window_multiset_equals);

  // text format
  m.def("format_sequence_line", &format_sequence_line);
  m.def("parse_sequence_line",
        [](const std::string& text, int k, int order) {
          return parse_sequence_line(text, k, order);
        });
  m.def("sha256_hex", [](const std::string& bytes) { return sha256_hex(bytes); });
}
