#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <string>
#include <vector>

#include "maxprim/counting.hpp"
#include "maxprim/enumeration.hpp"
#include "maxprim/semigroup.hpp"
#include "maxprim/wilf.hpp"

namespace py = pybind11;
using namespace maxprim;

namespace {

std::vector<Value> to_list(const GeneratorSet& g) { return {g.begin(), g.end()}; }

std::vector<std::vector<Value>> to_lists(const std::vector<GeneratorSet>& gs) {
  std::vector<std::vector<Value>> out;
  out.reserve(gs.size());
  for (const auto& g : gs) out.push_back(to_list(g));
  return out;
}

TreeOptions tree_options(Value len, unsigned jobs) {
  TreeOptions opt;
  opt.len = len;
  opt.jobs = jobs;
  return opt;
}

CountMode parse_mode(const std::string& mode) {
  if (mode == "full") return CountMode::kFull;
  if (mode == "formula-assisted") return CountMode::kFormulaAssisted;
  throw UsageError("mode must be 'full' or 'formula-assisted'");
}

py::dict record_dict(const CountRecord& r) {
  py::dict d;
  d["n"] = r.n;
  d["A"] = r.maxprim;
  d["N"] = r.frobenius ? py::cast(*r.frobenius) : py::none();
  if (r.by_depth_known) {
    py::dict depths;
    for (const auto& [k, c] : r.by_depth) {
      py::dict entry;
      entry["A"] = c.maxprim;
      entry["N"] = c.frobenius ? py::cast(*c.frobenius) : py::none();
      depths[py::int_(k)] = entry;
    }
    d["by_depth"] = depths;
  } else {
    d["by_depth"] = py::none();
  }
  return d;
}

}  // namespace

PYBIND11_MODULE(_maxprim, m) {
  m.doc() = "Numerical semigroups indexed by their largest minimal generator.";

  auto usage = py::register_exception<UsageError>(m, "UsageError", PyExc_ValueError);
  py::register_exception<NotASemigroupError>(m, "NotASemigroupError", usage.ptr());

  py::class_<SemigroupInvariants>(m, "Invariants")
      .def_readonly("multiplicity", &SemigroupInvariants::multiplicity)
      .def_readonly("max_primitive", &SemigroupInvariants::max_primitive)
      .def_readonly("embedding_dimension", &SemigroupInvariants::embedding_dimension)
      .def_readonly("frobenius", &SemigroupInvariants::frobenius)
      .def_readonly("conductor", &SemigroupInvariants::conductor)
      .def_readonly("genus", &SemigroupInvariants::genus)
      .def_readonly("left_count", &SemigroupInvariants::left_count)
      .def_readonly("depth", &SemigroupInvariants::depth)
      .def_readonly("primitive_depth", &SemigroupInvariants::primitive_depth)
      .def_readonly("wilf_holds", &SemigroupInvariants::wilf_holds)
      .def("__eq__", [](const SemigroupInvariants& a, const SemigroupInvariants& b) { return a == b; })
      .def("__repr__", [](const SemigroupInvariants& i) {
        return "Invariants(m=" + std::to_string(i.multiplicity) + ", M=" + std::to_string(i.max_primitive) +
               ", e=" + std::to_string(i.embedding_dimension) + ", F=" + std::to_string(i.frobenius) +
               ", g=" + std::to_string(i.genus) + ")";
      });

  py::class_<NumericalSemigroup>(m, "NumericalSemigroup")
      .def(py::init([](const std::vector<Value>& gens) { return NumericalSemigroup(GeneratorSet(gens)); }),
           py::arg("generators"))
      .def_property_readonly("generators",
                             [](const NumericalSemigroup& s) { return to_list(s.minimal_generators()); })
      .def("invariants", &NumericalSemigroup::invariants)
      .def("__contains__", &NumericalSemigroup::contains)
      .def("__eq__", [](const NumericalSemigroup& a, const NumericalSemigroup& b) { return a == b; })
      .def("__hash__", [](const NumericalSemigroup& s) { return py::hash(py::tuple(py::cast(to_list(s.minimal_generators())))); })
      .def("__repr__", [](const NumericalSemigroup& s) { return s.minimal_generators().to_string(); });

  m.def("gcd", [](const std::vector<Value>& v) { return gcd_of_set(v); }, py::arg("values"));
  m.def("minimal_generators", [](const std::vector<Value>& v) { return to_list(minimal_generators(GeneratorSet(v))); },
        py::arg("generators"));
  m.def("is_minimal_generating_set",
        [](const std::vector<Value>& v) { return is_minimal_generating_set(to_list(GeneratorSet(v))); },
        py::arg("generators"));
  m.def("apery_set", [](const std::vector<Value>& v) { return apery_set(GeneratorSet(v)).values; },
        py::arg("generators"));
  m.def("invariants", [](const std::vector<Value>& v) { return NumericalSemigroup(GeneratorSet(v)).invariants(); },
        py::arg("generators"));
  m.def("wilf_holds", [](const std::vector<Value>& v) { return wilf_holds(NumericalSemigroup(GeneratorSet(v))); },
        py::arg("generators"));

  m.def("default_len", &default_len, py::arg("max_primitive"), py::arg("multiplicity"));
  m.def("possible_large_primitives",
        [](const std::vector<Value>& p) { return possible_large_primitives(GeneratorSet(p)); },
        py::arg("primitives"));
  m.def("semigroups_with_given_primitives",
        [](const std::vector<Value>& p) { return to_lists(semigroups_with_given_primitives(GeneratorSet(p)).semigroups); },
        py::arg("primitives"));
  m.def("enumerate_brute_force",
        [](Value top, Value mult) { return to_lists(enumerate_brute_force(top, mult).semigroups); },
        py::arg("max_primitive"), py::arg("multiplicity"), py::call_guard<py::gil_scoped_release>());
  m.def("enumerate_naive", [](Value top, Value mult) { return to_lists(enumerate_naive(top, mult).semigroups); },
        py::arg("max_primitive"), py::arg("multiplicity"), py::call_guard<py::gil_scoped_release>());
  m.def("enumerate_tree",
        [](Value top, Value mult, Value len, unsigned jobs) {
          return to_lists(enumerate_tree(top, mult, tree_options(len, jobs)).semigroups);
        },
        py::arg("max_primitive"), py::arg("multiplicity"), py::arg("len") = 0, py::arg("jobs") = 1,
        py::call_guard<py::gil_scoped_release>());
  m.def("enumerate_all",
        [](Value top, Value len, unsigned jobs) { return to_lists(enumerate_all(top, tree_options(len, jobs)).semigroups); },
        py::arg("max_primitive"), py::arg("len") = 0, py::arg("jobs") = 1, py::call_guard<py::gil_scoped_release>());

  m.def("moebius", &moebius, py::arg("n"));
  m.def("divisors", &divisors, py::arg("n"));
  m.def("depth2_count", &depth2_count, py::arg("n"));
  m.def("frobenius_count_from_maxprim", &frobenius_count_from_maxprim, py::arg("n"), py::arg("maxprim_counts"));
  m.def("count_by_max_primitive",
        [](Value n, const std::string& mode, Value len, unsigned jobs) {
          const auto parsed = parse_mode(mode);
          CountRecord r;
          {
            py::gil_scoped_release release;
            r = count_by_max_primitive(n, parsed, tree_options(len, jobs));
          }
          return record_dict(r);
        },
        py::arg("n"), py::arg("mode") = "formula-assisted", py::arg("len") = 0, py::arg("jobs") = 1);
  m.def("count_range",
        [](Value from, Value to, const std::string& mode, Value len, unsigned jobs, std::map<Value, Count> seeded) {
          CountOptions opt;
          opt.mode = parse_mode(mode);
          opt.len = len;
          opt.jobs = jobs;
          opt.seeded = std::move(seeded);
          std::vector<CountRecord> rows;
          {
            py::gil_scoped_release release;
            rows = count_range(from, to, opt);
          }
          py::list out;
          for (const auto& r : rows) out.append(record_dict(r));
          return out;
        },
        py::arg("from_n"), py::arg("to_n"), py::arg("mode") = "formula-assisted", py::arg("len") = 0,
        py::arg("jobs") = 1, py::arg("seeded") = std::map<Value, Count>{});
  m.def("frobenius_semigroups_oracle",
        [](Value n, std::optional<Value> depth) {
          std::vector<std::vector<Value>> out;
          for (const auto& s : frobenius_semigroups_oracle(n, depth)) out.push_back(to_list(s.minimal_generators()));
          return out;
        },
        py::arg("n"), py::arg("depth") = py::none());
  m.def("psi_map",
        [](const std::vector<Value>& v) { return to_list(psi_map(NumericalSemigroup(GeneratorSet(v))).minimal_generators()); },
        py::arg("generators"));

  m.def("classify_known_cases",
        [](const std::vector<Value>& v) {
          const auto k = classify_known_cases(NumericalSemigroup(GeneratorSet(v)));
          py::dict d;
          d["e_at_most_3"] = k.e_at_most_3;
          d["c_at_most_3m"] = k.c_at_most_3m;
          d["e_at_least_m_over_3"] = k.e_at_least_m_over_3;
          d["left_at_most_12"] = k.left_at_most_12;
          d["m_at_most_19"] = k.m_at_most_19;
          d["many_low_primitives"] = k.many_low_primitives;
          d["genus_at_most_100"] = k.genus_at_most_100;
          d["arithmetic_progression"] = k.arithmetic_progression;
          return d;
        },
        py::arg("generators"));
  m.def("verify_wilf",
        [](Value top, std::optional<Value> mult, bool full, std::size_t limit, unsigned jobs) {
          WilfOptions opt;
          opt.multiplicity = mult;
          opt.full_check = full;
          opt.novel_sample_limit = limit;
          opt.jobs = jobs;
          WilfReport r;
          {
            py::gil_scoped_release release;
            r = verify_wilf(top, opt);
          }
          py::dict d;
          d["max_primitive"] = r.max_primitive;
          d["total_checked"] = r.total_checked;
          d["violations"] = to_lists(r.violations);
          d["novel_count"] = r.novel_count;
          d["sample_novel"] = to_lists(r.sample_novel);
          return d;
        },
        py::arg("max_primitive"), py::arg("multiplicity") = py::none(), py::arg("full_check") = false,
        py::arg("novel_sample_limit") = 10, py::arg("jobs") = 1);
}
