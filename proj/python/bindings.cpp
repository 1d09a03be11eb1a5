#include <sstream>

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "enumlab/cli.hpp"
#include "enumlab/enumlab.hpp"
#include "enumlab/report_io.hpp"

namespace py = pybind11;
using namespace enumlab;

// Python int <-> Natural through the decimal string.
namespace pybind11::detail {
template <>
struct type_caster<Natural> {
  PYBIND11_TYPE_CASTER(Natural, const_name("int"));

  bool load(handle src, bool) {
    if (!src || !PyLong_Check(src.ptr())) return false;
    auto text = py::str(src).cast<std::string>();
    if (!text.empty() && text[0] == '-') throw py::value_error("expected a natural number, got " + text);
    value = parse_natural(text);
    return true;
  }

  static handle cast(const Natural& n, return_value_policy, handle) {
    return PyLong_FromString(n.str().c_str(), nullptr, 10);
  }
};
}  // namespace pybind11::detail

namespace {

py::object to_py(const io::json& j) { return py::module_::import("json").attr("loads")(j.dump()); }

io::json from_py(const py::object& o) {
  return io::json::parse(py::module_::import("json").attr("dumps")(o).cast<std::string>());
}

Mode mode_of(bool nondet) { return nondet ? Mode::Nondeterministic : Mode::Deterministic; }

TimeProfile profile_of(std::vector<std::uint64_t> steps) { return TimeProfile{std::move(steps), Mode::Deterministic}; }

ReductionOptions options(std::uint64_t fuel, std::uint64_t branch_cap,
                         std::optional<std::tuple<unsigned, double, std::size_t>> bound) {
  ReductionOptions o;
  o.fuel = fuel;
  o.branch_cap = branch_cap;
  if (bound) o.bound = BoundSpec{std::get<0>(*bound), std::get<1>(*bound), std::get<2>(*bound)};
  return o;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Step-counted register machine, listings, co-order and reduction checks.";

  py::register_exception<Error>(m, "EnumlabError", PyExc_RuntimeError);

  py::class_<Program, std::shared_ptr<Program>>(m, "Program")
      .def_property_readonly("name", &Program::name)
      .def_property_readonly("deterministic", &Program::deterministic)
      .def_property_readonly("register_count", &Program::register_count)
      .def_property_readonly("labels", &Program::labels)
      .def("__len__", &Program::size)
      .def("to_text", &Program::to_text)
      .def("__repr__", [](const Program& p) {
        return "<Program " + p.name() + ", " + std::to_string(p.size()) + " instructions>";
      });

  m.def("assemble", [](const std::string& text, const std::string& name) {
    return std::make_shared<Program>(assemble(text, name));
  }, py::arg("text"), py::arg("name") = "program");

  m.def("run_det", [](const Program& p, const Natural& x, std::uint64_t fuel) {
    return to_py(io::to_json(run_det(p, x, fuel)));
  }, py::arg("program"), py::arg("input"), py::arg("fuel") = kDefaultFuel);

  m.def("run_nondet", [](const Program& p, const Natural& x, std::uint64_t fuel, std::uint64_t cap) {
    return to_py(io::to_json(run_nondet(p, x, fuel, cap)));
  }, py::arg("program"), py::arg("input"), py::arg("fuel") = kDefaultFuel,
     py::arg("branch_cap") = kDefaultBranchCap);

  py::class_<Listing>(m, "Listing")
      .def(py::init([](std::string name, const Program& p, bool nondet, std::string set) {
             return make_listing(std::move(name), std::make_shared<const Program>(p), mode_of(nondet),
                                 std::move(set));
           }),
           py::arg("name"), py::arg("program"), py::arg("nondet") = false, py::arg("set") = "")
      .def_readonly("name", &Listing::name)
      .def_readonly("set", &Listing::set)
      .def_readwrite("fuel", &Listing::fuel)
      .def_readwrite("branch_cap", &Listing::branch_cap)
      .def_property_readonly("nondet", [](const Listing& l) { return l.mode == Mode::Nondeterministic; })
      .def("sample", [](const Listing& l, std::size_t k) {
        auto s = sample(l, k);
        return py::make_tuple(py::cast(s.prefix.values), py::cast(s.profile.steps));
      }, py::arg("k"))
      .def("__repr__", [](const Listing& l) { return "<Listing " + l.name + " of " + l.set + ">"; });

  m.def("corpus_names", &corpus::names);
  m.def("corpus_source", [](const std::string& name) { return corpus::get(name).source; });
  m.def("corpus_kind", [](const std::string& name) { return std::string(to_string(corpus::get(name).kind)); });
  m.def("corpus_program", [](const std::string& name) {
    return std::const_pointer_cast<Program>(corpus::program(name));
  });
  m.def("corpus_listing", [](const std::string& name) { return corpus::listing(name); });

  m.def("coorder", [](std::vector<Natural> a, std::vector<Natural> b) {
    return to_py(io::to_json(coorder_prefix(Prefix{std::move(a)}, Prefix{std::move(b)})));
  }, py::arg("a"), py::arg("b"));

  m.def("increasing_listing", [](const Program& decider, std::size_t k, std::uint64_t fuel, std::uint64_t cap) {
    return increasing_listing(decider, k, fuel, cap).values;
  }, py::arg("decider"), py::arg("k"), py::arg("fuel") = kDefaultFuel, py::arg("search_cap") = 1'000'000);

  m.def("strictly_more_rapid", [](std::vector<std::uint64_t> th, std::vector<std::uint64_t> tg) {
    return to_py(io::to_json(strictly_more_rapid(profile_of(std::move(th)), profile_of(std::move(tg)))));
  });
  m.def("more_rapid", [](std::vector<std::uint64_t> th, std::vector<std::uint64_t> tg) {
    return to_py(io::to_json(more_rapid(profile_of(std::move(th)), profile_of(std::move(tg)))));
  });

  m.def("fit", [](std::vector<std::uint64_t> steps, double lower_fraction) {
    return to_py(io::to_json(fit_poly_exponent(profile_of(std::move(steps)), lower_fraction)));
  }, py::arg("steps"), py::arg("lower_fraction") = 0.5);
  m.def("check_bound", [](std::vector<std::uint64_t> steps, unsigned k, double c, std::size_t n0) {
    return to_py(io::to_json(check_bound(profile_of(std::move(steps)), k, c, n0)));
  }, py::arg("steps"), py::arg("k"), py::arg("c"), py::arg("n0") = 0);

  m.def("certify", [](const std::string& kind, const std::string& subject_set, std::vector<Natural> subject,
                      const Listing& witness, unsigned k, double c, std::size_t n0) {
    Subject s{subject_set, Prefix{std::move(subject)}};
    const auto horizon = s.prefix.size();
    if (kind == "p") return to_py(io::to_json(certify_p_coorder(s, witness, k, c, n0, horizon)));
    if (kind == "np") return to_py(io::to_json(certify_np_coorder(s, witness, k, c, n0, horizon)));
    throw py::value_error("kind must be 'p' or 'np'");
  }, py::arg("kind"), py::arg("subject_set"), py::arg("subject"), py::arg("witness"), py::arg("k"),
     py::arg("c"), py::arg("n0") = 0);
  m.def("lift_certificate", [](const py::object& cert, const Listing& witness) {
    return to_py(io::to_json(lift_certificate(io::certificate_from_json(from_py(cert)), witness)));
  });
  m.def("verify_certificate", [](const py::object& cert, const Listing& witness) {
    auto v = verify_certificate(io::certificate_from_json(from_py(cert)), witness);
    return to_py(io::json{{"reproduced", v.reproduced}, {"differences", v.differences}, {"valid", v.valid}});
  });

  m.def("verify_reduction", [](const Program& f, const Program& a, const Program& b, std::uint64_t lo,
                               std::uint64_t hi, bool nondet, std::uint64_t fuel, std::uint64_t cap,
                               std::optional<std::tuple<unsigned, double, std::size_t>> bound) {
    return to_py(io::to_json(verify_reduction(f, a, b, {lo, hi}, mode_of(nondet), options(fuel, cap, bound))));
  }, py::arg("f"), py::arg("a_decider"), py::arg("b_decider"), py::arg("lo"), py::arg("hi"),
     py::arg("nondet") = false, py::arg("fuel") = kDefaultFuel, py::arg("branch_cap") = kDefaultBranchCap,
     py::arg("bound") = py::none());

  m.def("equivalence", [](const std::string& kind, const Program& f_ab, const Program& f_ba, const Program& a,
                          const Program& b, std::uint64_t lo, std::uint64_t hi,
                          std::optional<std::pair<std::vector<Natural>, std::vector<Natural>>> prefixes,
                          std::uint64_t fuel, std::uint64_t cap,
                          std::optional<std::tuple<unsigned, double, std::size_t>> bound) {
    EquivalenceKind k;
    if (kind == "np") k = EquivalenceKind::NpEquiv;
    else if (kind == "pu") k = EquivalenceKind::Pu;
    else if (kind == "npu") k = EquivalenceKind::Npu;
    else throw py::value_error("kind must be 'np', 'pu' or 'npu'");
    std::optional<std::pair<Prefix, Prefix>> p;
    if (prefixes) p.emplace(Prefix{prefixes->first}, Prefix{prefixes->second});
    return to_py(io::to_json(equivalence(f_ab, f_ba, a, b, {lo, hi}, k, p, options(fuel, cap, bound))));
  }, py::arg("kind"), py::arg("f_ab"), py::arg("f_ba"), py::arg("a_decider"), py::arg("b_decider"),
     py::arg("lo"), py::arg("hi"), py::arg("prefixes") = py::none(), py::arg("fuel") = kDefaultFuel,
     py::arg("branch_cap") = kDefaultBranchCap, py::arg("bound") = py::none());

  m.def("turing_consistency", [](const Program& f, const Program& a, const Program& b, std::uint64_t lo,
                                 std::uint64_t hi, bool nondet) {
    return to_py(io::to_json(turing_consistency(f, a, b, {lo, hi}, mode_of(nondet))));
  }, py::arg("f"), py::arg("a_decider"), py::arg("b_decider"), py::arg("lo"), py::arg("hi"),
     py::arg("nondet") = false);

  m.def("sat_encode", [](unsigned num_vars, std::vector<std::vector<int>> clauses) {
    return sat_encode(Cnf{num_vars, std::move(clauses)});
  }, py::arg("num_vars"), py::arg("clauses"));
  m.def("sat_decode", [](const Natural& code) {
    auto f = sat_decode(code);
    return py::make_tuple(f.num_vars, f.clauses);
  });
  m.def("sat_brute_force", [](const Natural& code) { return sat_brute_force(code); });
  m.def("sat_guess_program", [](unsigned num_vars, std::vector<std::vector<int>> clauses) {
    return std::make_shared<Program>(sat_guess_program(Cnf{num_vars, std::move(clauses)}));
  });

  m.def("cli", [](const std::vector<std::string>& args) {
    std::ostringstream out, err;
    const int code = cli::dispatch(args, out, err);
    return py::make_tuple(code, out.str(), err.str());
  }, py::arg("args"), "Runs one enumlab command line; returns (exit code, stdout, stderr).");

  m.attr("DEFAULT_FUEL") = kDefaultFuel;
  m.attr("DEFAULT_BRANCH_CAP") = kDefaultBranchCap;
}
