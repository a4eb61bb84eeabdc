#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <map>
#include <string>
#include <vector>

#include "sublat/beta.hpp"
#include "sublat/density.hpp"
#include "sublat/oracle.hpp"
#include "sublat/pgroup.hpp"
#include "sublat/suites.hpp"
#include "sublat/textio.hpp"

namespace py = pybind11;
using namespace sublat;

namespace {

py::int_ to_py_int(const Int& z) {
    return py::reinterpret_steal<py::int_>(PyLong_FromString(z.get_str().c_str(), nullptr, 10));
}

py::object to_fraction(const Rat& q) {
    py::object fraction = py::module_::import("fractions").attr("Fraction");
    return fraction(to_py_int(q.get_num()), to_py_int(q.get_den()));
}

Int int_from(py::handle obj) { return Int(py::cast<std::string>(py::str(obj))); }

Partition partition_from(const std::vector<unsigned>& parts) { return Partition(parts); }

PGroupType type_from(py::handle p, const std::vector<unsigned>& parts) {
    return PGroupType(int_from(p), partition_from(parts));
}

py::dict approx_dict(const ApproxResult& r) {
    py::dict out;
    out["group"] = r.group.to_string();
    out["achieved"] = to_fraction(r.achieved);
    out["error"] = to_fraction(r.error);
    out["primes_used"] = r.primes_used;
    out["largest_prime"] = to_py_int(r.largest_prime);
    return out;
}

}  // namespace

PYBIND11_MODULE(sublat, m) {
    m.doc() = "Exact subgroup-lattice statistics for finite abelian groups";

    m.def("conjugate",
          [](const std::vector<unsigned>& parts) { return conjugate(partition_from(parts)).parts(); },
          py::arg("parts"), "Conjugate partition (Ferrers transpose)");

    m.def("partitions",
          [](unsigned n, py::object bound) {
              std::vector<std::vector<unsigned>> out;
              auto source = bound.is_none()
                                ? partitions_of(n)
                                : partitions_of(n, partition_from(
                                                       py::cast<std::vector<unsigned>>(bound)));
              for (const Partition& p : source) out.push_back(p.parts());
              return out;
          },
          py::arg("n"), py::arg("bound") = py::none(),
          "Partitions of n in decreasing order, optionally bounded componentwise");

    m.def("gauss_binomial",
          [](unsigned n, unsigned k) {
              py::list out;
              IntPolynomial g = gauss_binomial(n, k);
              for (const Int& c : g.coefficients()) out.append(to_py_int(c));
              return out;
          },
          py::arg("n"), py::arg("k"), "Coefficients of the q-binomial [n k]_q, ascending degree");

    m.def("subgroup_counts",
          [](py::object p, const std::vector<unsigned>& parts) {
              py::list out;
              PGroupType t = type_from(p, parts);
              for (unsigned k = 0; k <= t.exponent_sum(); ++k) out.append(to_py_int(s_k(t, k)));
              return out;
          },
          py::arg("p"), py::arg("parts"), "s_0..s_n for the abelian p-group of this type");

    m.def("lattice_size",
          [](py::object p, const std::vector<unsigned>& parts) {
              return to_py_int(lattice_size(type_from(p, parts)));
          },
          py::arg("p"), py::arg("parts"), "Total number of subgroups |L(G)|");

    m.def("cyclic_subgroup_count",
          [](py::object p, const std::vector<unsigned>& parts) {
              return to_py_int(count_cyclic_subgroups(type_from(p, parts)));
          },
          py::arg("p"), py::arg("parts"), "Number of cyclic subgroups |L_1(G)|");

    m.def("beta",
          [](const std::string& spec) { return to_fraction(beta(parse_group_spec(spec))); },
          py::arg("spec"), "beta(G) = |L(G)|/|G| for a spec like '2:[1,3];3:[2]'");

    m.def("alpha",
          [](const std::string& spec) { return to_fraction(alpha(parse_group_spec(spec))); },
          py::arg("spec"), "alpha(G) = |L_1(G)|/|G|");

    m.def("beta_table",
          [](py::object p, unsigned n) {
              py::list out;
              Int prime = int_from(p);
              for (const Partition& d : partitions_of(n)) {
                  PGroupType t(prime, d);
                  py::dict row;
                  row["parts"] = d.parts();
                  row["lattice_size"] = to_py_int(lattice_size(t));
                  row["beta"] = to_fraction(beta_of_type(t));
                  out.append(row);
              }
              return out;
          },
          py::arg("p"), py::arg("n"), "One row per type of order p^n, decreasing partition order");

    m.def("approximate",
          [](const std::string& target, const std::string& eps, unsigned max_primes,
             const std::string& max_prime) {
              ApproxLimits limits;
              limits.max_primes = max_primes;
              limits.max_prime = Int(max_prime);
              return approx_dict(approximate(rat_from_string(target), rat_from_string(eps), limits));
          },
          py::arg("target"), py::arg("eps") = "1/1000", py::arg("max_primes") = 64,
          py::arg("max_prime") = "100000000",
          "Group with beta within eps of target; raises RuntimeError on resource limits");

    m.def("oracle_counts",
          [](const std::vector<unsigned>& cyclic_orders) {
              std::map<unsigned, std::size_t> counts = counts_by_order(ExplicitGroup(cyclic_orders));
              py::dict out;
              for (const auto& [order, count] : counts) out[py::int_(order)] = count;
              return out;
          },
          py::arg("cyclic_orders"),
          "Brute-force subgroup histogram of a direct product of cyclic groups");

    m.def("verify_type",
          [](py::object p, const std::vector<unsigned>& parts) {
              VerificationReport r = verify_theorems(type_from(p, parts));
              py::list checks;
              for (const CheckResult& c : r.checks) {
                  py::dict row;
                  row["name"] = c.name;
                  row["pass"] = c.pass || c.skipped;
                  row["skipped"] = c.skipped;
                  row["detail"] = c.detail;
                  checks.append(row);
              }
              py::dict out;
              out["pass"] = r.all_pass();
              out["checks"] = checks;
              return out;
          },
          py::arg("p"), py::arg("parts"), "Per-type theorem checks (congruences, duality, ...)");
}
