// Python bindings for the main operations: factorization counts, closed
// formulas, Hurwitz orbits, intervals, and the acceptance runner.  Big
// integers cross the boundary as decimal strings.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "singerfact/absorder.hpp"
#include "singerfact/charvals.hpp"
#include "singerfact/factor_count.hpp"
#include "singerfact/glnq.hpp"
#include "singerfact/hurwitz.hpp"
#include "singerfact/qformula.hpp"
#include "singerfact/repro.hpp"

namespace py = pybind11;
using namespace pybind11::literals;
using namespace singerfact;
using glnq::MatrixGF;

namespace {

MatrixGF target_matrix(int n, uint64_t q, const std::string& target,
                       const std::vector<uint64_t>& charpoly) {
  const gf::FieldTable& f = gf::field_of_size(q);
  if (target == "singer") return glnq::singer_cycle(f, n);
  if (target == "charpoly") {
    std::vector<gf::FqElem> cs;
    for (uint64_t r : charpoly) cs.push_back(f.from_rep(r));
    return MatrixGF::companion(f, cs);
  }
  throw std::invalid_argument("target must be 'singer' or 'charpoly'");
}

}  // namespace

PYBIND11_MODULE(_singerfact, m) {
  m.doc() = "exact reflection-factorization counts for Singer cycles in "
            "GL_n(F_q)";

  m.def("field_info",
        [](uint32_t p, uint32_t k) {
          const auto& f = gf::field(p, k);
          std::vector<uint32_t> poly(f.prim_poly().begin(),
                                     f.prim_poly().end() - 1);
          return py::dict("p"_a = f.p(), "k"_a = f.k(), "q"_a = f.q(),
                          "prim_poly"_a = poly);
        },
        py::arg("p"), py::arg("k"));

  m.def("singer_charpoly",
        [](int n, uint64_t q) {
          const auto& f = gf::field_of_size(q);
          return glnq::charpoly(glnq::singer_cycle(f, n)).rep_coeffs();
        },
        py::arg("n"), py::arg("q"));

  m.def("count_factorizations",
        [](int n, uint64_t q, int ell, const std::string& target,
           const std::vector<uint64_t>& charpoly) {
          MatrixGF t = target_matrix(n, q, target, charpoly);
          return factor_count::count_factorizations(
                     t, factor_count::StepPlan::all_reflections(ell))
              .get_str();
        },
        py::arg("n"), py::arg("q"), py::arg("ell"),
        py::arg("target") = "singer",
        py::arg("charpoly") = std::vector<uint64_t>{});

  m.def("count_fixed_dets",
        [](int n, uint64_t q, const std::vector<uint64_t>& dets) {
          const auto& f = gf::field_of_size(q);
          MatrixGF c = glnq::singer_cycle(f, n);
          std::vector<gf::FqElem> alphas;
          for (uint64_t r : dets) alphas.push_back(f.from_rep(r));
          auto res = factor_count::count_fixed_dets(c, alphas);
          return py::dict("count"_a = res.count.get_str(),
                          "det_obstructed"_a = res.det_obstructed);
        },
        py::arg("n"), py::arg("q"), py::arg("dets"));

  m.def("tq",
        [](int n, int ell) {
          return qformula::tq_all(n, ell).coeff_strings();
        },
        py::arg("n"), py::arg("ell"),
        "coefficients of t_q(n, ell) in q, lowest degree first (all three "
        "routes checked)");

  m.def("tq_at",
        [](int n, int ell, uint64_t q) {
          return qformula::tq(n, ell, qformula::TqRoute::binom)
              .eval(BigInt(static_cast<long>(q)))
              .get_str();
        },
        py::arg("n"), py::arg("ell"), py::arg("q"));

  m.def("tq_nlm",
        [](int n, int ell, int mm) {
          return qformula::tq_nlm_all(n, ell, mm).coeff_strings();
        },
        py::arg("n"), py::arg("ell"), py::arg("m"));

  m.def("classical_t",
        [](int n, int ell) { return qformula::classical_t(n, ell).get_str(); },
        py::arg("n"), py::arg("ell"));

  m.def("cyclotomic_orbit_sum",
        [](uint64_t q, int s, uint64_t d) {
          return static_cast<long>(
              qformula::cyclotomic_orbit_sum(q, s, d).get_si());
        },
        py::arg("q"), py::arg("s"), py::arg("d"));

  m.def("hurwitz_orbits",
        [](int n, uint64_t q, int ell, const std::string& target,
           const std::vector<uint64_t>& charpoly, uint64_t budget) {
          const auto& f = gf::field_of_size(q);
          MatrixGF t = target_matrix(n, q, target, charpoly);
          auto tuples = hurwitz::enumerate_factorizations(t, ell, budget);
          auto dec = hurwitz::orbit_decompose(f, n, tuples);
          std::sort(dec.sizes.rbegin(), dec.sizes.rend());
          return py::dict("tuple_count"_a = tuples.size(),
                          "orbit_sizes"_a = dec.sizes);
        },
        py::arg("n"), py::arg("q"), py::arg("ell"),
        py::arg("target") = "singer",
        py::arg("charpoly") = std::vector<uint64_t>{},
        py::arg("budget") = 5000000);

  m.def("interval_rank_sizes",
        [](int n, uint64_t q) {
          const auto& f = gf::field_of_size(q);
          return absorder::interval(glnq::singer_cycle(f, n)).rank_sizes();
        },
        py::arg("n"), py::arg("q"));

  m.def("jm_commutation_ok",
        [](int n, uint64_t q) {
          const auto& f = gf::field_of_size(q);
          return factor_count::jm_commutation(f, n).pass();
        },
        py::arg("n"), py::arg("q"));

  m.def("survey_regular_elliptic",
        [](int n, uint64_t q, int ell) {
          const auto& f = gf::field_of_size(q);
          py::list rows;
          for (const auto& row :
               factor_count::survey_regular_elliptic(f, n, ell))
            rows.append(py::dict("charpoly"_a = row.charpoly,
                                 "count"_a = row.count.get_str()));
          return rows;
        },
        py::arg("n"), py::arg("q"), py::arg("ell"));

  m.def("run_acceptance",
        [](bool heavy) {
          py::list out;
          for (const auto& r : repro::run_acceptance(heavy))
            out.append(py::dict("id"_a = r.id, "name"_a = r.name,
                                "pass"_a = r.pass, "details"_a = r.details));
          return out;
        },
        py::arg("heavy") = false);
}
