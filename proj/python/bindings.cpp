#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "slicelab/applications.hpp"
#include "slicelab/cli.hpp"
#include "slicelab/deg1.hpp"
#include "slicelab/goodslices.hpp"
#include "slicelab/slices.hpp"
#include "slicelab/walk.hpp"

namespace py = pybind11;
using namespace slicelab;

namespace {

py::object fraction(const Rational& r) {
  static py::object cls = py::module_::import("fractions").attr("Fraction");
  return cls(py::int_(py::str(r.numerator().get_str())), py::int_(py::str(r.denominator().get_str())));
}

py::list fractions(const std::vector<Rational>& rs) {
  py::list out;
  for (const auto& r : rs) out.append(fraction(r));
  return out;
}

bool is_rational(const std::string& group) { return group == "Q" || group == "q"; }

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Exact tools for polynomials on Boolean slices";

  py::register_exception<Error>(m, "Error", PyExc_ValueError);
  // Translators run newest first, so the subclass goes last.
  py::register_exception<GuardError>(m, "GuardError", PyExc_RuntimeError);

  m.def(
      "gamma_map",
      [](const std::string& u, const std::vector<std::pair<int, int>>& edges, const std::string& flips) {
        SlicePoint p = SlicePoint::parse(u);
        return gamma_map(p, Matching::from_edges(p, edges), SlicePoint::parse(flips).bits).str();
      },
      py::arg("u"), py::arg("edges"), py::arg("flips"), "Apply the re-balancing map to a balanced point.");

  m.def(
      "edge_weight",
      [](const std::string& u, const std::string& v) {
        return fraction(edge_weight(SlicePoint::parse(u), SlicePoint::parse(v)));
      },
      py::arg("u"), py::arg("v"), "Transition probability of the matching walk.");

  m.def(
      "eigenvalue", [](int n, int t) { return fraction(eigenvalue_exact(n, t)); }, py::arg("n"), py::arg("t"),
      "Exact eigenvalue of the walk on the eigenspace of index t.");

  m.def(
      "spectrum",
      [](int n) {
        SpectrumReport s = spectrum(n);
        py::list mult;
        for (const auto& x : s.multiplicities) mult.append(py::int_(py::str(x.get_str())));
        py::dict out;
        out["lambda"] = fractions(s.lambdas);
        out["multiplicity"] = mult;
        out["mu"] = fraction(s.mu_exact);
        out["eigenvalues"] = s.eigenvalues;
        out["exact"] = s.eigenvectors_exact && s.trace_identity && s.float_matches;
        return out;
      },
      py::arg("n"), "Exact and float spectrum of the walk matrix.");

  m.def(
      "matching_stats",
      [](int n, int t) {
        MatchingStats s = matching_stats(n, t);
        return py::make_tuple(fraction(s.good), fraction(s.self_good));
      },
      py::arg("n"), py::arg("t"), "Probabilities (t-good, t-self-good) for a uniform matching.");

  m.def(
      "nonvanish_fraction",
      [](const std::string& poly, int n, int k, const std::string& group) {
        if (is_rational(group)) return fraction(nonvanish_fraction(RationalPoly::parse(poly, n), k));
        return fraction(nonvanish_fraction(MultilinearPoly::parse(poly, n, GroupSpec::parse(group)), k));
      },
      py::arg("poly"), py::arg("n"), py::arg("k"), py::arg("group") = "Z2",
      "Fraction of weight-k points where the polynomial is nonzero.");

  m.def(
      "extremal_min_fraction",
      [](int n, int k, int d, const std::string& group, bool homogeneous) {
        ExtremalResult r = extremal_min_fraction(n, k, d, GroupSpec::parse(group),
                                                 homogeneous ? SearchMode::homogeneous : SearchMode::full);
        return py::make_tuple(fraction(r.min), r.witness.str());
      },
      py::arg("n"), py::arg("k"), py::arg("d"), py::arg("group") = "Z2", py::arg("homogeneous") = false,
      "Exhaustive minimum non-vanishing fraction and a minimizer.");

  m.def(
      "suboptimal_bound", [](int n, int k, int d) { return fraction(suboptimal_bound(n, k, d)); }, py::arg("n"),
      py::arg("k"), py::arg("d"), "C(n-2d, k-d) / C(n, k).");

  m.def("is_good_slice", &is_good_slice, py::arg("k"), py::arg("d"), py::arg("p"));
  m.def("find_good_shift", &find_good_shift, py::arg("k"), py::arg("d"), py::arg("p"));
  m.def("lucas_binom_mod_p", &lucas_binom_mod_p, py::arg("a"), py::arg("b"), py::arg("p"));

  m.def(
      "deg1_scan",
      [](int n, int k, const std::string& group) {
        Deg1Scan s = deg1_extremal_scan(n, k, GroupSpec::parse(group), ScanMode::report);
        py::dict out;
        out["min"] = fraction(s.min);
        out["bound"] = fraction(s.bound);
        out["witness"] = s.witness.str();
        out["holds"] = s.holds;
        return out;
      },
      py::arg("n"), py::arg("k"), py::arg("group") = "Z2", "Minimum over linear polynomials on slice k.");

  m.def(
      "influence",
      [](const std::string& poly, int n, int i, int j, int k, const std::string& group) {
        if (is_rational(group)) return fraction(influence(RationalPoly::parse(poly, n), i, j, k));
        return fraction(influence(MultilinearPoly::parse(poly, n, GroupSpec::parse(group)), i, j, k));
      },
      py::arg("poly"), py::arg("n"), py::arg("i"), py::arg("j"), py::arg("k"), py::arg("group") = "Q",
      "Quarter of the probability that exchanging x_i and x_j changes the value.");

  m.def(
      "junta_support",
      [](const std::string& poly, int n, int k, const std::string& group) {
        if (is_rational(group)) return junta_support(RationalPoly::parse(poly, n), k);
        return junta_support(MultilinearPoly::parse(poly, n, GroupSpec::parse(group)), k);
      },
      py::arg("poly"), py::arg("n"), py::arg("k"), py::arg("group") = "Q");

  m.def(
      "cli",
      [](const std::vector<std::string>& args) {
        std::ostringstream out, err;
        int code = cli::run(args, out, err);
        return py::make_tuple(code, out.str(), err.str());
      },
      py::arg("args"), "Run a command-line subcommand; returns (exit code, stdout, stderr).");
}
