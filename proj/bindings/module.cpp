// Python bindings: thin wrappers around the C++ library. Decompositions come
// back as lists of (index, multiplicity) pairs, characters as weight->count
// dicts, reports as JSON strings.

#include <pybind11/complex.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <complex>
#include <stdexcept>
#include <vector>

#include "extsq/chars.hpp"
#include "extsq/decomp.hpp"
#include "extsq/lfactor.hpp"
#include "extsq/series.hpp"
#include "extsq/verify.hpp"

namespace py = pybind11;
using namespace extsq;
using cplx = std::complex<double>;

namespace {

py::list a3_terms(const RepRingElement& e) {
  py::list out;
  for (const auto& [w, c] : e.terms()) {
    const auto f = w.coords();
    out.append(py::make_tuple(py::make_tuple(f[0], f[1], f[2]), to_ll(c)));
  }
  return out;
}

py::list c2_terms(const RepRingElement& e) {
  py::list out;
  for (const auto& [w, c] : e.terms()) {
    const auto [m, n] = w.c2_conv_index();
    out.append(py::make_tuple(py::make_tuple(m, n), to_ll(c)));
  }
  return out;
}

CSCase make_case(const std::string& kind, const std::vector<cplx>& satake) {
  if (kind == "split") {
    if (satake.size() != 4)
      throw std::invalid_argument("split case needs 4 eigenvalues");
    return CSCase::split_numeric(
        SatakeA3({satake[0], satake[1], satake[2], satake[3]}));
  }
  if (kind == "inert") {
    if (satake.size() != 2)
      throw std::invalid_argument("inert case needs 2 eigenvalues");
    return CSCase::inert_numeric(SatakeC2(satake[0], satake[1]));
  }
  throw std::invalid_argument("kind must be 'split' or 'inert'");
}

std::string unipoly_str(const UniPoly& p) {
  return p.str(
      [](const QinvPoly& c) {
        return c.str([](const Rat& r) { return r.str(); }, "q^-1");
      },
      "u");
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() =
      "Character-theoretic verification engine for a rank-3/rank-2 pair of "
      "local integral identities";
  m.attr("__version__") = kVersion;

  // dimensions ---------------------------------------------------------
  m.def(
      "dim_a3",
      [](int a, int b, int c) {
        return to_ll(weyl_dimension(DominantWeight::a3(a, b, c)));
      },
      py::arg("a"), py::arg("b"), py::arg("c"),
      "Dimension of the rank-3 irreducible with the given fundamental "
      "coordinates.");
  m.def(
      "dim_c2",
      [](int m, int n) {
        return to_ll(weyl_dimension(DominantWeight::c2_conv(m, n)));
      },
      py::arg("m"), py::arg("n"),
      "Dimension of the rank-2 irreducible W(m, n) in the conventional "
      "index.");

  // decompositions -----------------------------------------------------
  m.def(
      "tensor_split",
      [](int n, int m) { return a3_terms(tensor_formula_split(n, m)); },
      py::arg("n"), py::arg("m"),
      "Irreducible decomposition of V(0,n,0) (x) V(0,m,0): list of "
      "((a,b,c), multiplicity).");
  m.def(
      "tensor_inert",
      [](int n, int m) { return c2_terms(tensor_formula_inert(n, m)); },
      py::arg("n"), py::arg("m"),
      "Irreducible decomposition of W(0,n) (x) W(0,m): list of ((m,n), "
      "multiplicity).");
  m.def(
      "lr_tensor",
      [](std::array<int, 3> x, std::array<int, 3> y) {
        return a3_terms(lr_tensor(DominantWeight::a3(x[0], x[1], x[2]),
                                  DominantWeight::a3(y[0], y[1], y[2])));
      },
      py::arg("x"), py::arg("y"),
      "Tableau-counted tensor decomposition of two rank-3 irreducibles.");
  m.def(
      "sym_wedge2", [](int k) { return a3_terms(sym_wedge2_split(k)); },
      py::arg("k"),
      "Irreducible decomposition of Sym^k of the 6-dimensional "
      "irreducible.");
  m.def(
      "branch",
      [](int u, int v, int w) { return c2_terms(branch_a3_to_c2(u, v, w)); },
      py::arg("u"), py::arg("v"), py::arg("w"),
      "Restriction of V(u,v,w) to the rank-2 subgroup: list of ((m,n), "
      "multiplicity).");

  // characters ---------------------------------------------------------
  m.def(
      "character_a3",
      [](int a, int b, int c) {
        py::dict out;
        const TorusPoly chi = character_freudenthal(DominantWeight::a3(a, b, c));
        for (const auto& [w, k] : chi.terms())
          out[py::make_tuple(w[0], w[1], w[2], w[3])] = to_ll(k);
        return out;
      },
      py::arg("a"), py::arg("b"), py::arg("c"),
      "Weight multiplicities of the rank-3 irreducible, keyed by "
      "normalized torus exponent.");
  m.def(
      "character_c2",
      [](int m, int n) {
        py::dict out;
        const TorusPoly chi =
            character_freudenthal(DominantWeight::c2_conv(m, n));
        for (const auto& [w, k] : chi.terms())
          out[py::make_tuple(w[0], w[1])] = to_ll(k);
        return out;
      },
      py::arg("m"), py::arg("n"),
      "Weight multiplicities of W(m, n), keyed by torus exponent.");

  // local factors ------------------------------------------------------
  m.def(
      "factor_coeffs",
      [](const std::string& which, int sign) {
        const ExactFactor f = [&] {
          if (which == "wedge2-split") return wedge2_factor_split_exact();
          if (which == "wedge2-restricted") return wedge2_restricted_factor_exact();
          if (which == "spin") return spin_factor_exact();
          if (which == "std-twisted") return std_twisted_factor_exact(sign);
          if (which == "wedge2-inert-spin")
            return wedge2_factor_inert_via_spin_exact();
          if (which == "wedge2-inert-std")
            return wedge2_factor_inert_via_std_exact();
          throw std::invalid_argument("unknown factor case: " + which);
        }();
        py::list out;
        for (int i = 0; i <= f.degree(); ++i) out.append(f.coeff(i).str());
        return out;
      },
      py::arg("which"), py::arg("sign") = -1,
      "Exact inverse-polynomial coefficients of one local factor, as "
      "strings per power of T.");
  m.def(
      "factor_coeffs_numeric",
      [](const std::string& which, const std::vector<cplx>& satake, int sign) {
        if (which == "wedge2-split") {
          if (satake.size() != 4)
            throw std::invalid_argument("need 4 eigenvalues");
          const std::array<cplx, 4> chi{satake[0], satake[1], satake[2],
                                        satake[3]};
          const auto e = wedge2_eigenvalues(chi);
          return euler_factor_numeric(std::span<const cplx>(e.data(), 6));
        }
        if (satake.size() != 2)
          throw std::invalid_argument("need 2 eigenvalues");
        const cplx a = satake[0], b = satake[1];
        if (which == "spin") {
          const auto e = spin_eigenvalues(a, b);
          return euler_factor_numeric(std::span<const cplx>(e.data(), 4));
        }
        if (which == "std-twisted") {
          auto e = std5_eigenvalues(a, b);
          for (auto& x : e) x *= static_cast<double>(sign);
          return euler_factor_numeric(std::span<const cplx>(e.data(), 5));
        }
        if (which == "wedge2-inert-spin")
          return wedge2_factor_inert_via_spin_numeric(a, b);
        if (which == "wedge2-inert-std")
          return wedge2_factor_inert_via_std_numeric(a, b);
        throw std::invalid_argument("unknown factor case: " + which);
      },
      py::arg("which"), py::arg("satake"), py::arg("sign") = -1,
      "Numeric inverse-polynomial coefficients at a concrete class.");

  // unipotent identity ---------------------------------------------------
  m.def(
      "unipotent",
      [](int n) {
        const UniPoly a = unipotent_inner_sum(n);
        const UniPoly b = unipotent_closed_form(n);
        return py::make_tuple(a == b, unipoly_str(a), unipoly_str(b));
      },
      py::arg("n"),
      "(equal?, inner sum, closed form) for the degree-n unipotent "
      "identity, both sides printed as polynomials in u over q^-1.");

  // sampling and numerics ----------------------------------------------
  m.def(
      "sample_split",
      [](std::uint64_t seed, int count) {
        py::list out;
        for (const auto& c : sample_satake_split(seed, count)) {
          py::list chi;
          for (const auto& x : c.chi) chi.append(x);
          out.append(chi);
        }
        return out;
      },
      py::arg("seed") = 1, py::arg("count") = 10,
      "Seeded unit-modulus classes with eigenvalue product 1 (lists of 4 "
      "complex numbers).");
  m.def(
      "sample_inert",
      [](std::uint64_t seed, int count) {
        py::list out;
        for (const auto& c : sample_satake_inert(seed, count))
          out.append(py::make_tuple(c.a, c.b));
        return out;
      },
      py::arg("seed") = 1, py::arg("count") = 10,
      "Seeded unit-modulus rank-2 classes (a, b) kept away from the "
      "Weyl-denominator walls.");
  m.def(
      "local_integral",
      [](const std::string& kind, const std::vector<cplx>& satake, int q,
         double s, double z, int terms) {
        const auto I = numeric_local_integral(make_case(kind, satake), q, s, z,
                                              terms);
        return py::make_tuple(I.value, I.tail);
      },
      py::arg("kind"), py::arg("satake"), py::arg("q") = 3, py::arg("s") = 3.0,
      py::arg("z") = 2.0, py::arg("terms") = 60,
      "(value, tail bound) of the truncated local integral; tail >= 1 "
      "flags non-convergent parameters.");
  m.def(
      "closed_form",
      [](const std::string& kind, const std::vector<cplx>& satake, int q,
         double s, double z) {
        return closed_form_product(make_case(kind, satake), q, s, z);
      },
      py::arg("kind"), py::arg("satake"), py::arg("q") = 3, py::arg("s") = 3.0,
      py::arg("z") = 2.0,
      "The closed-form value the integral is asserted to equal.");

  // verification suite ---------------------------------------------------
  m.def(
      "run_suite",
      [](const std::string& group, std::uint64_t seed, int samples,
         int split_order, int inert_order, const std::string& perturb) {
        VerifyConfig cfg;
        cfg.seed = seed;
        cfg.samples = samples;
        cfg.split_order = split_order;
        cfg.inert_order = inert_order;
        cfg.perturb = perturb;
        const auto rep = run_suite(cfg, group);
        return py::make_tuple(rep.all_pass, report_to_json(rep));
      },
      py::arg("group") = "all", py::arg("seed") = 1, py::arg("samples") = 10,
      py::arg("split_order") = 8, py::arg("inert_order") = 10,
      py::arg("perturb") = "",
      "Run the check suite; returns (all_pass, report JSON).");
}
