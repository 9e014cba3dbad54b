#include <pybind11/complex.h>
#include <pybind11/eigen.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "rieffel/canonical.hpp"
#include "rieffel/deform.hpp"
#include "rieffel/fourier.hpp"
#include "rieffel/suite.hpp"
#include "rieffel/weyl.hpp"

namespace py = pybind11;
using namespace rieffel;

PYBIND11_MODULE(_rieffel, m) {
    m.doc() = "numerical toolkit for deformed products and twisted convolutions";

    py::class_<PhaseGrid>(m, "PhaseGrid")
        .def_readonly("N", &PhaseGrid::N)
        .def_readonly("h", &PhaseGrid::h)
        .def_readonly("w", &PhaseGrid::w)
        .def("node", &PhaseGrid::node)
        .def("neg_index", &PhaseGrid::neg_index);
    m.def("make_selfdual_grid", &make_selfdual_grid, py::arg("N"));

    m.def("symplectic_form", &symplectic_form);
    m.def("cocycle", &cocycle);
    m.def("heisenberg_mul", &heisenberg_mul);

    m.def("symp_fourier", &symp_fourier);
    m.def("translate", &translate);
    m.def("derivative", &derivative);
    m.def("upsample2", &upsample2);
    m.def("downsample2", &downsample2);
    m.def("eval_at", &eval_at);

    m.def("pi_rep", &pi_rep);
    m.def("schrodinger", &schrodinger);
    m.def("wigner", &wigner);
    m.def("weyl_op", &weyl_op);
    m.def("weyl_symbol", &weyl_symbol);
    m.def("hs_norm", &hs_norm);
    m.def("op_norm", &op_norm);
    m.def("rieffel_norm_estimate", &rieffel_norm_estimate);
    m.def("l2_norm", &l2_norm);

    m.def("moyal_grid", &moyal_grid);
    m.def("moyal_brute", &moyal_brute);
    m.def("moyal_op", &moyal_op);
    m.def("phase_law_quadrature", &phase_law_quadrature);

    py::enum_<Backend>(m, "Backend")
        .value("Translation", Backend::Translation)
        .value("InnerSpectral", Backend::InnerSpectral)
        .value("TorusModes", Backend::TorusModes);

    py::class_<ActionSpec>(m, "ActionSpec")
        .def_readonly("backend", &ActionSpec::backend)
        .def_readonly("mode_radius", &ActionSpec::mode_radius)
        .def("d", &ActionSpec::d);
    m.def("make_translation_spec", &make_translation_spec);
    m.def("make_inner_spec", &make_inner_spec);
    m.def("make_torus_spec", &make_torus_spec);

    py::class_<AlgebraElement>(m, "AlgebraElement")
        .def_readonly("spec", &AlgebraElement::spec)
        .def_readwrite("mat", &AlgebraElement::mat)
        .def("mode", [](const AlgebraElement& f, int k0, int k1) {
            auto it = f.modes.find({k0, k1});
            return it == f.modes.end() ? cd(0.0) : it->second;
        })
        .def("set_mode", [](AlgebraElement& f, int k0, int k1, cd c) {
            f.modes[{k0, k1}] = c;
        });
    m.def("algebra_zero", &algebra_zero);
    m.def("algebra_unit", &algebra_unit);
    m.def("act", &act);
    m.def("derivation", &derivation);
    m.def("mul", &mul);
    m.def("adjoint", &adjoint);
    m.def("algebra_norm", &algebra_norm);
    m.def("seminorm", &seminorm);
    m.def("algebra_dist", &algebra_dist);

    py::enum_<Strategy>(m, "Strategy")
        .value("SpectralExact", Strategy::SpectralExact)
        .value("GridReduced", Strategy::GridReduced)
        .value("OperatorOracle", Strategy::OperatorOracle)
        .value("BruteQuadrature", Strategy::BruteQuadrature);
    m.def("deform_product", &deform_product);
    m.def("bc_seminorm", &bc_seminorm);

    py::class_<CPElement>(m, "CPElement")
        .def_readonly("grid", &CPElement::grid)
        .def_readonly("spec", &CPElement::spec)
        .def("at", [](const CPElement& F, int i, int j) { return F.at(i, j); })
        .def("set", [](CPElement& F, int i, int j, const AlgebraElement& a) {
            F.at(i, j) = a;
        });
    m.def("cp_zero", &cp_zero);
    m.def("cp_from_tensors", &cp_from_tensors);
    m.def("cp_add", &cp_add);
    m.def("cp_scale", &cp_scale);
    m.def("cp_dist", &cp_dist);
    m.def("cp_max_abs", &cp_max_abs);
    m.def("twisted_conv", &twisted_conv);
    m.def("twisted_conv_kn", &twisted_conv_kn);
    m.def("cp_involution", &cp_involution);
    m.def("cp_star_pointwise", &cp_star_pointwise);
    m.def("c_alpha", &c_alpha);
    m.def("l1_norm", &l1_norm);
    m.def("cp_l2_norm", &cp_l2_norm);
    m.def("square_product", &square_product);
    m.def("square_product_tensors", &square_product_tensors);

    m.def("partial_fourier", &partial_fourier);
    m.def("canonical_m", &canonical_m);
    m.def("canonical_m_inv", &canonical_m_inv);
    m.def("canonical_m_prime", &canonical_m_prime);
    m.def("dual_action", &dual_action);
    m.def("orthogonality_pairing", &orthogonality_pairing);

    py::class_<SuiteConfig>(m, "SuiteConfig")
        .def(py::init<>())
        .def_readwrite("N", &SuiteConfig::N)
        .def_readwrite("d", &SuiteConfig::d)
        .def_readwrite("seed", &SuiteConfig::seed)
        .def_readwrite("backend", &SuiteConfig::backend)
        .def_readwrite("checks", &SuiteConfig::checks)
        .def_readwrite("tol_scale", &SuiteConfig::tol_scale)
        .def_readwrite("timings", &SuiteConfig::timings);
    m.def("known_checks", &known_checks);
    m.def("run_suite_jsonl",
          [](const SuiteConfig& cfg) { return to_jsonl(run_suite(cfg)); });
}
