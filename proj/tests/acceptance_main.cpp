// Acceptance gate: one line per criterion, exit nonzero if any fails.

#include "rieffel/canonical.hpp"
#include "rieffel/deform.hpp"
#include "rieffel/fourier.hpp"
#include "rieffel/report.hpp"
#include "rieffel/suite.hpp"
#include "rieffel/testfam.hpp"
#include "rieffel/weyl.hpp"

#include <cstdio>
#include <string>
#include <vector>

using namespace rieffel;

namespace {

int failures = 0;

void report_line(int idx, const std::string& name, double residual, double tol,
                 bool pass) {
    if (!pass) ++failures;
    std::printf("%s criterion-%02d %-28s residual=%.3e tol=%.1e\n",
                pass ? "PASS" : "FAIL", idx, name.c_str(), residual, tol);
    std::fflush(stdout);
}

// track the worst subcheck of a criterion as residual/tol ratio
struct Worst {
    double residual = 0.0;
    double tol = 1.0;
    bool pass = true;
    void add(double r, double t) {
        if (t <= 0.0 || r / t > residual / tol) {
            residual = r;
            tol = t;
        }
        if (r > t) pass = false;
    }
};

CPElement random_cp(const PhaseGrid& g, const ActionSpec& spec, SplitMix& rng,
                    double sigma, double mod, int terms) {
    std::vector<TensorTerm> tt;
    for (int t = 0; t < terms; ++t)
        tt.emplace_back(hg_symbol(g, rng, sigma, mod), random_inner_element(spec, rng));
    return cp_from_tensors(g, spec, tt);
}

double rel_dist(const CPElement& A, const CPElement& B) {
    return cp_dist(A, B) / std::max(cp_max_abs(A), 1e-30);
}

// plain-Gaussian carrier for the convolution-quadrature criteria
CPElement random_cp_g(const PhaseGrid& g, const ActionSpec& spec, SplitMix& rng,
                      double sigma, double mod) {
    PhaseFunction f =
        gauss_symbol(g, rng.uniform(-mod, mod), rng.uniform(-mod, mod),
                     rng.uniform(-mod, mod), rng.uniform(-mod, mod), sigma);
    return cp_from_tensors(g, spec, {{f, random_inner_element(spec, rng)}});
}

void criterion_1() {
    SplitMix rng(7);
    double worst = 0.0;
    for (int t = 0; t < 1000; ++t) {
        Eigen::VectorXd X(2), Y(2), Z(2);
        for (int i = 0; i < 2; ++i) {
            X(i) = rng.uniform(-5, 5);
            Y(i) = rng.uniform(-5, 5);
            Z(i) = rng.uniform(-5, 5);
        }
        worst = std::max(worst, std::abs(cocycle(X, Y) * cocycle(X + Y, Z) -
                                         cocycle(Y, Z) * cocycle(X, Y + Z)));
    }
    report_line(1, "cocycle_identity", worst, 1e-13, worst <= 1e-13);
}

void criterion_2() {
    SplitMix rng(11);
    double worst = 0.0;
    for (int N : {16, 32, 64}) {
        PhaseFunction r(N, N);
        for (int i = 0; i < N; ++i)
            for (int j = 0; j < N; ++j) r(i, j) = rng.cnormal();
        PhaseFunction Fr = symp_fourier(r);
        worst = std::max(worst, (symp_fourier(Fr) - r).cwiseAbs().maxCoeff());
        worst = std::max(worst, std::abs(Fr.norm() - r.norm()) / r.norm());
    }
    report_line(2, "fourier_unitary_involutive", worst, 1e-12, worst <= 1e-12);
}

void criterion_3() {
    Worst w;
    // spectral phase law, exact cocycle on pure modes
    {
        SplitMix rng(13);
        ActionSpec spec = make_torus_spec(4);
        double worst = 0.0;
        for (int t = 0; t < 50; ++t) {
            const int k0 = rng.uniform_int(-2, 2), k1 = rng.uniform_int(-2, 2);
            const int l0 = rng.uniform_int(-2, 2), l1 = rng.uniform_int(-2, 2);
            AlgebraElement ek = algebra_zero(spec), el = algebra_zero(spec);
            ek.modes[{k0, k1}] = 1.0;
            el.modes[{l0, l1}] = 1.0;
            AlgebraElement prod = deform_product(ek, el, Strategy::SpectralExact);
            Eigen::Vector2d K(k0, k1), L(l0, l1);
            AlgebraElement expect = algebra_zero(spec);
            expect.modes[{k0 + l0, k1 + l1}] = cocycle(K, L);
            worst = std::max(worst, algebra_dist(prod, expect));
        }
        w.add(worst, 1e-13);
    }
    // quadrature of the defining double integral, two resolutions
    double q32 = 0.0, q64 = 0.0;
    {
        SplitMix rng(17);
        std::vector<std::pair<Eigen::Vector2d, Eigen::Vector2d>> pq;
        for (int t = 0; t < 3; ++t) {
            Eigen::Vector2d p(rng.uniform(-1, 1), rng.uniform(-1, 1));
            Eigen::Vector2d q(rng.uniform(-1, 1), rng.uniform(-1, 1));
            pq.emplace_back(p, q);
        }
        for (const auto& [p, q] : pq) {
            q32 = std::max(q32, std::abs(phase_law_quadrature(p, q, 32) - cocycle(p, q)));
            q64 = std::max(q64, std::abs(phase_law_quadrature(p, q, 64) - cocycle(p, q)));
        }
        w.add(q32, 1e-6);
        w.add(q64, q32 / 10.0);   // >= 10x improvement
    }
    report_line(3, "phase_law_vs_quadrature", w.residual, w.tol, w.pass);
}

void criterion_4() {
    Worst w;
    SplitMix rng(19);
    {   // three strategies + operator consistency at N=32
        PhaseGrid g = make_selfdual_grid(32);
        for (int t = 0; t < 3; ++t) {
            PhaseFunction a =
                gauss_symbol(g, rng.uniform(-0.2, 0.2), rng.uniform(-0.2, 0.2),
                             rng.uniform(-0.6, 0.6), rng.uniform(-0.6, 0.6), 1.3);
            PhaseFunction b =
                gauss_symbol(g, rng.uniform(-0.2, 0.2), rng.uniform(-0.2, 0.2),
                             rng.uniform(-0.6, 0.6), rng.uniform(-0.6, 0.6), 1.3);
            PhaseFunction p1 = moyal_grid(a, b);
            PhaseFunction p2 = moyal_op(a, b);
            PhaseFunction p3 = moyal_brute(a, b);
            const double s = std::max(p2.cwiseAbs().maxCoeff(), 1e-30);
            w.add((p1 - p2).cwiseAbs().maxCoeff() / s, 1e-8);
            w.add((p3 - p1).cwiseAbs().maxCoeff() / s, 1e-8);
            // Op(a#b) = Op(a)Op(b)
            Eigen::MatrixXcd lhs = weyl_op(p1);
            Eigen::MatrixXcd rhs = weyl_op(a) * weyl_op(b);
            w.add((lhs - rhs).cwiseAbs().maxCoeff() /
                      std::max(rhs.cwiseAbs().maxCoeff(), 1e-30),
                  1e-8);
        }
    }
    {   // Wigner identities at N=64
        const int N = 64;
        PhaseGrid g = make_selfdual_grid(N);
        Eigen::VectorXcd u = gauss_state(g, rng.uniform(-0.5, 0.5));
        Eigen::VectorXcd v = gauss_state(g, rng.uniform(-0.5, 0.5));
        PhaseFunction W = wigner(u, v);
        // rank one
        w.add((weyl_op(W) - g.h * u * v.adjoint()).cwiseAbs().maxCoeff(), 1e-9);
        // a # W(u,v) = W(Op(a)u, v)
        PhaseFunction a = hg_symbol(g, rng, 1.1, 0.3);
        PhaseFunction lhs = moyal_grid(a, W);
        Eigen::VectorXcd au = weyl_op(a) * u;
        PhaseFunction rhs = wigner(au, v);
        w.add((lhs - rhs).cwiseAbs().maxCoeff() /
                  std::max(rhs.cwiseAbs().maxCoeff(), 1e-30),
              1e-8);
        // HS unitarity of the quantization
        w.add(std::abs(hs_norm(weyl_op(a)) - l2_norm(a)) / l2_norm(a), 1e-10);
        // ||W(u,v)|| = ||u|| ||v||
        const double nw = l2_norm(W);
        w.add(std::abs(nw - state_norm(u, g) * state_norm(v, g)) / nw, 1e-10);
    }
    report_line(4, "weyl_consistency", w.residual, w.tol, w.pass);
}

void criterion_5() {
    Worst w;
    SplitMix rng(23);
    double res32 = 0.0;
    for (int N : {32, 64}) {
        PhaseGrid g = make_selfdual_grid(N);
        ActionSpec spec = random_inner_spec(2, rng);
        CPElement F = random_cp_g(g, spec, rng, 1.3, 0.25);
        CPElement G = random_cp_g(g, spec, rng, 1.3, 0.25);
        CPElement lhs = canonical_m(square_product(F, G));
        CPElement rhs = twisted_conv(canonical_m(F), canonical_m(G));
        const double res = rel_dist(lhs, rhs);
        if (N == 32) {
            res32 = res;
            w.add(res, 1e-7);
        } else {
            w.add(res, res32 / 10.0);   // >= 10x improvement
        }
        // involution and inverse at both sizes
        w.add(rel_dist(canonical_m(cp_star_pointwise(F)),
                       cp_involution(canonical_m(F))),
              1e-9);
        w.add(rel_dist(canonical_m_inv(canonical_m(F)), F), 1e-11);
    }
    report_line(5, "canonical_star_morphism", w.residual, w.tol, w.pass);
}

void criterion_6() {
    Worst w;
    SplitMix rng(29);
    const int N = 64;
    PhaseGrid g = make_selfdual_grid(N);
    ActionSpec spec = random_inner_spec(2, rng);
    CPElement F = random_cp_g(g, spec, rng, 1.3, 0.25);
    CPElement G = random_cp_g(g, spec, rng, 1.3, 0.25);
    CPElement MF = canonical_m(F), MG = canonical_m(G);
    // C_{1/2} carries <> to <>'
    CPElement lhs = c_alpha(0.5, twisted_conv(MF, MG));
    CPElement rhs = twisted_conv_kn(c_alpha(0.5, MF), c_alpha(0.5, MG));
    w.add(rel_dist(lhs, rhs), 1e-8);
    // M' is a morphism onto the Kohn-Nirenberg product
    CPElement ml = canonical_m_prime(square_product(F, G));
    CPElement mr = twisted_conv_kn(canonical_m_prime(F), canonical_m_prime(G));
    w.add(rel_dist(ml, mr), 1e-7);
    report_line(6, "kohn_nirenberg_bridge", w.residual, w.tol, w.pass);
}

void criterion_7() {
    SplitMix rng(31);
    const int N = 64;
    PhaseGrid g = make_selfdual_grid(N);
    ActionSpec spec = random_inner_spec(2, rng);
    CPElement G = canonical_m(random_cp_g(g, spec, rng, 1.3, 0.25));
    CPElement H = canonical_m(random_cp_g(g, spec, rng, 1.3, 0.25));
    double worst = 0.0;
    for (int t = 0; t < 20; ++t) {
        Eigen::Vector2d Z(g.node(N / 2 + rng.uniform_int(-3, 3)),
                          g.node(N / 2 + rng.uniform_int(-3, 3)));
        CPElement lhs = dual_action(Z, twisted_conv(G, H));
        CPElement rhs = twisted_conv(dual_action(Z, G), dual_action(Z, H));
        worst = std::max(worst, rel_dist(lhs, rhs));
    }
    report_line(7, "dual_action_intertwining", worst, 1e-9, worst <= 1e-9);
}

void criterion_8() {
    Worst w;
    SplitMix rng(37);
    const int N = 32;
    PhaseGrid g = make_selfdual_grid(N);
    {   // diagonal conjugation on the matrix backend
        ActionSpec spec = random_inner_spec(2, rng);
        EquivariantMorphism R;
        R.rule = EquivariantMorphism::Rule::DiagonalConjugation;
        R.u = Eigen::VectorXcd(2);
        for (int i = 0; i < 2; ++i)
            R.u(i) = std::exp(cd(0.0, rng.uniform(0.0, 2 * M_PI)));
        CPElement F = random_cp(g, spec, rng, 1.2, 0.25, 1);
        w.add(rel_dist(lift_morphism(R, canonical_m(F)),
                       canonical_m(lift_morphism(R, F))),
              1e-10);
    }
    {   // translation phase on the torus backend
        ActionSpec spec = make_torus_spec(1);
        EquivariantMorphism P;
        P.rule = EquivariantMorphism::Rule::TorusTranslationPhase;
        P.sigma0 = Eigen::Vector2d(0.45, -0.8);
        AlgebraElement a = algebra_zero(spec);
        for (int k0 = -1; k0 <= 1; ++k0)
            for (int k1 = -1; k1 <= 1; ++k1) a.modes[{k0, k1}] = rng.cnormal();
        CPElement F = cp_from_tensors(g, spec, {{hg_symbol(g, rng, 1.2, 0.25), a}});
        w.add(rel_dist(lift_morphism(P, canonical_m(F)),
                       canonical_m(lift_morphism(P, F))),
              1e-10);
    }
    report_line(8, "functoriality", w.residual, w.tol, w.pass);
}

void criterion_9() {
    Worst w;
    SplitMix rng(41);
    const int N = 32;
    PhaseGrid g = make_selfdual_grid(N);
    {   // translation backend
        ActionSpec spec = make_translation_spec(g);
        AlgebraElement a, b;
        a.spec = spec;
        a.mat = hg_symbol(g, rng, 1.0, 0.3);
        b.spec = spec;
        b.mat = hg_symbol(g, rng, 1.0, 0.3);
        CPElement F = cp_from_tensors(g, spec, {{hg_symbol(g, rng, 1.2, 0.25), a}});
        CPElement G = cp_from_tensors(g, spec, {{hg_symbol(g, rng, 1.2, 0.25), b}});
        const cd before = orthogonality_pairing(F, G);
        const cd after = orthogonality_pairing(canonical_m(F), canonical_m(G));
        w.add(std::abs(before - after) / std::max(std::abs(before), 1e-30), 1e-10);
    }
    {   // torus backend
        ActionSpec spec = make_torus_spec(1);
        auto rnd = [&] {
            AlgebraElement f = algebra_zero(spec);
            for (int k0 = -1; k0 <= 1; ++k0)
                for (int k1 = -1; k1 <= 1; ++k1) f.modes[{k0, k1}] = rng.cnormal();
            return f;
        };
        CPElement F = cp_from_tensors(g, spec, {{hg_symbol(g, rng, 1.2, 0.25), rnd()}});
        CPElement G = cp_from_tensors(g, spec, {{hg_symbol(g, rng, 1.2, 0.25), rnd()}});
        const cd before = orthogonality_pairing(F, G);
        const cd after = orthogonality_pairing(canonical_m(F), canonical_m(G));
        w.add(std::abs(before - after) / std::max(std::abs(before), 1e-30), 1e-10);
    }
    report_line(9, "pairing_unitarity", w.residual, w.tol, w.pass);
}

void criterion_10() {
    SplitMix rng(43);
    double worst_slack = 0.0;
    for (int t = 0; t < 100; ++t) {
        ActionSpec spec = random_inner_spec(4, rng);
        AlgebraElement f = random_inner_element(spec, rng);
        AlgebraElement h = random_inner_element(spec, rng);
        for (int k = 0; k <= 3; ++k) {
            const double lhs = bc_seminorm(k, mul(f, h));
            double rhs = 0.0;
            for (int i = 0; i <= k; ++i)
                rhs += bc_seminorm(i, f) * bc_seminorm(k - i, h);
            worst_slack = std::max(worst_slack, (lhs - rhs) / std::max(rhs, 1e-30));
        }
    }
    const double res = std::max(worst_slack, 0.0);
    report_line(10, "graded_seminorm_inequality", res, 1e-10, res <= 1e-10);
}

void criterion_11() {
    SuiteConfig cfg;
    cfg.seed = 123;
    cfg.checks = {"cocycle_law", "fourier_unitary", "torus_phase_law",
                  "canonical_inverse", "seminorm_product"};
    const std::string a = to_jsonl(run_suite(cfg));
    const std::string b = to_jsonl(run_suite(cfg));
    const bool pass = !a.empty() && a == b;
    report_line(11, "report_determinism", pass ? 0.0 : 1.0, 0.5, pass);
}

} // namespace

int main() {
    criterion_1();
    criterion_2();
    criterion_3();
    criterion_4();
    criterion_5();
    criterion_6();
    criterion_7();
    criterion_8();
    criterion_9();
    criterion_10();
    criterion_11();
    if (failures > 0) {
        std::printf("%d criterion(s) FAILED\n", failures);
        return 1;
    }
    std::printf("all 11 criteria passed\n");
    return 0;
}
