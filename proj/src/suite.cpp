#include "rieffel/suite.hpp"

#include "rieffel/canonical.hpp"
#include "rieffel/deform.hpp"
#include "rieffel/fourier.hpp"
#include "rieffel/testfam.hpp"
#include "rieffel/weyl.hpp"

#include <algorithm>
#include <chrono>
#include <fstream>
#include <functional>
#include <stdexcept>

namespace rieffel {

namespace {

CPElement random_cp(const PhaseGrid& g, const ActionSpec& spec, SplitMix& rng,
                    double sigma, double mod, int terms) {
    std::vector<TensorTerm> tt;
    for (int t = 0; t < terms; ++t)
        tt.emplace_back(hg_symbol(g, rng, sigma, mod), random_inner_element(spec, rng));
    return cp_from_tensors(g, spec, tt);
}

// plain-Gaussian carrier for the convolution quadratures (faster tails)
CPElement random_cp_g(const PhaseGrid& g, const ActionSpec& spec, SplitMix& rng,
                      double sigma, double mod) {
    PhaseFunction f =
        gauss_symbol(g, rng.uniform(-mod, mod), rng.uniform(-mod, mod),
                     rng.uniform(-mod, mod), rng.uniform(-mod, mod), sigma);
    return cp_from_tensors(g, spec, {{f, random_inner_element(spec, rng)}});
}

double rel_dist(const CPElement& A, const CPElement& B) {
    return cp_dist(A, B) / std::max(cp_max_abs(A), 1e-30);
}

struct CheckDef {
    std::string id;
    std::string anchor;
    std::string backend;   // translation | inner | torus
    int N0;                // pinned grid size (0: grid-free)
    int Nmax;              // sweep guard
    int d0;                // pinned fiber dimension (0: not applicable)
    double tol;
    std::function<double(int N, int d, uint64_t seed)> residual;
};

double check_cocycle(int, int, uint64_t seed) {
    SplitMix rng(seed);
    double worst = 0.0;
    for (int t = 0; t < 1000; ++t) {
        Eigen::VectorXd X(2), Y(2), Z(2);
        for (int i = 0; i < 2; ++i) {
            X(i) = rng.uniform(-5, 5);
            Y(i) = rng.uniform(-5, 5);
            Z(i) = rng.uniform(-5, 5);
        }
        const cd lhs = cocycle(X, Y) * cocycle(X + Y, Z);
        const cd rhs = cocycle(Y, Z) * cocycle(X, Y + Z);
        worst = std::max(worst, std::abs(lhs - rhs));
    }
    return worst;
}

double check_fourier(int N, int, uint64_t seed) {
    SplitMix rng(seed);
    PhaseGrid g = make_selfdual_grid(N);
    PhaseFunction r(N, N);
    for (int i = 0; i < N; ++i)
        for (int j = 0; j < N; ++j) r(i, j) = rng.cnormal();
    PhaseFunction Fr = symp_fourier(r);
    double res = (symp_fourier(Fr) - r).cwiseAbs().maxCoeff();
    res = std::max(res, std::abs(Fr.norm() - r.norm()) / r.norm());
    return res;
}

double check_projective(int N, int, uint64_t seed) {
    SplitMix rng(seed);
    PhaseGrid g = make_selfdual_grid(N);
    double worst = 0.0;
    for (int t = 0; t < 4; ++t) {
        // the relation is exact on lattice points
        Eigen::Vector2d X(g.h * rng.uniform_int(-4, 4), g.h * rng.uniform_int(-4, 4));
        Eigen::Vector2d Y(g.h * rng.uniform_int(-4, 4), g.h * rng.uniform_int(-4, 4));
        Eigen::MatrixXcd P = pi_rep(X(0), X(1), N);
        Eigen::MatrixXcd Q = pi_rep(Y(0), Y(1), N);
        Eigen::MatrixXcd R = pi_rep(X(0) + Y(0), X(1) + Y(1), N);
        worst = std::max(worst, (P * Q - cocycle(X, Y) * R).cwiseAbs().maxCoeff());
    }
    return worst;
}

double check_moyal(int N, int, uint64_t seed) {
    SplitMix rng(seed);
    PhaseGrid g = make_selfdual_grid(N);
    double worst = 0.0;
    for (int t = 0; t < 2; ++t) {
        PhaseFunction a = gauss_symbol(g, rng.uniform(-0.2, 0.2), rng.uniform(-0.2, 0.2),
                                       rng.uniform(-0.6, 0.6), rng.uniform(-0.6, 0.6), 1.3);
        PhaseFunction b = gauss_symbol(g, rng.uniform(-0.2, 0.2), rng.uniform(-0.2, 0.2),
                                       rng.uniform(-0.6, 0.6), rng.uniform(-0.6, 0.6), 1.3);
        PhaseFunction p1 = moyal_grid(a, b);
        PhaseFunction p2 = moyal_op(a, b);
        PhaseFunction p3 = moyal_brute(a, b);
        const double s = std::max(p2.cwiseAbs().maxCoeff(), 1e-30);
        worst = std::max(worst, (p1 - p2).cwiseAbs().maxCoeff() / s);
        worst = std::max(worst, (p3 - p2).cwiseAbs().maxCoeff() / s);
    }
    return worst;
}

double check_phase_quad(int N, int, uint64_t seed) {
    SplitMix rng(seed);
    double worst = 0.0;
    for (int t = 0; t < 3; ++t) {
        Eigen::Vector2d p(rng.uniform(-1, 1), rng.uniform(-1, 1));
        Eigen::Vector2d q(rng.uniform(-1, 1), rng.uniform(-1, 1));
        worst = std::max(worst, std::abs(phase_law_quadrature(p, q, N) - cocycle(p, q)));
    }
    return worst;
}

double check_roundtrip(int N, int, uint64_t seed) {
    SplitMix rng(seed);
    PhaseGrid g = make_selfdual_grid(N);
    PhaseFunction a = hg_symbol(g, rng, 1.1, 0.3);
    return (weyl_symbol(weyl_op(a)) - a).cwiseAbs().maxCoeff() /
           a.cwiseAbs().maxCoeff();
}

double check_wigner(int N, int, uint64_t seed) {
    SplitMix rng(seed);
    PhaseGrid g = make_selfdual_grid(N);
    Eigen::VectorXcd u = gauss_state(g, rng.uniform(-0.5, 0.5));
    Eigen::VectorXcd v = gauss_state(g, rng.uniform(-0.5, 0.5));
    Eigen::MatrixXcd T = weyl_op(wigner(u, v));
    return (T - g.h * u * v.adjoint()).cwiseAbs().maxCoeff();
}

double check_m_inverse(int N, int d, uint64_t seed) {
    SplitMix rng(seed);
    PhaseGrid g = make_selfdual_grid(N);
    ActionSpec spec = random_inner_spec(d, rng);
    CPElement F = random_cp(g, spec, rng, 1.2, 0.25, 2);
    return rel_dist(canonical_m_inv(canonical_m(F)), F);
}

double check_m_morphism(int N, int d, uint64_t seed) {
    SplitMix rng(seed);
    PhaseGrid g = make_selfdual_grid(N);
    ActionSpec spec = random_inner_spec(d, rng);
    CPElement F = random_cp_g(g, spec, rng, 1.3, 0.25);
    CPElement G = random_cp_g(g, spec, rng, 1.3, 0.25);
    CPElement lhs = canonical_m(square_product(F, G));
    CPElement rhs = twisted_conv(canonical_m(F), canonical_m(G));
    return rel_dist(lhs, rhs);
}

double check_m_involution(int N, int d, uint64_t seed) {
    SplitMix rng(seed);
    PhaseGrid g = make_selfdual_grid(N);
    ActionSpec spec = random_inner_spec(d, rng);
    CPElement F = random_cp(g, spec, rng, 1.2, 0.25, 2);
    return rel_dist(canonical_m(cp_star_pointwise(F)), cp_involution(canonical_m(F)));
}

double check_kn_intertwine(int N, int d, uint64_t seed) {
    SplitMix rng(seed);
    PhaseGrid g = make_selfdual_grid(N);
    ActionSpec spec = random_inner_spec(d, rng);
    CPElement A = canonical_m(random_cp_g(g, spec, rng, 1.3, 0.25));
    CPElement B = canonical_m(random_cp_g(g, spec, rng, 1.3, 0.25));
    CPElement lhs = c_alpha(0.5, twisted_conv(A, B));
    CPElement rhs = twisted_conv_kn(c_alpha(0.5, A), c_alpha(0.5, B));
    return rel_dist(lhs, rhs);
}

double check_conv_involution(int N, int d, uint64_t seed) {
    SplitMix rng(seed);
    PhaseGrid g = make_selfdual_grid(N);
    ActionSpec spec = random_inner_spec(d, rng);
    CPElement A = random_cp_g(g, spec, rng, 0.7, 0.2);
    CPElement B = random_cp_g(g, spec, rng, 0.7, 0.2);
    CPElement lhs = cp_involution(twisted_conv(A, B));
    CPElement rhs = twisted_conv(cp_involution(B), cp_involution(A));
    return rel_dist(lhs, rhs);
}

double check_conv_assoc(int N, int d, uint64_t seed) {
    SplitMix rng(seed);
    PhaseGrid g = make_selfdual_grid(N);
    ActionSpec spec = random_inner_spec(d, rng);
    CPElement A = random_cp_g(g, spec, rng, 0.7, 0.2);
    CPElement B = random_cp_g(g, spec, rng, 0.7, 0.2);
    CPElement C = random_cp_g(g, spec, rng, 0.7, 0.2);
    CPElement lhs = twisted_conv(twisted_conv(A, B), C);
    CPElement rhs = twisted_conv(A, twisted_conv(B, C));
    return rel_dist(lhs, rhs);
}

double check_dual_action(int N, int d, uint64_t seed) {
    SplitMix rng(seed);
    PhaseGrid g = make_selfdual_grid(N);
    ActionSpec spec = random_inner_spec(d, rng);
    CPElement G = canonical_m(random_cp_g(g, spec, rng, 1.3, 0.25));
    CPElement H = canonical_m(random_cp_g(g, spec, rng, 1.3, 0.25));
    Eigen::Vector2d Z(g.node(N / 2 + rng.uniform_int(-3, 3)),
                      g.node(N / 2 + rng.uniform_int(-3, 3)));
    CPElement lhs = dual_action(Z, twisted_conv(G, H));
    CPElement rhs = twisted_conv(dual_action(Z, G), dual_action(Z, H));
    return rel_dist(lhs, rhs);
}

double check_lift(int N, int d, uint64_t seed) {
    SplitMix rng(seed);
    PhaseGrid g = make_selfdual_grid(N);
    ActionSpec spec = random_inner_spec(d, rng);
    EquivariantMorphism R;
    R.rule = EquivariantMorphism::Rule::DiagonalConjugation;
    R.u = Eigen::VectorXcd(d);
    for (int i = 0; i < d; ++i) R.u(i) = std::exp(cd(0.0, rng.uniform(0.0, 2 * M_PI)));
    CPElement F = random_cp(g, spec, rng, 1.2, 0.25, 1);
    return rel_dist(lift_morphism(R, canonical_m(F)), canonical_m(lift_morphism(R, F)));
}

double check_pairing_inner(int N, int d, uint64_t seed) {
    SplitMix rng(seed);
    PhaseGrid g = make_selfdual_grid(N);
    ActionSpec spec = random_inner_spec(d, rng);
    CPElement F = random_cp(g, spec, rng, 1.2, 0.25, 1);
    CPElement G = random_cp(g, spec, rng, 1.2, 0.25, 1);
    const cd before = orthogonality_pairing(F, G);
    const cd after = orthogonality_pairing(canonical_m(F), canonical_m(G));
    return std::abs(before - after) / std::max(std::abs(before), 1e-30);
}

double check_pairing_translation(int N, int, uint64_t seed) {
    SplitMix rng(seed);
    PhaseGrid g = make_selfdual_grid(N);
    ActionSpec spec = make_translation_spec(g);
    std::vector<TensorTerm> Ft, Gt;
    for (int t = 0; t < 1; ++t) {
        AlgebraElement a;
        a.spec = spec;
        a.mat = hg_symbol(g, rng, 1.0, 0.3);
        AlgebraElement b;
        b.spec = spec;
        b.mat = hg_symbol(g, rng, 1.0, 0.3);
        Ft.emplace_back(hg_symbol(g, rng, 1.2, 0.25), a);
        Gt.emplace_back(hg_symbol(g, rng, 1.2, 0.25), b);
    }
    CPElement F = cp_from_tensors(g, spec, Ft);
    CPElement G = cp_from_tensors(g, spec, Gt);
    const cd before = orthogonality_pairing(F, G);
    const cd after = orthogonality_pairing(canonical_m(F), canonical_m(G));
    return std::abs(before - after) / std::max(std::abs(before), 1e-30);
}

double check_pairing_torus(int N, int, uint64_t seed) {
    SplitMix rng(seed);
    PhaseGrid g = make_selfdual_grid(N);
    ActionSpec spec = make_torus_spec(1);
    auto rnd_mode = [&] {
        AlgebraElement f = algebra_zero(spec);
        for (int k0 = -1; k0 <= 1; ++k0)
            for (int k1 = -1; k1 <= 1; ++k1) f.modes[{k0, k1}] = rng.cnormal();
        return f;
    };
    CPElement F = cp_from_tensors(g, spec, {{hg_symbol(g, rng, 1.2, 0.25), rnd_mode()}});
    CPElement G = cp_from_tensors(g, spec, {{hg_symbol(g, rng, 1.2, 0.25), rnd_mode()}});
    const cd before = orthogonality_pairing(F, G);
    const cd after = orthogonality_pairing(canonical_m(F), canonical_m(G));
    return std::abs(before - after) / std::max(std::abs(before), 1e-30);
}

double check_torus_phase(int, int, uint64_t seed) {
    SplitMix rng(seed);
    ActionSpec spec = make_torus_spec(4);
    double worst = 0.0;
    for (int t = 0; t < 20; ++t) {
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
    return worst;
}

double check_seminorm(int, int d, uint64_t seed) {
    SplitMix rng(seed);
    ActionSpec spec = random_inner_spec(d, rng);
    double slack = 0.0;
    for (int t = 0; t < 20; ++t) {
        AlgebraElement f = random_inner_element(spec, rng);
        AlgebraElement h = random_inner_element(spec, rng);
        for (int k = 0; k <= 3; ++k) {
            const double lhs = bc_seminorm(k, mul(f, h));
            double rhs = 0.0;
            for (int i = 0; i <= k; ++i) rhs += bc_seminorm(i, f) * bc_seminorm(k - i, h);
            slack = std::max(slack, (lhs - rhs) / std::max(rhs, 1e-30));
        }
    }
    return std::max(slack, 0.0);
}

const std::vector<CheckDef>& registry() {
    static const std::vector<CheckDef> defs = {
        {"cocycle_law", "k(X,Y)k(X+Y,Z)=k(Y,Z)k(X,Y+Z)", "translation", 0, 0, 0,
         1e-12, check_cocycle},
        {"fourier_unitary", "FFa=a, |Fa|=|a|", "translation", 32, 128, 0, 1e-11,
         check_fourier},
        {"projective_relation", "pi(X)pi(Y)=k(X,Y)pi(X+Y)", "translation", 32, 128,
         0, 1e-10, check_projective},
        {"moyal_agreement", "a#b: reduction=oracle=quadrature", "translation", 32,
         64, 0, 1e-8, check_moyal},
        {"phase_law_quadrature", "f_p#f_q=k(p,q)f_{p+q}", "translation", 32, 128, 0,
         1e-6, check_phase_quad},
        {"weyl_roundtrip", "Sym(Op(a))=a", "translation", 64, 128, 0, 1e-8,
         check_roundtrip},
        {"wigner_rank_one", "Op(W(u,v))=h u v*", "translation", 64, 128, 0, 1e-8,
         check_wigner},
        {"canonical_inverse", "Minv(M(F))=F", "inner", 32, 64, 2, 1e-10,
         check_m_inverse},
        {"canonical_morphism", "M(F[]G)=M(F)<>M(G)", "inner", 32, 64, 2, 1e-7,
         check_m_morphism},
        {"canonical_involution", "M(F^*)=M(F)^<>", "inner", 32, 64, 2, 1e-10,
         check_m_involution},
        {"kn_intertwine", "C12(G1<>G2)=C12(G1)<>'C12(G2)", "inner", 64, 64, 2, 1e-8,
         check_kn_intertwine},
        {"conv_involution", "(G1<>G2)^~=G2^~<>G1^~", "inner", 32, 64, 2, 1e-8,
         check_conv_involution},
        {"conv_assoc", "(G1<>G2)<>G3=G1<>(G2<>G3)", "inner", 32, 64, 2, 1e-7,
         check_conv_assoc},
        {"dual_action_morphism", "b_Z(G<>H)=b_Z(G)<>b_Z(H)", "inner", 64, 64, 2,
         1e-9, check_dual_action},
        {"morphism_lift", "R~(M(F))=M(R~(F))", "inner", 32, 64, 2, 1e-11,
         check_lift},
        {"pairing_inner", "<M(F),M(G)>=<F,G>", "inner", 32, 64, 2, 1e-10,
         check_pairing_inner},
        {"pairing_translation", "<M(F),M(G)>=<F,G>", "translation", 32, 32, 0,
         1e-10, check_pairing_translation},
        {"pairing_torus", "<M(F),M(G)>=<F,G>", "torus", 32, 64, 0, 1e-10,
         check_pairing_torus},
        {"torus_phase_law", "e_k#e_l=k(k,l)e_{k+l}", "torus", 0, 0, 0, 1e-13,
         check_torus_phase},
        {"seminorm_product", "p_k(fg)<=sum p_i(f)p_j(h)", "inner", 0, 0, 4, 1e-10,
         check_seminorm},
    };
    return defs;
}

bool selected(const CheckDef& def, const SuiteConfig& cfg) {
    if (cfg.backend != "all" && cfg.backend != def.backend) return false;
    if (!cfg.checks.empty() &&
        std::find(cfg.checks.begin(), cfg.checks.end(), def.id) == cfg.checks.end())
        return false;
    return true;
}

CheckRecord run_one(const CheckDef& def, int N, int d, const SuiteConfig& cfg) {
    CheckRecord rec;
    rec.check = def.id;
    rec.anchor = def.anchor;
    rec.backend = def.backend;
    rec.params["seed"] = cfg.seed;
    if (N > 0) rec.params["N"] = N;
    if (d > 0) rec.params["d"] = d;
    rec.tol = def.tol * cfg.tol_scale;
    const auto t0 = std::chrono::steady_clock::now();
    rec.residual = def.residual(N, d, cfg.seed);
    if (cfg.timings) {
        const auto t1 = std::chrono::steady_clock::now();
        rec.seconds = std::chrono::duration<double>(t1 - t0).count();
    }
    rec.pass = rec.residual <= rec.tol;
    return rec;
}

} // namespace

SuiteConfig load_config(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open config: " + path);
    nlohmann::json j;
    in >> j;
    SuiteConfig cfg;
    for (const auto& [key, val] : j.items()) {
        if (key == "N") cfg.N = val.get<int>();
        else if (key == "d") cfg.d = val.get<int>();
        else if (key == "seed") cfg.seed = val.get<uint64_t>();
        else if (key == "backend") cfg.backend = val.get<std::string>();
        else if (key == "checks") cfg.checks = val.get<std::vector<std::string>>();
        else if (key == "tol_scale") cfg.tol_scale = val.get<double>();
        else if (key == "timings") cfg.timings = val.get<bool>();
        else throw std::invalid_argument("unknown config key: " + key);
    }
    if (cfg.N != 0 && (cfg.N < 8 || cfg.N % 2 != 0))
        throw std::invalid_argument("config: N must be even and >= 8");
    const auto bk = known_backends();
    if (std::find(bk.begin(), bk.end(), cfg.backend) == bk.end())
        throw std::invalid_argument("config: unknown backend " + cfg.backend);
    const auto ck = known_checks();
    for (const auto& c : cfg.checks)
        if (std::find(ck.begin(), ck.end(), c) == ck.end())
            throw std::invalid_argument("config: unknown check " + c);
    return cfg;
}

std::vector<std::string> known_checks() {
    std::vector<std::string> out;
    for (const auto& def : registry()) out.push_back(def.id);
    return out;
}

std::vector<std::string> known_backends() {
    return {"all", "translation", "inner", "torus"};
}

Report run_suite(const SuiteConfig& cfg) {
    Report rep;
    for (const auto& def : registry()) {
        if (!selected(def, cfg)) continue;
        int N = def.N0;
        if (cfg.N > 0 && def.N0 > 0) N = cfg.N;
        int d = def.d0;
        if (cfg.d > 0 && def.d0 > 0) d = cfg.d;
        if (def.N0 > 0 && N > def.Nmax) continue;   // cost guard
        rep.push_back(run_one(def, N, d, cfg));
    }
    return rep;
}

Report convergence_sweep(const SuiteConfig& cfg, const std::string& axis,
                         const std::vector<int>& values) {
    if (axis != "N" && axis != "d")
        throw std::invalid_argument("sweep: axis must be N or d");
    Report rep;
    for (int v : values) {
        SuiteConfig c = cfg;
        if (axis == "N") {
            if (v < 8 || v % 2 != 0)
                throw std::invalid_argument("sweep: N values must be even and >= 8");
            c.N = v;
        } else {
            if (v < 1) throw std::invalid_argument("sweep: d values must be >= 1");
            c.d = v;
        }
        for (const auto& def : registry()) {
            if (!selected(def, c)) continue;
            // only checks that actually move along the axis
            if (axis == "N" && def.N0 == 0) continue;
            if (axis == "d" && def.d0 == 0) continue;
            int N = def.N0 > 0 ? (c.N > 0 ? c.N : def.N0) : 0;
            int d = def.d0 > 0 ? (c.d > 0 ? c.d : def.d0) : 0;
            if (def.N0 > 0 && N > def.Nmax) continue;
            rep.push_back(run_one(def, N, d, c));
        }
    }
    return rep;
}

} // namespace rieffel
