#include <doctest.h>

#include "rieffel/crossed.hpp"
#include "rieffel/deform.hpp"
#include "rieffel/fourier.hpp"
#include "rieffel/testfam.hpp"

using namespace rieffel;

namespace {

CPElement random_cp(const PhaseGrid& g, const ActionSpec& spec, SplitMix& rng,
                    double sigma, double mod, int terms = 2) {
    std::vector<TensorTerm> tt;
    for (int t = 0; t < terms; ++t)
        tt.emplace_back(hg_symbol(g, rng, sigma, mod), random_inner_element(spec, rng));
    return cp_from_tensors(g, spec, tt);
}

// plain-Gaussian carrier: the convolution quadratures need the faster tail
// decay (the product spreads the variance)
CPElement random_cp_g(const PhaseGrid& g, const ActionSpec& spec, SplitMix& rng,
                      double sigma, double mod) {
    PhaseFunction f =
        gauss_symbol(g, rng.uniform(-mod, mod), rng.uniform(-mod, mod),
                     rng.uniform(-mod, mod), rng.uniform(-mod, mod), sigma);
    return cp_from_tensors(g, spec, {{f, random_inner_element(spec, rng)}});
}

} // namespace

TEST_SUITE("crossed") {

TEST_CASE("carrier arithmetic and the tensor constructor") {
    SplitMix rng(51);
    PhaseGrid g = make_selfdual_grid(16);
    ActionSpec spec = random_inner_spec(2, rng);
    PhaseFunction f = hg_symbol(g, rng, 1.0, 0.3);
    AlgebraElement a = random_inner_element(spec, rng);
    CPElement F = cp_from_tensors(g, spec, {{f, a}});
    CHECK(algebra_dist(F.at(3, 7), scale(f(3, 7), a)) < 1e-15);
    CPElement Z = cp_add(F, cp_scale(-1.0, F));
    CHECK(cp_max_abs(Z) < 1e-15);
    CHECK(cp_dist(F, F) == 0.0);
}

TEST_CASE("channel view is a faithful decomposition") {
    SplitMix rng(52);
    PhaseGrid g = make_selfdual_grid(16);
    for (int which = 0; which < 2; ++which) {
        ActionSpec spec = which == 0 ? random_inner_spec(2, rng) : make_torus_spec(1);
        CPElement F = cp_zero(g, spec);
        for (auto& v : F.values) {
            if (which == 0)
                v.mat = random_matrix(2, rng);
            else
                for (int k0 = -1; k0 <= 1; ++k0)
                    for (int k1 = -1; k1 <= 1; ++k1) v.modes[{k0, k1}] = rng.cnormal();
        }
        auto chans = cp_channels(F);
        CPElement back = cp_zero(g, spec);
        for (const auto& c : chans) cp_accumulate_channel(back, c);
        CHECK(cp_dist(back, F) < 1e-15);
        // each channel is action-homogeneous with its stated frequency
        const auto& c = chans[1];
        Eigen::Vector2d X(0.45, -1.2);
        AlgebraElement slot = F.at(2, 5);
        (void)slot;
        CPElement single = cp_zero(g, spec);
        cp_accumulate_channel(single, c);
        const cd ph = std::exp(cd(0.0, c.p.dot(X)));
        CPElement acted = single;
        for (auto& v : acted.values) v = act(X, v);
        CHECK(cp_dist(acted, cp_scale(ph, single)) < 1e-13);
    }
}

TEST_CASE("twisted convolution: grid delta is a left unit") {
    // w^{-1} delta_0 tensor 1 is the exact left unit of the Kohn-Nirenberg
    // sum on the coarse grid (kappa(X,0)=1, Theta_0=id); the half-spacing
    // quadrature replaces the delta by its band-limited interpolant, so
    // exactness is a coarse-sum property.
    SplitMix rng(53);
    const int N = 32;
    PhaseGrid g = make_selfdual_grid(N);
    ActionSpec spec = random_inner_spec(2, rng);
    CPElement G = random_cp(g, spec, rng, 0.75, 0.2);
    // delta-like: the discrete symplectic Fourier transform of the constant 1
    PhaseFunction one = PhaseFunction::Ones(N, N);
    PhaseFunction del = symp_fourier(one);
    CPElement E = cp_from_tensors(g, spec, {{del, algebra_unit(spec)}});
    CPElement P = twisted_conv_coarse(E, G, true);
    CHECK(cp_dist(P, G) < 1e-12 * (1.0 + cp_max_abs(G)));
}

TEST_CASE("fine-grid quadrature vs coarse double sum") {
    // Two independent quadratures of the same integral: the half-spacing
    // interpolation sum (exact for band-limited integrands) and the direct
    // lattice sum (exact up to box-wrap phases).  On the smooth concentrated
    // family they must agree, and both must be associative.
    SplitMix rng(54);
    const int N = 32;
    PhaseGrid g = make_selfdual_grid(N);
    ActionSpec spec = random_inner_spec(2, rng);
    CPElement A = random_cp_g(g, spec, rng, 0.7, 0.2);
    CPElement B = random_cp_g(g, spec, rng, 0.7, 0.2);
    CPElement C = random_cp_g(g, spec, rng, 0.7, 0.2);

    CPElement lhs = twisted_conv(twisted_conv(A, B), C);
    CPElement rhs = twisted_conv(A, twisted_conv(B, C));
    const double scale0 = std::max(cp_max_abs(lhs), 1e-30);
    CHECK(cp_dist(lhs, rhs) / scale0 < 1e-7);

    CPElement lhs_c = twisted_conv_coarse(twisted_conv_coarse(A, B, false), C, false);
    CPElement rhs_c = twisted_conv_coarse(A, twisted_conv_coarse(B, C, false), false);
    CHECK(cp_dist(lhs_c, rhs_c) / std::max(cp_max_abs(lhs_c), 1e-30) < 1e-7);
    CHECK(cp_dist(twisted_conv(A, B), twisted_conv_coarse(A, B, false)) /
              std::max(cp_max_abs(lhs), 1e-30) < 1e-7);
    CHECK(cp_dist(twisted_conv_kn(A, B), twisted_conv_coarse(A, B, true)) /
              std::max(cp_max_abs(lhs), 1e-30) < 1e-7);

    // Kohn-Nirenberg variant associativity
    CPElement lhs_k = twisted_conv_kn(twisted_conv_kn(A, B), C);
    CPElement rhs_k = twisted_conv_kn(A, twisted_conv_kn(B, C));
    CHECK(cp_dist(lhs_k, rhs_k) / std::max(cp_max_abs(lhs_k), 1e-30) < 1e-7);
}

TEST_CASE("involutions") {
    SplitMix rng(55);
    PhaseGrid g = make_selfdual_grid(16);
    ActionSpec spec = random_inner_spec(2, rng);
    CPElement F = random_cp(g, spec, rng, 1.0, 0.3);
    CHECK(cp_dist(cp_involution(cp_involution(F)), F) < 1e-14);
    CHECK(cp_dist(cp_star_pointwise(cp_star_pointwise(F)), F) < 1e-14);
    // involution is conjugate-linear
    CPElement sF = cp_scale(cd(0.3, -1.1), F);
    CHECK(cp_dist(cp_involution(sF), cp_scale(std::conj(cd(0.3, -1.1)), cp_involution(F))) <
          1e-13);
}

TEST_CASE("anti-involution law for the twisted convolution") {
    SplitMix rng(56);
    const int N = 64;
    PhaseGrid g = make_selfdual_grid(N);
    ActionSpec spec = random_inner_spec(2, rng);
    CPElement A = random_cp_g(g, spec, rng, 0.7, 0.2);
    CPElement B = random_cp_g(g, spec, rng, 0.7, 0.2);
    CPElement lhs = cp_involution(twisted_conv(A, B));
    CPElement rhs = twisted_conv(cp_involution(B), cp_involution(A));
    CHECK(cp_dist(lhs, rhs) / std::max(cp_max_abs(lhs), 1e-30) < 1e-9);
}

TEST_CASE("the scaling maps form a one-parameter family") {
    SplitMix rng(57);
    PhaseGrid g = make_selfdual_grid(32);
    ActionSpec spec = random_inner_spec(2, rng);
    CPElement F = random_cp(g, spec, rng, 1.0, 0.25);
    CPElement c1 = c_alpha(0.3, c_alpha(0.5, F));
    CPElement c2 = c_alpha(0.8, F);
    CHECK(cp_dist(c1, c2) < 1e-11);
    CHECK(cp_dist(c_alpha(0.0, F), F) < 1e-15);
    // elementary-tensor formula: [C_1(f (x) a)](X) = f(X) Theta_X(a)
    PhaseFunction f = hg_symbol(g, rng, 1.0, 0.25);
    AlgebraElement a = random_inner_element(spec, rng);
    CPElement T = cp_from_tensors(g, spec, {{f, a}});
    CPElement CT = c_alpha(1.0, T);
    double err = 0.0;
    for (int t = 0; t < 20; ++t) {
        const int i = rng.uniform_int(0, 31), j = rng.uniform_int(0, 31);
        Eigen::Vector2d X(g.node(i), g.node(j));
        err = std::max(err, algebra_dist(CT.at(i, j), scale(f(i, j), act(X, a))));
    }
    CHECK(err < 1e-12);
}

TEST_CASE("norms and the factorized L1 bound") {
    SplitMix rng(58);
    PhaseGrid g = make_selfdual_grid(32);
    ActionSpec spec = random_inner_spec(3, rng);
    PhaseFunction f = hg_symbol(g, rng, 1.0, 0.2);
    AlgebraElement a = random_inner_element(spec, rng);
    CPElement T = cp_from_tensors(g, spec, {{f, a}});
    double l1f = 0.0;
    for (int i = 0; i < g.N; ++i)
        for (int j = 0; j < g.N; ++j) l1f += g.w * std::abs(f(i, j));
    CHECK(std::abs(l1_norm(T) - l1f * algebra_norm(a)) < 1e-10 * l1_norm(T));
    CHECK(cp_l2_norm(T) > 0.0);
    CHECK(l1_norm(cp_add(T, T)) <= 2.0 * l1_norm(T) * (1.0 + 1e-12));
}

TEST_CASE("decay seminorms against a closed form") {
    const int N = 32;
    PhaseGrid g = make_selfdual_grid(N);
    ActionSpec spec = make_torus_spec(0);   // scalar fiber
    PhaseFunction f(N, N);
    for (int i = 0; i < N; ++i)
        for (int j = 0; j < N; ++j) {
            const double x = g.node(i), y = g.node(j);
            f(i, j) = std::exp(-(x * x + y * y) / 2.0);
        }
    CPElement T = cp_from_tensors(g, spec, {{f, algebra_unit(spec)}});
    // max over the grid of (1+|X|) e^{-|X|^2/2}: attained at |X| solving
    // r(1+r)=1, value (1+r*) e^{-r*^2/2}, r* = (sqrt(5)-1)/2
    const double rs = (std::sqrt(5.0) - 1.0) / 2.0;
    const double expect = (1.0 + rs) * std::exp(-rs * rs / 2.0);
    const double got = schwartz_seminorm(T, 0, {0, 0}, 1);
    CHECK(std::abs(got - expect) < 1e-2);   // grid max vs continuum max
    // derivative seminorm matches the spectral derivative of the Gaussian
    const double d0 = schwartz_seminorm(T, 0, {1, 0}, 0);
    double ref = 0.0;
    PhaseFunction df = derivative(f, 0);
    for (int i = 0; i < N; ++i)
        for (int j = 0; j < N; ++j) ref = std::max(ref, std::abs(df(i, j)));
    CHECK(std::abs(d0 - ref) < 1e-10);
}

TEST_CASE("deformed tensor product: slot route vs factorized route") {
    SplitMix rng(59);
    const int N = 32;
    PhaseGrid g = make_selfdual_grid(N);
    ActionSpec spec = random_inner_spec(2, rng);
    std::vector<TensorTerm> Ft, Gt;
    for (int t = 0; t < 2; ++t) {
        Ft.emplace_back(hg_symbol(g, rng, 1.2, 0.25), random_inner_element(spec, rng));
        Gt.emplace_back(hg_symbol(g, rng, 1.2, 0.25), random_inner_element(spec, rng));
    }
    CPElement F = cp_from_tensors(g, spec, Ft);
    CPElement G = cp_from_tensors(g, spec, Gt);
    CPElement dense = square_product(F, G);
    CPElement fact = square_product_tensors(g, spec, Ft, Gt);
    CHECK(cp_dist(dense, fact) / std::max(cp_max_abs(dense), 1e-30) < 1e-10);
    // pointwise star is the right involution for the deformed tensor algebra
    CPElement lhs = cp_star_pointwise(dense);
    CPElement rhs = square_product(cp_star_pointwise(G), cp_star_pointwise(F));
    CHECK(cp_dist(lhs, rhs) / std::max(cp_max_abs(lhs), 1e-30) < 1e-8);
}

TEST_CASE("grid guard") {
    CHECK_THROWS(check_cp_grid(make_selfdual_grid(4)));
}

} // TEST_SUITE
