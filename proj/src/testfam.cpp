#include "rieffel/testfam.hpp"

#include <algorithm>

namespace rieffel {

PhaseFunction hg_symbol(const PhaseGrid& g, SplitMix& rng, double sigma, double mod) {
    cd c[6];
    for (auto& v : c) v = rng.cnormal();
    const double t0 = rng.uniform(-mod, mod), t1 = rng.uniform(-mod, mod);
    PhaseFunction a(g.N, g.N);
    for (int i = 0; i < g.N; ++i)
        for (int j = 0; j < g.N; ++j) {
            const double x = g.node(i), y = g.node(j);
            const cd poly = c[0] + c[1] * x + c[2] * y + c[3] * x * y +
                            c[4] * (x * x - 1.0) + c[5] * (y * y - 1.0);
            a(i, j) = poly * std::exp(-(x * x + y * y) / (2.0 * sigma * sigma)) *
                      std::exp(cd(0.0, t0 * x + t1 * y));
        }
    return a;
}

PhaseFunction gauss_symbol(const PhaseGrid& g, double cx, double cxi, double tx,
                           double txi, double sigma) {
    PhaseFunction a(g.N, g.N);
    for (int i = 0; i < g.N; ++i)
        for (int j = 0; j < g.N; ++j) {
            const double x = g.node(i) - cx, y = g.node(j) - cxi;
            a(i, j) = std::exp(-(x * x + y * y) / (2.0 * sigma * sigma)) *
                      std::exp(cd(0.0, tx * g.node(i) + txi * g.node(j)));
        }
    return a;
}

Eigen::VectorXcd gauss_state(const PhaseGrid& g, double c1) {
    Eigen::VectorXcd u(g.N);
    for (int i = 0; i < g.N; ++i) {
        const double y = g.node(i);
        u(i) = (1.0 + c1 * y) * std::exp(-0.5 * y * y);
    }
    u /= std::sqrt(g.h) * u.norm();
    return u;
}

Eigen::MatrixXcd random_matrix(int d, SplitMix& rng) {
    Eigen::MatrixXcd m(d, d);
    for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j) m(i, j) = rng.cnormal();
    return m;
}

ActionSpec random_inner_spec(int d, SplitMix& rng) {
    Eigen::VectorXd H0(d), H1(d);
    for (int i = 0; i < d; ++i) H0(i) = rng.uniform(-0.6, 0.6);
    for (int i = 0; i < d; ++i) H1(i) = rng.uniform(-0.6, 0.6);
    std::sort(H0.data(), H0.data() + d);
    std::sort(H1.data(), H1.data() + d);
    return make_inner_spec(H0, H1);
}

AlgebraElement random_inner_element(const ActionSpec& spec, SplitMix& rng) {
    AlgebraElement f = algebra_zero(spec);
    f.mat = random_matrix(spec.d(), rng);
    return f;
}

} // namespace rieffel
