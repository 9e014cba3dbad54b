#include "rieffel/weyl.hpp"
#include "rieffel/fourier.hpp"

#include <Eigen/SVD>

namespace rieffel {

double state_norm(const Eigen::VectorXcd& u, const PhaseGrid& g) {
    return std::sqrt(g.h) * u.norm();
}

Eigen::MatrixXcd pi_rep(double x, double xi, int N) {
    PhaseGrid g = make_selfdual_grid(N);
    // shift u(y) -> u(y+x): spectral multiplier e^{+i k x}
    Eigen::VectorXcd sh(N), ph(N);
    for (int m = 0; m < N; ++m) {
        sh(m) = std::exp(cd(0.0, g.node(m) * x));
        ph(m) = std::exp(cd(0.0, g.node(m) * xi + 0.5 * x * xi));
    }
    Eigen::MatrixXcd Tr = dft_plus(N) * sh.asDiagonal() * dft_minus(N);
    return ph.asDiagonal() * Tr;
}

Eigen::MatrixXcd schrodinger(double x, double xi, double t, int N) {
    return std::exp(cd(0.0, t)) * pi_rep(x, xi, N);
}

PhaseFunction wigner(const Eigen::VectorXcd& u, const Eigen::VectorXcd& v) {
    const int N = int(u.size());
    PhaseGrid g = make_selfdual_grid(N);
    // B(i,j) = h sum_y u(y) conj(e^{i(u_y xi_j + x_i xi_j / 2)} v(y + x_i))
    //        = h e^{-i x_i xi_j / 2} sum_y [u(y) conj(tv_i(y))] e^{-i u_y xi_j}
    Eigen::MatrixXcd B(N, N);
    const Eigen::MatrixXcd& Em = dft_minus(N);   // e^{-i u u'}/sqrt(N)
    const double s = std::sqrt(double(N));
    for (int i = 0; i < N; ++i) {
        const double x = g.node(i);
        Eigen::VectorXcd tv = translate1d(v, x);             // v(y + x)
        Eigen::VectorXcd wv = u.cwiseProduct(tv.conjugate());
        Eigen::RowVectorXcd row = g.h * s * (wv.transpose() * Em);
        for (int j = 0; j < N; ++j)
            B(i, j) = row(j) * std::exp(cd(0.0, -0.5 * x * g.node(j)));
    }
    return symp_fourier(B);
}

Eigen::MatrixXcd weyl_op(const PhaseFunction& a) {
    const int N = int(a.rows());
    PhaseGrid g = make_selfdual_grid(N);
    const int Nf = 2 * N;
    Eigen::MatrixXcd Af = upsample2(a);          // midpoints and fine xi nodes
    // phase rows e^{-i t h xi'_l} for t = j - k
    Eigen::MatrixXcd phase(2 * N - 1, Nf);
    for (int t = -(N - 1); t <= N - 1; ++t)
        for (int l = 0; l < Nf; ++l)
            phase(t + N - 1, l) = std::exp(cd(0.0, -t * g.h * (l - N) * g.h / 2.0));
    Eigen::MatrixXcd T(N, N);
    for (int j = 0; j < N; ++j)
        for (int k = 0; k < N; ++k)
            T(j, k) = phase.row(j - k + N - 1).cwiseProduct(Af.row(j + k)).sum() / double(Nf);
    return T;
}

PhaseFunction weyl_symbol(const Eigen::MatrixXcd& T) {
    const int N = int(T.rows());
    PhaseGrid g = make_selfdual_grid(N);
    const int Nf = 2 * N;
    Eigen::MatrixXcd phase(2 * N - 1, Nf);       // e^{+i t h xi'_l}
    for (int t = -(N - 1); t <= N - 1; ++t)
        for (int l = 0; l < Nf; ++l)
            phase(t + N - 1, l) = std::exp(cd(0.0, t * g.h * (l - N) * g.h / 2.0));
    Eigen::MatrixXcd Bf = Eigen::MatrixXcd::Zero(Nf, Nf);
    for (int s = 0; s <= 2 * N - 2; ++s) {
        const int jlo = std::max(0, s - (N - 1)), jhi = std::min(N - 1, s);
        for (int j = jlo; j <= jhi; ++j) {
            const int k = s - j;
            Bf.row(s) += 2.0 * T(j, k) * phase.row(j - k + N - 1);
        }
    }
    return downsample2(Bf);
}

double hs_norm(const Eigen::MatrixXcd& T) { return T.norm(); }

double op_norm(const Eigen::MatrixXcd& T) {
    return T.jacobiSvd().singularValues()(0);
}

double rieffel_norm_estimate(const PhaseFunction& a) {
    return op_norm(weyl_op(a));
}

double l2_norm(const PhaseFunction& a) {
    const int N = int(a.rows());
    PhaseGrid g = make_selfdual_grid(N);
    return std::sqrt(g.w) * a.norm();
}

} // namespace rieffel
