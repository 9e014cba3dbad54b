#include "rieffel/fourier.hpp"

#include <map>
#include <mutex>

namespace rieffel {

namespace {

std::map<int, Eigen::MatrixXcd>& cache(int which) {
    static std::map<int, Eigen::MatrixXcd> c[3];
    return c[which];
}

Eigen::MatrixXcd build_dft_minus(int N) {
    PhaseGrid g = make_selfdual_grid(N);
    Eigen::MatrixXcd Em(N, N);
    const double s = 1.0 / std::sqrt(double(N));
    for (int m = 0; m < N; ++m)
        for (int j = 0; j < N; ++j)
            Em(m, j) = std::exp(cd(0.0, -g.node(m) * g.node(j))) * s;
    return Em;
}

Eigen::MatrixXcd build_fine_synthesis(int N) {
    PhaseGrid g = make_selfdual_grid(N);
    Eigen::MatrixXcd Sf(2 * N, N);
    const double hf = g.h / 2.0;
    const double s = 1.0 / std::sqrt(double(N));
    for (int p = 0; p < 2 * N; ++p) {
        const double uf = (p - N) * hf;
        for (int m = 0; m < N; ++m)
            Sf(p, m) = std::exp(cd(0.0, uf * g.node(m))) * s;
    }
    return Sf;
}

} // namespace

const Eigen::MatrixXcd& dft_minus(int N) {
    auto& c = cache(0);
    auto it = c.find(N);
    if (it == c.end()) it = c.emplace(N, build_dft_minus(N)).first;
    return it->second;
}

const Eigen::MatrixXcd& dft_plus(int N) {
    auto& c = cache(1);
    auto it = c.find(N);
    if (it == c.end()) it = c.emplace(N, dft_minus(N).conjugate()).first;
    return it->second;
}

const Eigen::MatrixXcd& fine_synthesis(int N) {
    auto& c = cache(2);
    auto it = c.find(N);
    if (it == c.end()) it = c.emplace(N, build_fine_synthesis(N)).first;
    return it->second;
}

PhaseFunction symp_fourier(const PhaseFunction& a) {
    const int N = int(a.rows());
    return dft_plus(N) * (dft_minus(N) * a).transpose();
}

PhaseFunction upsample2(const PhaseFunction& a) {
    const int N = int(a.rows());
    const Eigen::MatrixXcd& Em = dft_minus(N);
    const Eigen::MatrixXcd& Sf = fine_synthesis(N);
    // coefficients along each axis, then fine synthesis
    return Sf * (Em * a) * (Sf * Em.transpose()).transpose();
}

PhaseFunction downsample2(const PhaseFunction& af) {
    const int N = int(af.rows()) / 2;
    const Eigen::MatrixXcd& Ep = dft_plus(N);
    const Eigen::MatrixXcd& Sf = fine_synthesis(N);
    // adjoint of upsample2 with per-axis weight ratio 1/2
    Eigen::MatrixXcd c = 0.25 * Sf.adjoint() * af * Sf.conjugate();
    return Ep * c * Ep.transpose();
}

cd eval_at(const PhaseFunction& a, double x, double y) {
    const int N = int(a.rows());
    PhaseGrid g = make_selfdual_grid(N);
    const Eigen::MatrixXcd& Em = dft_minus(N);
    Eigen::MatrixXcd C = Em * a * Em.transpose();
    Eigen::VectorXcd ex(N), ey(N);
    for (int m = 0; m < N; ++m) {
        ex(m) = std::exp(cd(0.0, g.node(m) * x));
        ey(m) = std::exp(cd(0.0, g.node(m) * y));
    }
    return (ex.transpose() * C * ey)(0) / double(N);
}

Eigen::VectorXcd translate1d(const Eigen::VectorXcd& v, double t) {
    const int N = int(v.size());
    PhaseGrid g = make_selfdual_grid(N);
    Eigen::VectorXcd c = dft_minus(N) * v;
    for (int m = 0; m < N; ++m) c(m) *= std::exp(cd(0.0, g.node(m) * t));
    return dft_plus(N) * c;
}

PhaseFunction translate(const PhaseFunction& a, double t0, double t1) {
    const int N = int(a.rows());
    PhaseGrid g = make_selfdual_grid(N);
    Eigen::MatrixXcd C = dft_minus(N) * a * dft_minus(N).transpose();
    for (int m = 0; m < N; ++m)
        for (int l = 0; l < N; ++l)
            C(m, l) *= std::exp(cd(0.0, g.node(m) * t0 + g.node(l) * t1));
    return dft_plus(N) * C * dft_plus(N).transpose();
}

PhaseFunction derivative(const PhaseFunction& a, int axis) {
    const int N = int(a.rows());
    PhaseGrid g = make_selfdual_grid(N);
    if (axis == 0) {
        Eigen::MatrixXcd c = dft_minus(N) * a;
        for (int m = 0; m < N; ++m) c.row(m) *= cd(0.0, g.node(m));
        return dft_plus(N) * c;
    }
    Eigen::MatrixXcd c = a * dft_minus(N).transpose();
    for (int l = 0; l < N; ++l) c.col(l) *= cd(0.0, g.node(l));
    return c * dft_plus(N).transpose();
}

double bandlimit_tail(const PhaseFunction& a) {
    const int N = int(a.rows());
    Eigen::MatrixXcd C = dft_minus(N) * a * dft_minus(N).transpose();
    double edge = 0.0;
    for (int j = 0; j < N; ++j) {
        edge = std::max(edge, std::abs(C(0, j)));
        edge = std::max(edge, std::abs(C(N - 1, j)));
        edge = std::max(edge, std::abs(C(j, 0)));
        edge = std::max(edge, std::abs(C(j, N - 1)));
    }
    double peak = C.cwiseAbs().maxCoeff();
    return peak > 0.0 ? edge / peak : 0.0;
}

} // namespace rieffel
