#include "rieffel/deform.hpp"
#include "rieffel/fourier.hpp"
#include "rieffel/weyl.hpp"

#include <stdexcept>

namespace rieffel {

namespace {

cd kappa(const Eigen::Vector2d& X, const Eigen::Vector2d& Y) {
    return std::exp(cd(0.0, -0.5 * (Y(0) * X(1) - X(0) * Y(1))));
}

double factorial(int k) {
    double r = 1.0;
    for (int i = 2; i <= k; ++i) r *= i;
    return r;
}

AlgebraElement spectral_exact(const AlgebraElement& f, const AlgebraElement& g) {
    AlgebraElement out = algebra_zero(f.spec);
    if (f.spec.backend == Backend::InnerSpectral) {
        const int d = f.spec.d();
        const Eigen::VectorXd &H0 = f.spec.H0, &H1 = f.spec.H1;
        for (int j = 0; j < d; ++j)
            for (int k = 0; k < d; ++k) {
                if (f.mat(j, k) == cd(0.0)) continue;
                const Eigen::Vector2d p(H0(j) - H0(k), H1(j) - H1(k));
                for (int m = 0; m < d; ++m) {
                    if (g.mat(k, m) == cd(0.0)) continue;
                    const Eigen::Vector2d q(H0(k) - H0(m), H1(k) - H1(m));
                    out.mat(j, m) += kappa(p, q) * f.mat(j, k) * g.mat(k, m);
                }
            }
    } else {   // TorusModes
        for (const auto& [k, a] : f.modes)
            for (const auto& [l, b] : g.modes) {
                const Eigen::Vector2d p{double(k[0]), double(k[1])};
                const Eigen::Vector2d q{double(l[0]), double(l[1])};
                out.modes[{k[0] + l[0], k[1] + l[1]}] += kappa(p, q) * a * b;
            }
    }
    return out;
}

} // namespace

PhaseFunction moyal_grid(const PhaseFunction& f, const PhaseFunction& g) {
    const int N = int(f.rows());
    PhaseGrid gr = make_selfdual_grid(N);
    const int Nf = 2 * N;
    PhaseFunction Fg = symp_fourier(g);
    PhaseFunction ff = upsample2(f);
    PhaseFunction out = PhaseFunction::Zero(N, N);
    Eigen::VectorXcd col(N);
    Eigen::RowVectorXcd row(N);
    for (int p = 0; p < N; ++p) {
        for (int q = 0; q < N; ++q) {
            const cd c = gr.w * Fg(p, q);
            if (std::abs(c) < 1e-300) continue;
            const double ux = gr.node(p), uxi = gr.node(q);
            for (int a = 0; a < N; ++a)
                col(a) = std::exp(cd(0.0, gr.node(a) * uxi));
            for (int b = 0; b < N; ++b)
                row(b) = std::exp(cd(0.0, -ux * gr.node(b)));
            for (int a = 0; a < N; ++a) {
                // x_a - u_p/2 sits at fine index 2a - p + N/2 (mod 2N)
                const int ia = ((2 * a - p) + N / 2 + Nf) % Nf;
                for (int b = 0; b < N; ++b) {
                    const int ib = ((2 * b - q) + N / 2 + Nf) % Nf;
                    out(a, b) += c * col(a) * row(b) * ff(ia, ib);
                }
            }
        }
    }
    return out;
}

PhaseFunction moyal_brute(const PhaseFunction& f, const PhaseFunction& g) {
    const int N = int(f.rows());
    PhaseGrid gr = make_selfdual_grid(N);
    const int Nf = 2 * N;
    const double hf = gr.h / 2.0, wf = hf * hf / (2.0 * M_PI);
    PhaseFunction ff = upsample2(f), gf = upsample2(g);
    Eigen::MatrixXcd P(Nf, Nf);
    for (int p = 0; p < Nf; ++p)
        for (int q = 0; q < Nf; ++q)
            P(p, q) = std::exp(cd(0.0, 2.0 * (p - N) * hf * (q - N) * hf));
    PhaseFunction out(N, N);
    Eigen::MatrixXcd FY(Nf, Nf), GZ(Nf, Nf);
    std::vector<int> sa(Nf), sb(Nf);
    for (int a = 0; a < N; ++a) {
        for (int i = 0; i < Nf; ++i) sa[i] = ((2 * a - i) % Nf + Nf + N) % Nf;
        for (int b = 0; b < N; ++b) {
            for (int i = 0; i < Nf; ++i) sb[i] = ((2 * b - i) % Nf + Nf + N) % Nf;
            for (int p = 0; p < Nf; ++p)
                for (int q = 0; q < Nf; ++q) {
                    FY(p, q) = ff(sa[p], sb[q]);
                    GZ(p, q) = gf(sa[p], sb[q]);
                }
            out(a, b) = 4.0 * wf * wf *
                        P.conjugate().cwiseProduct(FY * P * GZ).sum();
        }
    }
    return out;
}

PhaseFunction moyal_op(const PhaseFunction& f, const PhaseFunction& g) {
    return weyl_symbol(weyl_op(f) * weyl_op(g));
}

AlgebraElement deform_product(const AlgebraElement& f, const AlgebraElement& g,
                              Strategy strategy) {
    if (!(f.spec == g.spec))
        throw std::invalid_argument("deform_product: spec mismatch");
    const bool spectral = f.spec.backend != Backend::Translation;
    if (spectral != (strategy == Strategy::SpectralExact))
        throw std::invalid_argument("deform_product: strategy unsupported for backend");
    if (spectral) return spectral_exact(f, g);
    AlgebraElement out = f;
    switch (strategy) {
        case Strategy::GridReduced: out.mat = moyal_grid(f.mat, g.mat); break;
        case Strategy::OperatorOracle: out.mat = moyal_op(f.mat, g.mat); break;
        case Strategy::BruteQuadrature: out.mat = moyal_brute(f.mat, g.mat); break;
        default: break;
    }
    return out;
}

namespace {

// One 2D axis pair of the defining integral, regularized by e^{-eps(y^2+z^2)}:
//   S = (dy dz / pi) sum_{y,z} e^{i(a y + b z + c y z)} e^{-eps(y^2+z^2)}
// The z-sum concentrates the y-mass near y* = -b/c, so the outer sum is
// windowed there and the z-step only needs to resolve |c y + b| on that
// window.
cd pair_quad(double a, double b, double c, double eps, double Lbox) {
    const double ystar = -b / c;
    const double wd = 45.0 * std::sqrt(eps) / std::abs(c) + 3.0;
    const double mumax = std::abs(c) * (std::abs(ystar) + wd) + std::abs(b) + std::abs(a) + 2.0;
    const double dz = M_PI / (1.3 * mumax);
    const double dy = std::min(dz, std::sqrt(eps) / std::abs(c) / 6.0);
    const long jlo = long(std::ceil(-wd / dy)), jhi = long(std::floor(wd / dy));
    const long klo = long(std::ceil(-Lbox / dz)), khi = long(std::floor(Lbox / dz));
    std::vector<double> ys;
    ys.reserve(jhi - jlo + 1);
    for (long j = jlo; j <= jhi; ++j) {
        const double y = ystar + j * dy;
        if (std::abs(y) <= Lbox) ys.push_back(y);
    }
    cd total = 0.0;
    for (double y : ys) {
        cd inner = 0.0;
        for (long k = klo; k <= khi; ++k) {
            const double z = k * dz;
            inner += std::exp(cd(-eps * z * z, b * z + c * y * z));
        }
        total += std::exp(cd(-eps * y * y, a * y)) * inner;
    }
    return dy * dz / M_PI * total;
}

} // namespace

cd phase_law_quadrature(const Eigen::Vector2d& p, const Eigen::Vector2d& q, int Nq) {
    const double eps = 1.2 / double(Nq) / double(Nq);
    cd out = 1.0;
    const double abc[2][3] = {{p(0), q(1), -2.0}, {p(1), q(0), 2.0}};
    for (const auto& t : abc) {
        cd v1 = pair_quad(t[0], t[1], t[2], eps, std::sqrt(21.0 / eps));
        cd v2 = pair_quad(t[0], t[1], t[2], eps / 2.0, std::sqrt(42.0 / eps));
        out *= 2.0 * v2 - v1;
    }
    return out;
}

double bc_seminorm(int k, const AlgebraElement& f) {
    double s = 0.0;
    for (int a = 0; a <= k; ++a)
        for (int b = 0; a + b <= k; ++b)
            s += algebra_norm(derivation({a, b}, f)) / (factorial(a) * factorial(b));
    return s;
}

} // namespace rieffel
