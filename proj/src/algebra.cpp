#include "rieffel/algebra.hpp"
#include "rieffel/fourier.hpp"

#include <Eigen/SVD>
#include <stdexcept>

namespace rieffel {

bool ActionSpec::operator==(const ActionSpec& o) const {
    if (backend != o.backend) return false;
    switch (backend) {
        case Backend::Translation: return grid == o.grid;
        case Backend::InnerSpectral:
            return H0.size() == o.H0.size() && H0 == o.H0 && H1 == o.H1;
        case Backend::TorusModes: return mode_radius == o.mode_radius;
    }
    return false;
}

ActionSpec make_translation_spec(const PhaseGrid& g) {
    ActionSpec s;
    s.backend = Backend::Translation;
    s.grid = g;
    return s;
}

ActionSpec make_inner_spec(const Eigen::VectorXd& H0, const Eigen::VectorXd& H1) {
    if (H0.size() != H1.size() || H0.size() == 0)
        throw std::invalid_argument("make_inner_spec: generator size mismatch");
    ActionSpec s;
    s.backend = Backend::InnerSpectral;
    s.H0 = H0;
    s.H1 = H1;
    return s;
}

ActionSpec make_torus_spec(int radius) {
    if (radius < 0) throw std::invalid_argument("make_torus_spec: negative radius");
    ActionSpec s;
    s.backend = Backend::TorusModes;
    s.mode_radius = radius;
    return s;
}

AlgebraElement algebra_zero(const ActionSpec& spec) {
    AlgebraElement f;
    f.spec = spec;
    if (spec.backend == Backend::Translation)
        f.mat = Eigen::MatrixXcd::Zero(spec.grid.N, spec.grid.N);
    else if (spec.backend == Backend::InnerSpectral)
        f.mat = Eigen::MatrixXcd::Zero(spec.d(), spec.d());
    return f;
}

AlgebraElement algebra_unit(const ActionSpec& spec) {
    AlgebraElement f = algebra_zero(spec);
    if (spec.backend == Backend::Translation)
        f.mat.setOnes();
    else if (spec.backend == Backend::InnerSpectral)
        f.mat.setIdentity();
    else
        f.modes[{0, 0}] = 1.0;
    return f;
}

AlgebraElement act(const Eigen::Vector2d& X, const AlgebraElement& f) {
    AlgebraElement out = f;
    switch (f.spec.backend) {
        case Backend::Translation:
            // (Theta_X f)(y) = f(y - X)
            out.mat = translate(f.mat, -X(0), -X(1));
            break;
        case Backend::InnerSpectral: {
            const int d = f.spec.d();
            Eigen::VectorXcd ph(d);
            for (int j = 0; j < d; ++j)
                ph(j) = std::exp(cd(0.0, X(0) * f.spec.H0(j) + X(1) * f.spec.H1(j)));
            out.mat = ph.asDiagonal() * f.mat * ph.conjugate().asDiagonal();
            break;
        }
        case Backend::TorusModes:
            for (auto& [k, c] : out.modes)
                c *= std::exp(cd(0.0, k[0] * X(0) + k[1] * X(1)));
            break;
    }
    return out;
}

namespace {

AlgebraElement delta(int axis, const AlgebraElement& f) {
    AlgebraElement out = f;
    switch (f.spec.backend) {
        case Backend::Translation:
            out.mat = -derivative(f.mat, axis);
            break;
        case Backend::InnerSpectral: {
            const Eigen::VectorXd& H = axis == 0 ? f.spec.H0 : f.spec.H1;
            out.mat = cd(0.0, 1.0) * (H.asDiagonal() * f.mat - f.mat * H.asDiagonal());
            break;
        }
        case Backend::TorusModes:
            for (auto& [k, c] : out.modes) c *= cd(0.0, double(k[axis]));
            break;
    }
    return out;
}

double factorial(int k) {
    double r = 1.0;
    for (int i = 2; i <= k; ++i) r *= i;
    return r;
}

// Finite-section matrix of twisted translation by f on l^2(Z^2), over the
// box |k|_inf <= r:  L_f e_m = sum_k c_k kappa(k,m) e_{k+m}.
Eigen::MatrixXcd torus_section(const AlgebraElement& f, int r) {
    const int side = 2 * r + 1;
    const int dim = side * side;
    auto idx = [&](int k0, int k1) { return (k0 + r) * side + (k1 + r); };
    Eigen::MatrixXcd L = Eigen::MatrixXcd::Zero(dim, dim);
    for (int m0 = -r; m0 <= r; ++m0)
        for (int m1 = -r; m1 <= r; ++m1)
            for (const auto& [k, c] : f.modes) {
                const int t0 = k[0] + m0, t1 = k[1] + m1;
                if (std::abs(t0) > r || std::abs(t1) > r) continue;
                const cd kap = std::exp(cd(0.0, -0.5 * (m0 * k[1] - k[0] * m1)));
                L(idx(t0, t1), idx(m0, m1)) += c * kap;
            }
    return L;
}

int torus_support_radius(const AlgebraElement& f) {
    int r = 0;
    for (const auto& [k, c] : f.modes)
        if (std::abs(c) > 0.0)
            r = std::max({r, std::abs(k[0]), std::abs(k[1])});
    return r;
}

} // namespace

AlgebraElement derivation(const std::array<int, 2>& alpha, const AlgebraElement& f) {
    AlgebraElement out = f;
    for (int i = 0; i < alpha[0]; ++i) out = delta(0, out);
    for (int i = 0; i < alpha[1]; ++i) out = delta(1, out);
    return out;
}

AlgebraElement mul(const AlgebraElement& f, const AlgebraElement& g) {
    if (!(f.spec == g.spec)) throw std::invalid_argument("mul: spec mismatch");
    AlgebraElement out = algebra_zero(f.spec);
    switch (f.spec.backend) {
        case Backend::Translation:
            out.mat = f.mat.cwiseProduct(g.mat);
            break;
        case Backend::InnerSpectral:
            out.mat = f.mat * g.mat;
            break;
        case Backend::TorusModes:
            for (const auto& [k, a] : f.modes)
                for (const auto& [l, b] : g.modes)
                    out.modes[{k[0] + l[0], k[1] + l[1]}] += a * b;
            break;
    }
    return out;
}

AlgebraElement adjoint(const AlgebraElement& f) {
    AlgebraElement out = f;
    switch (f.spec.backend) {
        case Backend::Translation:
            out.mat = f.mat.conjugate();
            break;
        case Backend::InnerSpectral:
            out.mat = f.mat.adjoint();
            break;
        case Backend::TorusModes:
            out.modes.clear();
            for (const auto& [k, c] : f.modes)
                out.modes[{-k[0], -k[1]}] = std::conj(c);
            break;
    }
    return out;
}

AlgebraElement lincomb(cd cf, const AlgebraElement& f, cd cg, const AlgebraElement& g) {
    if (!(f.spec == g.spec)) throw std::invalid_argument("lincomb: spec mismatch");
    AlgebraElement out = f;
    if (f.spec.backend == Backend::TorusModes) {
        out.modes.clear();
        for (const auto& [k, c] : f.modes) out.modes[k] += cf * c;
        for (const auto& [k, c] : g.modes) out.modes[k] += cg * c;
    } else {
        out.mat = cf * f.mat + cg * g.mat;
    }
    return out;
}

AlgebraElement scale(cd c, const AlgebraElement& f) {
    AlgebraElement out = f;
    if (f.spec.backend == Backend::TorusModes)
        for (auto& [k, v] : out.modes) v *= c;
    else
        out.mat *= c;
    return out;
}

double algebra_norm(const AlgebraElement& f) {
    switch (f.spec.backend) {
        case Backend::Translation:
            return f.mat.cwiseAbs().maxCoeff();
        case Backend::InnerSpectral:
            return f.mat.jacobiSvd().singularValues()(0);
        case Backend::TorusModes: {
            if (f.modes.empty()) return 0.0;
            const int r = torus_support_radius(f) + 1;   // one shell of padding
            Eigen::MatrixXcd L = torus_section(f, r);
            return L.jacobiSvd().singularValues()(0);
        }
    }
    return 0.0;
}

double torus_norm_gap(const AlgebraElement& f) {
    if (f.spec.backend != Backend::TorusModes || f.modes.empty()) return 0.0;
    const int r = torus_support_radius(f) + 1;
    const double n1 = torus_section(f, r).jacobiSvd().singularValues()(0);
    const double n2 = torus_section(f, r + 1).jacobiSvd().singularValues()(0);
    return std::abs(n2 - n1);
}

double seminorm(int k, const AlgebraElement& f) {
    double s = 0.0;
    for (int a = 0; a <= k; ++a) {
        const int b = k - a;
        s += algebra_norm(derivation({a, b}, f)) / (factorial(a) * factorial(b));
    }
    return s;
}

std::vector<HomogeneousComponent> homogeneous_decompose(const AlgebraElement& f) {
    std::vector<HomogeneousComponent> out;
    if (f.spec.backend == Backend::InnerSpectral) {
        const int d = f.spec.d();
        for (int j = 0; j < d; ++j)
            for (int k = 0; k < d; ++k) {
                if (f.mat(j, k) == cd(0.0)) continue;
                HomogeneousComponent h;
                h.p = Eigen::Vector2d(f.spec.H0(j) - f.spec.H0(k),
                                      f.spec.H1(j) - f.spec.H1(k));
                h.part = algebra_zero(f.spec);
                h.part.mat(j, k) = f.mat(j, k);
                out.push_back(std::move(h));
            }
    } else if (f.spec.backend == Backend::TorusModes) {
        for (const auto& [k, c] : f.modes) {
            if (c == cd(0.0)) continue;
            HomogeneousComponent h;
            h.p = Eigen::Vector2d(double(k[0]), double(k[1]));
            h.part = algebra_zero(f.spec);
            h.part.modes[k] = c;
            out.push_back(std::move(h));
        }
    } else {
        throw std::invalid_argument(
            "homogeneous_decompose: Translation backend has a continuous spectrum");
    }
    return out;
}

double bandlimit_violation(const AlgebraElement& f) {
    if (f.spec.backend != Backend::Translation) return 0.0;
    return bandlimit_tail(f.mat);
}

double algebra_max_abs(const AlgebraElement& f) {
    if (f.spec.backend == Backend::TorusModes) {
        double m = 0.0;
        for (const auto& [k, c] : f.modes) m = std::max(m, std::abs(c));
        return m;
    }
    return f.mat.size() ? f.mat.cwiseAbs().maxCoeff() : 0.0;
}

double algebra_dist(const AlgebraElement& f, const AlgebraElement& g) {
    return algebra_max_abs(lincomb(1.0, f, -1.0, g));
}

} // namespace rieffel
