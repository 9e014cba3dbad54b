#include "rieffel/canonical.hpp"
#include "rieffel/fourier.hpp"

#include <stdexcept>

namespace rieffel {

CPElement partial_fourier(const CPElement& F) {
    CPElement out = cp_zero(F.grid, F.spec);
    for (auto& c : cp_channels(F)) {
        c.field = symp_fourier(c.field);
        cp_accumulate_channel(out, c);
    }
    return out;
}

CPElement canonical_m(const CPElement& F) {
    return partial_fourier(c_alpha(1.0, F));
}

CPElement canonical_m_inv(const CPElement& G) {
    return c_alpha(-1.0, partial_fourier(G));
}

CPElement canonical_m_prime(const CPElement& F) {
    return c_alpha(0.5, canonical_m(F));
}

namespace {

CPElement m_direct(const CPElement& F, bool prime) {
    const int N = F.grid.N;
    const PhaseGrid& g = F.grid;
    CPElement out = cp_zero(g, F.spec);
    for (int a = 0; a < N; ++a)
        for (int b = 0; b < N; ++b) {
            const double x = g.node(a), xi = g.node(b);
            AlgebraElement acc = algebra_zero(F.spec);
            for (int p = 0; p < N; ++p)
                for (int q = 0; q < N; ++q) {
                    const double y0 = g.node(p), y1 = g.node(q);
                    // e^{-i[[X,Y]]} with [[X,Y]] = y0 xi - x y1
                    const cd ph = std::exp(cd(0.0, -(y0 * xi - x * y1)));
                    Eigen::Vector2d T(y0, y1);
                    if (prime) T += Eigen::Vector2d(x / 2.0, xi / 2.0);
                    acc = lincomb(1.0, acc, ph, act(T, F.at(p, q)));
                }
            out.at(a, b) = scale(g.w, acc);
        }
    return out;
}

} // namespace

CPElement canonical_m_direct(const CPElement& F) { return m_direct(F, false); }
CPElement canonical_m_prime_direct(const CPElement& F) { return m_direct(F, true); }

CPElement dual_action(const Eigen::Vector2d& Z, const CPElement& G) {
    CPElement out = G;
    const int N = G.grid.N;
    for (int i = 0; i < N; ++i)
        for (int j = 0; j < N; ++j) {
            // e^{i[[X,Z]]} with X = (node(i), node(j))
            const cd ph = std::exp(
                cd(0.0, Z(0) * G.grid.node(j) - G.grid.node(i) * Z(1)));
            out.at(i, j) = scale(ph, G.at(i, j));
        }
    return out;
}

CPElement xi_translate_index(const CPElement& F, int di, int dj) {
    CPElement out = F;
    const int N = F.grid.N;
    for (int i = 0; i < N; ++i)
        for (int j = 0; j < N; ++j)
            out.at(i, j) = F.at(((i + di) % N + N) % N, ((j + dj) % N + N) % N);
    return out;
}

AlgebraElement apply_morphism(const EquivariantMorphism& R, const AlgebraElement& f) {
    switch (R.rule) {
        case EquivariantMorphism::Rule::Identity:
            return f;
        case EquivariantMorphism::Rule::TorusTranslationPhase: {
            AlgebraElement out = f;
            if (f.spec.backend == Backend::TorusModes) {
                for (auto& [k, c] : out.modes)
                    c *= std::exp(cd(0.0, k[0] * R.sigma0(0) + k[1] * R.sigma0(1)));
            } else if (f.spec.backend == Backend::Translation) {
                out.mat = translate(f.mat, -R.sigma0(0), -R.sigma0(1));
            } else {
                throw std::invalid_argument("TorusTranslationPhase: commutative backends only");
            }
            return out;
        }
        case EquivariantMorphism::Rule::DiagonalConjugation: {
            if (f.spec.backend != Backend::InnerSpectral)
                throw std::invalid_argument("DiagonalConjugation: InnerSpectral only");
            AlgebraElement out = f;
            out.mat = R.u.asDiagonal() * f.mat * R.u.conjugate().asDiagonal();
            return out;
        }
    }
    return f;
}

CPElement lift_morphism(const EquivariantMorphism& R, const CPElement& F) {
    CPElement out = F;
    for (auto& v : out.values) v = apply_morphism(R, v);
    return out;
}

namespace {

// Fiber inner product for the invariant measure / state.  The bilinear
// variant is the same integral without conjugation, which for TorusModes
// pairs k with -k and for InnerSpectral is the normalized trace of fg.
cd fiber_pairing(const AlgebraElement& f, const AlgebraElement& g, bool sesqui) {
    cd s = 0.0;
    switch (f.spec.backend) {
        case Backend::Translation: {
            if (sesqui)
                s = (f.mat.conjugate().cwiseProduct(g.mat)).sum();
            else
                s = (f.mat.cwiseProduct(g.mat)).sum();
            s *= f.spec.grid.w;
            break;
        }
        case Backend::InnerSpectral: {
            if (sesqui)
                s = (f.mat.conjugate().cwiseProduct(g.mat)).sum();   // tr(f* g)
            else
                s = (f.mat * g.mat).trace();
            s /= double(f.spec.d());   // normalized trace as the invariant state
            break;
        }
        case Backend::TorusModes:
            for (const auto& [k, c] : f.modes) {
                auto it = sesqui ? g.modes.find(k)
                                 : g.modes.find(ModeKey{-k[0], -k[1]});
                if (it != g.modes.end())
                    s += (sesqui ? std::conj(c) : c) * it->second;
            }
            break;
    }
    return s;
}

cd pairing_impl(const CPElement& F, const CPElement& G, bool sesqui) {
    if (!(F.grid == G.grid) || !(F.spec == G.spec))
        throw std::invalid_argument("pairing: mixed carriers");
    cd s = 0.0;
    for (size_t i = 0; i < F.values.size(); ++i)
        s += fiber_pairing(F.values[i], G.values[i], sesqui);
    return F.grid.w * s;
}

} // namespace

cd orthogonality_pairing(const CPElement& F, const CPElement& G) {
    return pairing_impl(F, G, true);
}

cd orthogonality_pairing_bilinear(const CPElement& F, const CPElement& G) {
    return pairing_impl(F, G, false);
}

} // namespace rieffel
