#include "rieffel/crossed.hpp"
#include "rieffel/deform.hpp"
#include "rieffel/fourier.hpp"

#include <set>
#include <stdexcept>

namespace rieffel {

namespace {

cd kappa2(double x0, double x1, double y0, double y1) {
    return std::exp(cd(0.0, -0.5 * (y0 * x1 - x0 * y1)));
}

void require_same(const CPElement& F, const CPElement& G) {
    if (!(F.grid == G.grid) || !(F.spec == G.spec))
        throw std::invalid_argument("crossed product: mixed carriers");
}

} // namespace

std::vector<CPChannel> cp_channels(const CPElement& F) {
    const int N = F.grid.N;
    std::vector<CPChannel> out;
    if (F.spec.backend == Backend::InnerSpectral) {
        const int d = F.spec.d();
        for (int j = 0; j < d; ++j)
            for (int k = 0; k < d; ++k) {
                CPChannel c;
                c.key = {j, k};
                c.p = Eigen::Vector2d(F.spec.H0(j) - F.spec.H0(k),
                                      F.spec.H1(j) - F.spec.H1(k));
                c.field.resize(N, N);
                for (int a = 0; a < N; ++a)
                    for (int b = 0; b < N; ++b)
                        c.field(a, b) = F.at(a, b).mat(j, k);
                out.push_back(std::move(c));
            }
    } else if (F.spec.backend == Backend::TorusModes) {
        std::set<std::array<int, 2>> keys;
        for (const auto& v : F.values)
            for (const auto& [k, c] : v.modes) keys.insert(k);
        for (const auto& k : keys) {
            CPChannel c;
            c.key = k;
            c.p = Eigen::Vector2d(double(k[0]), double(k[1]));
            c.field = PhaseFunction::Zero(N, N);
            for (int a = 0; a < N; ++a)
                for (int b = 0; b < N; ++b) {
                    auto it = F.at(a, b).modes.find(k);
                    if (it != F.at(a, b).modes.end()) c.field(a, b) = it->second;
                }
            out.push_back(std::move(c));
        }
    } else {
        // Translation: one channel per point of the acted copy of the grid
        const int M = F.spec.grid.N;
        for (int r = 0; r < M; ++r)
            for (int s = 0; s < M; ++s) {
                CPChannel c;
                c.key = {r, s};
                c.p = Eigen::Vector2d::Zero();   // not homogeneous; unused
                c.field.resize(N, N);
                for (int a = 0; a < N; ++a)
                    for (int b = 0; b < N; ++b)
                        c.field(a, b) = F.at(a, b).mat(r, s);
                out.push_back(std::move(c));
            }
    }
    return out;
}

void cp_accumulate_channel(CPElement& F, const CPChannel& c) {
    const int N = F.grid.N;
    for (int a = 0; a < N; ++a)
        for (int b = 0; b < N; ++b) {
            if (F.spec.backend == Backend::TorusModes) {
                if (c.field(a, b) != cd(0.0))
                    F.at(a, b).modes[c.key] += c.field(a, b);
            } else {
                F.at(a, b).mat(c.key[0], c.key[1]) += c.field(a, b);
            }
        }
}

CPElement cp_zero(const PhaseGrid& g, const ActionSpec& spec) {
    CPElement F;
    F.grid = g;
    F.spec = spec;
    F.values.assign(size_t(g.N) * g.N, algebra_zero(spec));
    return F;
}

CPElement cp_from_tensors(const PhaseGrid& g, const ActionSpec& spec,
                          const std::vector<TensorTerm>& terms) {
    CPElement F = cp_zero(g, spec);
    for (const auto& [a, A] : terms) {
        for (int i = 0; i < g.N; ++i)
            for (int j = 0; j < g.N; ++j)
                F.at(i, j) = lincomb(1.0, F.at(i, j), a(i, j), A);
    }
    return F;
}

CPElement cp_add(const CPElement& F, const CPElement& G) {
    require_same(F, G);
    CPElement out = F;
    for (size_t i = 0; i < out.values.size(); ++i)
        out.values[i] = lincomb(1.0, F.values[i], 1.0, G.values[i]);
    return out;
}

CPElement cp_scale(cd c, const CPElement& F) {
    CPElement out = F;
    for (auto& v : out.values) v = scale(c, v);
    return out;
}

double cp_dist(const CPElement& F, const CPElement& G) {
    require_same(F, G);
    double m = 0.0;
    for (size_t i = 0; i < F.values.size(); ++i)
        m = std::max(m, algebra_dist(F.values[i], G.values[i]));
    return m;
}

double cp_max_abs(const CPElement& F) {
    double m = 0.0;
    for (const auto& v : F.values) m = std::max(m, algebra_max_abs(v));
    return m;
}

namespace {

CPElement twisted_conv_fine(const CPElement& G1, const CPElement& G2, bool kn) {
    require_same(G1, G2);
    check_cp_grid(G1.grid);
    if (G1.spec.backend == Backend::Translation)
        throw std::invalid_argument(
            "twisted_conv: Translation-backend carrier has no homogeneous "
            "decomposition; unsupported");
    const int N = G1.grid.N, Nf = 2 * N;
    const PhaseGrid& g = G1.grid;
    const double hf = g.h / 2.0, wf = hf * hf / (2.0 * M_PI);
    auto ch1 = cp_channels(G1), ch2 = cp_channels(G2);
    std::vector<PhaseFunction> fine1, fine2;
    fine1.reserve(ch1.size());
    fine2.reserve(ch2.size());
    for (const auto& c : ch1) fine1.push_back(upsample2(c.field));
    for (const auto& c : ch2) fine2.push_back(upsample2(c.field));

    const bool inner = G1.spec.backend == Backend::InnerSpectral;
    CPElement out = cp_zero(g, G1.spec);

    // output channels accumulated as scalar fields
    std::map<std::array<int, 2>, PhaseFunction> acc;

    Eigen::VectorXd uf(Nf);
    for (int i = 0; i < Nf; ++i) uf(i) = (i - N) * hf;

    std::vector<int> sa(Nf), sb(Nf);
    Eigen::VectorXcd colk(Nf), rowk(Nf), colm(Nf), rowm(Nf);
    Eigen::MatrixXcd Bg(Nf, Nf), Prod(Nf, Nf);

    for (size_t i1 = 0; i1 < ch1.size(); ++i1) {
        for (size_t i2 = 0; i2 < ch2.size(); ++i2) {
            std::array<int, 2> okey;
            if (inner) {
                if (ch1[i1].key[1] != ch2[i2].key[0]) continue;
                okey = {ch1[i1].key[0], ch2[i2].key[1]};
            } else {
                okey = {ch1[i1].key[0] + ch2[i2].key[0],
                        ch1[i1].key[1] + ch2[i2].key[1]};
            }
            const Eigen::Vector2d p = ch1[i1].p, q = ch2[i2].p;
            const Eigen::Vector2d mu = kn ? q : Eigen::Vector2d(0.5 * (p + q));
            for (int i = 0; i < Nf; ++i) {
                colm(i) = std::exp(cd(0.0, uf(i) * mu(0)));
                rowm(i) = std::exp(cd(0.0, uf(i) * mu(1)));
            }
            auto it = acc.find(okey);
            if (it == acc.end())
                it = acc.emplace(okey, PhaseFunction::Zero(N, N)).first;
            PhaseFunction& target = it->second;
            const PhaseFunction& Af = fine1[i1];
            const PhaseFunction& Bf = fine2[i2];
            for (int a = 0; a < N; ++a) {
                const double X0 = g.node(a);
                for (int i = 0; i < Nf; ++i)
                    sa[i] = ((2 * a - i) % Nf + Nf + N) % Nf;
                for (int i = 0; i < Nf; ++i)
                    rowk(i) = rowm(i) * std::exp(cd(0.0, 0.5 * X0 * uf(i)));
                for (int b = 0; b < N; ++b) {
                    const double X1 = g.node(b);
                    for (int i = 0; i < Nf; ++i)
                        sb[i] = ((2 * b - i) % Nf + Nf + N) % Nf;
                    for (int i = 0; i < Nf; ++i)
                        colk(i) = colm(i) * std::exp(cd(0.0, -0.5 * uf(i) * X1));
                    for (int P = 0; P < Nf; ++P)
                        for (int Q = 0; Q < Nf; ++Q)
                            Bg(P, Q) = Bf(sa[P], sb[Q]);
                    Prod = Af.cwiseProduct(Bg);
                    cd s = colk.transpose() * Prod * rowk;
                    if (!kn)
                        s *= std::exp(cd(0.0, -0.5 * (X0 * p(0) + X1 * p(1))));
                    target(a, b) += wf * s;
                }
            }
        }
    }
    for (const auto& [key, field] : acc) {
        CPChannel c;
        c.key = key;
        c.field = field;
        cp_accumulate_channel(out, c);
    }
    return out;
}

} // namespace

CPElement twisted_conv(const CPElement& G1, const CPElement& G2) {
    return twisted_conv_fine(G1, G2, false);
}

CPElement twisted_conv_kn(const CPElement& G1, const CPElement& G2) {
    return twisted_conv_fine(G1, G2, true);
}

CPElement twisted_conv_coarse(const CPElement& G1, const CPElement& G2, bool kn) {
    require_same(G1, G2);
    const int N = G1.grid.N;
    const PhaseGrid& g = G1.grid;
    CPElement out = cp_zero(g, G1.spec);
    for (int a = 0; a < N; ++a)
        for (int b = 0; b < N; ++b) {
            const double X0 = g.node(a), X1 = g.node(b);
            AlgebraElement accv = algebra_zero(G1.spec);
            for (int p = 0; p < N; ++p)
                for (int q = 0; q < N; ++q) {
                    const double Y0 = g.node(p), Y1 = g.node(q);
                    // X - Y sits at index (a - p) + N/2 (mod N)
                    const int ia = ((a - p + N / 2) % N + N) % N;
                    const int ib = ((b - q + N / 2) % N + N) % N;
                    AlgebraElement t;
                    if (kn) {
                        t = mul(G1.at(p, q),
                                act(Eigen::Vector2d(Y0, Y1), G2.at(ia, ib)));
                    } else {
                        t = mul(act(Eigen::Vector2d((Y0 - X0) / 2, (Y1 - X1) / 2),
                                    G1.at(p, q)),
                                act(Eigen::Vector2d(Y0 / 2, Y1 / 2), G2.at(ia, ib)));
                    }
                    accv = lincomb(1.0, accv, kappa2(X0, X1, Y0, Y1), t);
                }
            out.at(a, b) = scale(g.w, accv);
        }
    return out;
}

CPElement cp_involution(const CPElement& G) {
    CPElement out = G;
    const int N = G.grid.N;
    for (int i = 0; i < N; ++i)
        for (int j = 0; j < N; ++j)
            out.at(i, j) = adjoint(G.at(G.grid.neg_index(i), G.grid.neg_index(j)));
    return out;
}

CPElement cp_star_pointwise(const CPElement& F) {
    CPElement out = F;
    for (auto& v : out.values) v = adjoint(v);
    return out;
}

CPElement c_alpha(double alpha, const CPElement& F) {
    CPElement out = F;
    const int N = F.grid.N;
    for (int i = 0; i < N; ++i)
        for (int j = 0; j < N; ++j)
            out.at(i, j) = act(Eigen::Vector2d(alpha * F.grid.node(i),
                                               alpha * F.grid.node(j)),
                               F.at(i, j));
    return out;
}

double l1_norm(const CPElement& G) {
    double s = 0.0;
    for (const auto& v : G.values) s += algebra_norm(v);
    return G.grid.w * s;
}

double cp_l2_norm(const CPElement& G) {
    double s = 0.0;
    for (const auto& v : G.values) {
        if (G.spec.backend == Backend::TorusModes) {
            for (const auto& [k, c] : v.modes) s += std::norm(c);
        } else {
            s += v.mat.squaredNorm();
        }
    }
    return std::sqrt(G.grid.w * s);
}

double schwartz_seminorm(const CPElement& G, int k, const std::array<int, 2>& beta,
                         int Nw) {
    CPElement D = G;
    auto chans = cp_channels(G);
    D = cp_zero(G.grid, G.spec);
    for (auto& c : chans) {
        for (int i = 0; i < beta[0]; ++i) c.field = derivative(c.field, 0);
        for (int i = 0; i < beta[1]; ++i) c.field = derivative(c.field, 1);
        cp_accumulate_channel(D, c);
    }
    double m = 0.0;
    const int N = G.grid.N;
    for (int i = 0; i < N; ++i)
        for (int j = 0; j < N; ++j) {
            const double x = G.grid.node(i), y = G.grid.node(j);
            const double wgt = std::pow(1.0 + std::sqrt(x * x + y * y), Nw);
            m = std::max(m, wgt * seminorm(k, D.at(i, j)));
        }
    return m;
}

CPElement square_product(const CPElement& F, const CPElement& G) {
    require_same(F, G);
    if (F.spec.backend == Backend::Translation)
        throw std::invalid_argument("square_product: use the tensor form for "
                                    "Translation-backend carriers");
    const bool inner = F.spec.backend == Backend::InnerSpectral;
    auto chF = cp_channels(F), chG = cp_channels(G);
    CPElement out = cp_zero(F.grid, F.spec);
    std::map<std::array<int, 2>, PhaseFunction> acc;
    for (const auto& cf : chF)
        for (const auto& cg : chG) {
            std::array<int, 2> okey;
            if (inner) {
                if (cf.key[1] != cg.key[0]) continue;
                okey = {cf.key[0], cg.key[1]};
            } else {
                okey = {cf.key[0] + cg.key[0], cf.key[1] + cg.key[1]};
            }
            const cd kap = kappa2(cf.p(0), cf.p(1), cg.p(0), cg.p(1));
            auto it = acc.find(okey);
            if (it == acc.end())
                it = acc.emplace(okey, PhaseFunction::Zero(F.grid.N, F.grid.N)).first;
            // tensor rule: the scalar factors multiply in reversed order
            it->second += kap * moyal_grid(cg.field, cf.field);
        }
    for (const auto& [key, field] : acc) {
        CPChannel c;
        c.key = key;
        c.field = field;
        cp_accumulate_channel(out, c);
    }
    return out;
}

CPElement square_product_tensors(const PhaseGrid& g, const ActionSpec& spec,
                                 const std::vector<TensorTerm>& F,
                                 const std::vector<TensorTerm>& G) {
    std::vector<TensorTerm> terms;
    const Strategy strat = spec.backend == Backend::Translation
                               ? Strategy::GridReduced
                               : Strategy::SpectralExact;
    for (const auto& [a, A] : F)
        for (const auto& [b, B] : G)
            terms.emplace_back(moyal_grid(b, a), deform_product(A, B, strat));
    return cp_from_tensors(g, spec, terms);
}

double cp_tail(const CPElement& F) {
    auto chans = cp_channels(F);
    double peak = 0.0, edge = 0.0;
    const int N = F.grid.N;
    for (const auto& c : chans) {
        peak = std::max(peak, c.field.cwiseAbs().maxCoeff());
        for (int i = 0; i < N; ++i) {
            edge = std::max({edge, std::abs(c.field(0, i)), std::abs(c.field(N - 1, i)),
                             std::abs(c.field(i, 0)), std::abs(c.field(i, N - 1))});
        }
    }
    return peak > 0.0 ? edge / peak : 0.0;
}

void check_cp_grid(const PhaseGrid& g) {
    if (g.N < 8)
        throw std::invalid_argument("grid too small for the half-spacing quadrature");
}

} // namespace rieffel
