#pragma once

#include "rieffel/grid.hpp"
#include "rieffel/symplectic.hpp"

#include <array>
#include <map>
#include <vector>

namespace rieffel {

// Three concrete realizations of an acted algebra (A, Theta):
//  - Translation: functions on a copy of the phase grid, acted on by
//    translations (band-limited data, spectral shifts).
//  - InnerSpectral: d x d matrices conjugated by commuting diagonal
//    one-parameter unitary groups generated by H0, H1.
//  - TorusModes: finitely supported Fourier coefficients on a 2-torus,
//    each mode k picking up the phase e^{i k.X}.
enum class Backend { Translation, InnerSpectral, TorusModes };

struct ActionSpec {
    Backend backend = Backend::Translation;
    PhaseGrid grid{};            // Translation carrier
    Eigen::VectorXd H0, H1;      // InnerSpectral generator eigenvalues
    int mode_radius = 0;         // TorusModes generating box |k|_inf <= r

    int d() const { return int(H0.size()); }
    bool operator==(const ActionSpec& o) const;
};

ActionSpec make_translation_spec(const PhaseGrid& g);
ActionSpec make_inner_spec(const Eigen::VectorXd& H0, const Eigen::VectorXd& H1);
ActionSpec make_torus_spec(int radius);

using ModeKey = std::array<int, 2>;

struct AlgebraElement {
    ActionSpec spec;
    // Translation: grid values; InnerSpectral: the matrix itself.
    Eigen::MatrixXcd mat;
    // TorusModes: coefficient per mode.
    std::map<ModeKey, cd> modes;
};

AlgebraElement algebra_zero(const ActionSpec& spec);
AlgebraElement algebra_unit(const ActionSpec& spec);

// Theta_X.  Defined for arbitrary real X; Translation uses spectral
// (trigonometric) interpolation, so out(y) = f(y - X) exactly on
// band-limited data.
AlgebraElement act(const Eigen::Vector2d& X, const AlgebraElement& f);

// delta^alpha f = d^alpha/dX^alpha Theta_X(f) at X=0.
AlgebraElement derivation(const std::array<int, 2>& alpha, const AlgebraElement& f);

AlgebraElement mul(const AlgebraElement& f, const AlgebraElement& g);
AlgebraElement adjoint(const AlgebraElement& f);
AlgebraElement lincomb(cd cf, const AlgebraElement& f, cd cg, const AlgebraElement& g);
AlgebraElement scale(cd c, const AlgebraElement& f);

// Backend C*-norm: sup norm (Translation), spectral norm (InnerSpectral),
// finite-section twisted-translation operator norm (TorusModes).
double algebra_norm(const AlgebraElement& f);

// Sensitivity of the TorusModes finite-section norm to one extra shell of
// padding; 0 for the other backends.
double torus_norm_gap(const AlgebraElement& f);

// |f|^k = sum_{|alpha|=k} (1/alpha!) ||delta^alpha f||.
double seminorm(int k, const AlgebraElement& f);

struct HomogeneousComponent {
    Eigen::Vector2d p;      // frequency: act(X, part) = e^{i p.X} part
    AlgebraElement part;
};

// Spectral decomposition of the action; InnerSpectral and TorusModes only.
std::vector<HomogeneousComponent> homogeneous_decompose(const AlgebraElement& f);

// Relative outer-shell spectral mass for Translation payloads (the smoothness
// proxy); 0 for the spectral backends.
double bandlimit_violation(const AlgebraElement& f);

double algebra_max_abs(const AlgebraElement& f);
double algebra_dist(const AlgebraElement& f, const AlgebraElement& g);

} // namespace rieffel
