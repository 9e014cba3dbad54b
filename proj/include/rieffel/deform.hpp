#pragma once

#include "rieffel/algebra.hpp"

namespace rieffel {

enum class Strategy { SpectralExact, GridReduced, OperatorOracle, BruteQuadrature };

// Deformed product on the acted algebra.
//  SpectralExact (InnerSpectral, TorusModes): sum over homogeneous
//    components with the exact cocycle phase, f_p # g_q = kappa(p,q) f_p g_q.
//  GridReduced (Translation): single-integral reduction
//    (f#g)(X) = sum_U w e^{i[[U,X]]} f(X - U/2) (Fg)(U).
//  OperatorOracle (Translation): weyl_symbol(weyl_op(f) weyl_op(g)).
//  BruteQuadrature (Translation): direct double sum of the defining
//    oscillatory integral on the half-spacing grid (the coarse grid
//    resonates with the doubled phase and is not usable).
AlgebraElement deform_product(const AlgebraElement& f, const AlgebraElement& g,
                              Strategy strategy);

// Scalar versions on phase functions (Translation payloads).
PhaseFunction moyal_grid(const PhaseFunction& f, const PhaseFunction& g);
PhaseFunction moyal_brute(const PhaseFunction& f, const PhaseFunction& g);
PhaseFunction moyal_op(const PhaseFunction& f, const PhaseFunction& g);

// Independent quadrature of the defining double integral for a pair of pure
// frequencies: returns the approximation of kappa(p,q).  Gaussian
// regularization eps ~ 1/Nq^2 with two-level Richardson extrapolation.
cd phase_law_quadrature(const Eigen::Vector2d& p, const Eigen::Vector2d& q, int Nq);

// Graded seminorm family p_k(f) = sum_{|alpha|<=k} (1/alpha!) ||delta^alpha f||.
double bc_seminorm(int k, const AlgebraElement& f);

} // namespace rieffel
