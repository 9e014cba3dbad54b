#pragma once

#include "rieffel/grid.hpp"
#include "rieffel/symplectic.hpp"

#include <Eigen/Dense>

namespace rieffel {

// Discrete configuration space shares the 1D node set of the phase grid;
// state vectors are length-N with inner product h * sum conj(u) v.

double state_norm(const Eigen::VectorXcd& u, const PhaseGrid& g);

// Projective representation pi(X) = phase * spectral shift:
//   [pi(x,xi)u](y) = e^{i(y xi + x xi/2)} u(y + x).
// Satisfies pi(X)pi(Y) = kappa(X,Y) pi(X+Y) (exact at grid X,Y).
Eigen::MatrixXcd pi_rep(double x, double xi, int N);

// Full Heisenberg representation: pi with the central phase e^{it}.
Eigen::MatrixXcd schrodinger(double x, double xi, double t, int N);

// Wigner transform W(u,v): symplectic Fourier transform of the matrix
// coefficient X -> h * sum_y u(y) conj([pi(X)v](y)).
PhaseFunction wigner(const Eigen::VectorXcd& u, const Eigen::VectorXcd& v);

// Weyl quantization.  The symbol is upsampled to the half-spacing grid so
// midpoints (x+y)/2 land on nodes; weyl_symbol is the exact adjoint, hence
// the exact inverse on band-limited symbols.
Eigen::MatrixXcd weyl_op(const PhaseFunction& a);
PhaseFunction weyl_symbol(const Eigen::MatrixXcd& T);

double hs_norm(const Eigen::MatrixXcd& T);   // Frobenius; equals the symbol L2 norm
double op_norm(const Eigen::MatrixXcd& T);   // spectral

// Operator-norm estimate of the deformed norm of a Translation symbol.
double rieffel_norm_estimate(const PhaseFunction& a);

double l2_norm(const PhaseFunction& a);      // sqrt(w * sum |a|^2)

} // namespace rieffel
