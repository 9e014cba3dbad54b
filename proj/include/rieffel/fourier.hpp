#pragma once

#include "rieffel/grid.hpp"
#include "rieffel/symplectic.hpp"

#include <Eigen/Dense>
#include <complex>

namespace rieffel {

// Plane-wave analysis matrix for the self-dual grid:
//   Em(m,j) = exp(-i u_m u_j)/sqrt(N),  u_j = (j-N/2) h.
// Em is symmetric, unitary, and conj(Em) is its inverse.
const Eigen::MatrixXcd& dft_minus(int N);
const Eigen::MatrixXcd& dft_plus(int N);   // conj(dft_minus)

// Fine synthesis matrix: rows are the 2N half-spacing nodes, columns the N
// coarse frequencies; Sf(p,m) = exp(i uf_p u_m)/sqrt(N).
const Eigen::MatrixXcd& fine_synthesis(int N);

// Discrete symplectic Fourier transform, (Fa)(X) = sum_Y w e^{-i[[X,Y]]} a(Y).
// Involutive and unitary on the self-dual grid.
PhaseFunction symp_fourier(const PhaseFunction& a);

// Band-limited interpolation onto the doubled grid (2N per axis, spacing h/2,
// same box).  Exact on grid data; the adjoint with per-axis factor 1/2 is the
// inverse on the range (upsample-then-downsample is the identity).
PhaseFunction upsample2(const PhaseFunction& a);
PhaseFunction downsample2(const PhaseFunction& af);

// Trigonometric evaluation of grid data at an arbitrary point.
cd eval_at(const PhaseFunction& a, double x, double y);

// Spectral translation: out(X) = a(X + t), t arbitrary real.  Exact group
// law; an exact index permutation when t is a grid shift.
PhaseFunction translate(const PhaseFunction& a, double t0, double t1);
Eigen::VectorXcd translate1d(const Eigen::VectorXcd& v, double t);

// Spectral partial derivative along axis 0 or 1.
PhaseFunction derivative(const PhaseFunction& a, int axis);

// Relative size of the outermost frequency shell; used to flag data that is
// not numerically band-limited on this grid.
double bandlimit_tail(const PhaseFunction& a);

} // namespace rieffel
