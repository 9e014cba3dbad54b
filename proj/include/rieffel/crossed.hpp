#pragma once

#include "rieffel/algebra.hpp"

#include <utility>
#include <vector>

namespace rieffel {

// A-valued function on the phase grid; node (i,j) carries X = (u_i, u_j).
struct CPElement {
    PhaseGrid grid;
    ActionSpec spec;
    std::vector<AlgebraElement> values;   // row-major, size N*N

    AlgebraElement& at(int i, int j) { return values[size_t(i) * grid.N + j]; }
    const AlgebraElement& at(int i, int j) const { return values[size_t(i) * grid.N + j]; }
};

using TensorTerm = std::pair<PhaseFunction, AlgebraElement>;

CPElement cp_zero(const PhaseGrid& g, const ActionSpec& spec);
CPElement cp_from_tensors(const PhaseGrid& g, const ActionSpec& spec,
                          const std::vector<TensorTerm>& terms);

CPElement cp_add(const CPElement& F, const CPElement& G);
CPElement cp_scale(cd c, const CPElement& F);
double cp_dist(const CPElement& F, const CPElement& G);   // max entry deviation
double cp_max_abs(const CPElement& F);

// Symmetrized twisted convolution
//   (G1 <> G2)(X) = sum_Y w kappa(X,Y) Theta_{(Y-X)/2}[G1(Y)] Theta_{Y/2}[G2(X-Y)]
// and its Kohn-Nirenberg variant
//   (G1 <>' G2)(X) = sum_Y w kappa(X,Y) G1(Y) Theta_Y[G2(X-Y)].
// The Y-sum runs on the half-spacing grid with Fourier-upsampled data, so
// the half-lattice frequency the cocycle injects stays below the quadrature
// Nyquist.  Spectral backends only.
CPElement twisted_conv(const CPElement& G1, const CPElement& G2);
CPElement twisted_conv_kn(const CPElement& G1, const CPElement& G2);

// Independent oracle: direct double sum on the coarse lattice (both
// variants).  Exact up to box-wrap phases, so it needs concentrated
// carriers; the band-limited route above needs smooth ones.  The two err in
// complementary regimes and must agree on smooth concentrated data.
CPElement twisted_conv_coarse(const CPElement& G1, const CPElement& G2, bool kn);

// G^<>(X) = G(-X)^*
CPElement cp_involution(const CPElement& G);

// Pointwise involution of the deformed tensor algebra: F(X)^* slot-wise.
CPElement cp_star_pointwise(const CPElement& F);

// [C_alpha(F)](X) = Theta_{alpha X}[F(X)]
CPElement c_alpha(double alpha, const CPElement& F);

double l1_norm(const CPElement& G);
double cp_l2_norm(const CPElement& G);

// max over nodes of (1+|X|)^Nw |d^beta G(X)|^k, with the Xi-derivative taken
// spectrally slot-wise.
double schwartz_seminorm(const CPElement& G, int k, const std::array<int, 2>& beta,
                         int Nw);

// Deformed product on CP elements via the homogeneous slot decomposition:
// slot pair (p from F, q from G) contributes kappa(p,q) (b #_grid a) on the
// product slot.  Spectral backends.
CPElement square_product(const CPElement& F, const CPElement& G);

// Factorized rule for elementary tensors: (a (x) f) [] (b (x) g) = (b#a) (x) (f#g).
CPElement square_product_tensors(const PhaseGrid& g, const ActionSpec& spec,
                                 const std::vector<TensorTerm>& F,
                                 const std::vector<TensorTerm>& G);

// Scalar-channel view of the carrier: one Xi-grid field per matrix slot
// (InnerSpectral), per mode (TorusModes), or per acted-grid point
// (Translation).  For the spectral backends each channel is homogeneous
// with action frequency p.
struct CPChannel {
    std::array<int, 2> key;
    Eigen::Vector2d p;
    PhaseFunction field;
};

std::vector<CPChannel> cp_channels(const CPElement& F);
void cp_accumulate_channel(CPElement& F, const CPChannel& c);

// Relative boundary mass of the Xi-dependence; flags wraparound pollution.
double cp_tail(const CPElement& F);

// Grid-refinement guard: the half-spacing quadrature needs the doubled mode
// range; throws if N is too small to hold it.
void check_cp_grid(const PhaseGrid& g);

} // namespace rieffel
