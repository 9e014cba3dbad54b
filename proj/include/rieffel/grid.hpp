#pragma once

#include <Eigen/Dense>
#include <cmath>
#include <stdexcept>

namespace rieffel {

// Self-dual phase grid for n=1: N nodes per axis at (j - N/2)*h with
// h = sqrt(2*pi/N).  With this spacing the node set is its own Fourier
// dual and the discrete symplectic Fourier transform is involutive.
struct PhaseGrid {
    int N = 0;
    double h = 0.0;
    double w = 0.0;   // quadrature weight per 2D node, h^2/(2*pi) = 1/N

    double node(int j) const { return (j - N / 2) * h; }
    // index of -node(j) under periodic wrap
    int neg_index(int j) const { return (N - j) % N; }
    double half_box() const { return 0.5 * N * h; }

    bool operator==(const PhaseGrid& o) const { return N == o.N; }
};

inline PhaseGrid make_selfdual_grid(int N) {
    if (N <= 0 || N % 2 != 0)
        throw std::invalid_argument("make_selfdual_grid: N must be positive and even");
    PhaseGrid g;
    g.N = N;
    g.h = std::sqrt(2.0 * M_PI / N);
    g.w = g.h * g.h / (2.0 * M_PI);
    return g;
}

// Phase-space functions (n=1) are N x N complex matrices; row index is the
// first coordinate, column index the second.
using PhaseFunction = Eigen::MatrixXcd;

} // namespace rieffel
