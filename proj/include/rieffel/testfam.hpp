#pragma once

#include "rieffel/algebra.hpp"

#include <cstdint>

namespace rieffel {

// splitmix64 with an explicit uniform / Box-Muller mapping.  Standard
// library distributions are implementation-defined sequences; this keeps
// reports byte-identical across toolchains.
struct SplitMix {
    uint64_t state;
    explicit SplitMix(uint64_t seed) : state(seed) {}

    uint64_t next() {
        uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }
    double uniform() {   // in [0,1)
        return double(next() >> 11) * 0x1.0p-53;
    }
    double uniform(double a, double b) { return a + (b - a) * uniform(); }
    int uniform_int(int lo, int hi) {   // inclusive bounds
        return lo + int(next() % uint64_t(hi - lo + 1));
    }
    double normal() {
        double u1 = uniform(), u2 = uniform();
        while (u1 <= 0.0) u1 = uniform();
        return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * M_PI * u2);
    }
    cd cnormal() {
        double r = normal(), i = normal();
        return cd(r, i);
    }
};

// Gaussian envelope with Hermite-style polynomial prefactor and a mild
// modulation; closed under the symplectic Fourier transform up to phases.
PhaseFunction hg_symbol(const PhaseGrid& g, SplitMix& rng, double sigma, double mod);

// Plain shifted/modulated Gaussian e^{-((X-c)^2)/(2 sigma^2)} e^{i t.X}.
PhaseFunction gauss_symbol(const PhaseGrid& g, double cx, double cxi, double tx,
                           double txi, double sigma);

// Normalized Gaussian-type state (1 + c1 y) e^{-y^2/2}.
Eigen::VectorXcd gauss_state(const PhaseGrid& g, double c1);

Eigen::MatrixXcd random_matrix(int d, SplitMix& rng);

// InnerSpectral spec with generator eigenvalues uniform in [-0.6, 0.6],
// sorted.  Wider spreads push the slot spectra into the grid boundary.
ActionSpec random_inner_spec(int d, SplitMix& rng);

AlgebraElement random_inner_element(const ActionSpec& spec, SplitMix& rng);

} // namespace rieffel
