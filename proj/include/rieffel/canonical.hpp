#pragma once

#include "rieffel/crossed.hpp"

namespace rieffel {

// Partial symplectic Fourier transform in the Xi variable, slot-wise.
CPElement partial_fourier(const CPElement& F);

// M = F o C_1, Minv = C_{-1} o F, M' = C_{1/2} o F o C_1.  M carries the
// deformed tensor product to the symmetrized twisted convolution; M' lands
// on the Kohn-Nirenberg variant.
CPElement canonical_m(const CPElement& F);
CPElement canonical_m_inv(const CPElement& G);
CPElement canonical_m_prime(const CPElement& F);

// Independent evaluation routes: explicit double sums of the defining
// displays, no reuse of the factorized code path.
CPElement canonical_m_direct(const CPElement& F);
CPElement canonical_m_prime_direct(const CPElement& F);

// [beta_Z(G)](X) = e^{i[[X,Z]]} G(X)
CPElement dual_action(const Eigen::Vector2d& Z, const CPElement& G);

// (T_s F)(X) = F(X + Z) for the grid vector Z with index offset (di, dj).
CPElement xi_translate_index(const CPElement& F, int di, int dj);

struct EquivariantMorphism {
    enum class Rule { Identity, TorusTranslationPhase, DiagonalConjugation };
    Rule rule = Rule::Identity;
    Eigen::Vector2d sigma0 = Eigen::Vector2d::Zero();  // TorusTranslationPhase
    Eigen::VectorXcd u;                                // DiagonalConjugation
};

AlgebraElement apply_morphism(const EquivariantMorphism& R, const AlgebraElement& f);
CPElement lift_morphism(const EquivariantMorphism& R, const CPElement& F);

// L2 pairing over Xi-grid x Sigma with the invariant measure; sesquilinear
// form (the one whose M-unitarity is tested).  For the noncommutative
// backend the invariant functional is the normalized trace.
cd orthogonality_pairing(const CPElement& F, const CPElement& G);
cd orthogonality_pairing_bilinear(const CPElement& F, const CPElement& G);

} // namespace rieffel
