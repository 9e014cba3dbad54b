#pragma once

#include <Eigen/Dense>
#include <complex>
#include <stdexcept>

namespace rieffel {

using cd = std::complex<double>;

// Standard symplectic form on R^{2n} with X=(x,xi), Y=(y,eta):
//   [[X,Y]] = y.xi - x.eta
inline double symplectic_form(const Eigen::VectorXd& X, const Eigen::VectorXd& Y) {
    if (X.size() != Y.size() || X.size() % 2 != 0)
        throw std::invalid_argument("symplectic_form: need equal even-dimensional vectors");
    const long n = X.size() / 2;
    return Y.head(n).dot(X.tail(n)) - X.head(n).dot(Y.tail(n));
}

// Group 2-cocycle kappa(X,Y) = exp(-(i/2)[[X,Y]]).
inline cd cocycle(const Eigen::VectorXd& X, const Eigen::VectorXd& Y) {
    return std::exp(cd(0.0, -0.5 * symplectic_form(X, Y)));
}

// Heisenberg composition on R^{2n+1}: Xb * Yb = Xb + Yb + (0,...,0, [[X,Y]]/2).
inline Eigen::VectorXd heisenberg_mul(const Eigen::VectorXd& Xb, const Eigen::VectorXd& Yb) {
    if (Xb.size() != Yb.size() || Xb.size() % 2 != 1)
        throw std::invalid_argument("heisenberg_mul: need equal odd-dimensional vectors");
    const long m = Xb.size() - 1;
    Eigen::VectorXd out = Xb + Yb;
    out(m) += 0.5 * symplectic_form(Xb.head(m), Yb.head(m));
    return out;
}

} // namespace rieffel
