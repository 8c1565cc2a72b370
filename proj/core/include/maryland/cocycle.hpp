#pragma once

// One-step transfer matrices of the difference equation
//   psi(k+1) + psi(k-1) + lambda * cot(pi(omega k + theta)) * psi(k) = E * psi(k)
// and their ordered products along the orbit theta + k omega.

#include <complex>

#include "maryland/mat2.hpp"
#include "maryland/params.hpp"

namespace maryland {

enum class Precision { kDouble, kExtended };

struct CocycleOptions {
    double pole_tol = 1e-10;  ///< minimum distance of the orbit from the integers
    Precision precision = Precision::kDouble;
};

/// F(z) = [[E - lambda cot(pi z), -1], [1, 0]], det F == 1.
/// Throws PotentialPoleError when z is within pole_tol of an integer.
Mat2C transfer_matrix(std::complex<double> z, double eta, double l, double pole_tol = 1e-10);

/// F(z)^{-1} = [[0, 1], [-1, E - lambda cot(pi z)]].
Mat2C transfer_inverse(std::complex<double> z, double eta, double l, double pole_tol = 1e-10);

/// P_N(omega, theta):  F(theta + (N-1) omega) ... F(theta) for N >= 1,
/// the identity for N == 0, and F(theta + N omega)^{-1} ... F(theta - omega)^{-1}
/// for N <= -1, so that P_{N+M}(theta) = P_N(theta + M omega) P_M(theta).
/// The extended backend carries the orbit and the product in double-double.
ScaledMat2C cocycle_product(const SpectralParams& p, long n, const CocycleOptions& opts = {});

}  // namespace maryland
