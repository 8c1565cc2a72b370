#pragma once

// Fundamental matrix solution Psi built from the minimal solution, the
// monodromy matrix, and the one-step and cascaded renormalization of the
// transfer-matrix cocycle:
//   P_N(omega,theta,eta,l) =
//       Psi({theta+N omega}) sigma2 P_{N1}(omega1,theta1,eta1,l1) sigma2 Psi^{-1}(theta).

#include <functional>
#include <vector>

#include "maryland/cocycle.hpp"
#include "maryland/mat2.hpp"
#include "maryland/minsol.hpp"
#include "maryland/params.hpp"
#include "maryland/scaled.hpp"

namespace maryland {

struct RenormOptions {
    MinSolOptions minsol;
    ParamsOptions params;
    CocycleOptions cocycle;
    int max_depth = 64;
    /// Accumulated log of the per-level condition factors beyond which the
    /// chain is not trusted in double precision.
    double condition_budget_log = 600.0;
};

/// Psi(z) = [[psi(z), psi(z-1)], [psi(z-omega), psi(z-1-omega)]].
/// Valid at any real z off the pole lattice (psi folds outside the base strip).
ScaledMat2C psi_matrix(const MinSolContext& ctx, double z);

/// psi at arbitrary real z via unit steps of the companion equation
///   psi(z+1) + psi(z-1) + lambda1 cot(pi z / omega) psi(z) = E1 psi(z),
/// lambda1 = -2 sin(eta1) sinh(l1), E1 = 2 cos(eta1) cosh(l1), eta1 = eta/omega
/// mod 2pi, l1 = l/omega.  Arithmetic independent of the omega-step transfer
/// matrices, so identities relating Psi to cocycle products are real checks.
ScaledComplex psi_extended(const MinSolContext& ctx, double z);

/// Psi assembled from psi_extended (for arguments far outside the base strip).
ScaledMat2C psi_matrix_extended(const MinSolContext& ctx, double z);

struct FundamentalSolution {
    std::function<ScaledMat2C(double)> evaluator;
    ScaledComplex det_constant;  ///< z-independent; zero signals degeneracy
};

/// Psi as a fundamental solution of Psi(z+omega) = F(z) Psi(z); det_constant is
/// the Wronskian closed form (vanishes on the resonance lattice).
FundamentalSolution fundamental_solution(const MinSolContext& ctx);

/// Monodromy matrix M1(x) = (Psi(omega x)^{-1} Psi(omega x + 1))^t.
/// Throws SingularFundamentalError when det Psi is numerically degenerate.
ScaledMat2C monodromy_matrix(const FundamentalSolution& fs, double omega, double x);

struct RenormBoundary {
    ScaledMat2C left;   ///< Psi({theta + N omega})
    ScaledMat2C right;  ///< Psi^{-1}(theta)
    RenormStep step;    ///< inner problem at step.next_params with step.n_next
    double condition;   ///< ||Psi||_F ||Psi^{-1}||_F of this level
};

/// One renormalization: left * sigma2 * P_{N1}(inner) * sigma2 * right == P_N.
RenormBoundary renormalize_once(const SpectralParams& p, long n, const RenormOptions& opts = {});

struct GenericRenormalization {
    ScaledMat2C left, right;
    double omega1 = 0.0, theta1 = 0.0;
    long n1 = 0;
};

/// Monodromization of a general cocycle (M, omega, theta): boundary matrices
/// from the supplied fundamental solution of Psi(z+omega) = M(z/omega... ) --
/// here M is the governing matrix in Psi(z+omega) = M(z) Psi(z), checked at
/// theta before use.  The inner cocycle is (M1, omega1, theta1) with M1 from
/// monodromy_matrix.
GenericRenormalization generic_renormalize(const std::function<Mat2C(double)>& m,
                                           const FundamentalSolution& fs, double omega,
                                           double theta, long n);

struct RenormChain {
    std::vector<RenormStep> levels;
    std::vector<ScaledMat2C> boundary_left;   ///< Psi_k({theta_k + N_k omega_k}) * sigma2
    std::vector<ScaledMat2C> boundary_right;  ///< sigma2 * Psi_k^{-1}(theta_k)
    std::vector<double> condition;            ///< per-level condition factors
    SpectralParams terminal_params;
    long terminal_n = 0;
    ScaledMat2C terminal_product;
};

/// Cascade renormalize_once until |N_k| <= 1 (or max_depth), then compute the
/// terminal product directly.  Throws PrecisionError when the accumulated
/// condition estimate exceeds the double-precision budget.
RenormChain cascade(const SpectralParams& p, long n, const RenormOptions& opts = {});

/// Reassemble P_N from the chain; matches cocycle_product within the
/// accumulated condition-scaled tolerance.
ScaledMat2C cascade_reconstruct(const RenormChain& chain);

/// {theta + n * omega} computed with a compensated product, so the fractional
/// part stays accurate for |n| in the hundreds.
double orbit_fraction(double theta, long n, double omega);

}  // namespace maryland
