/// @file solver.hpp
/// The constructive gauge-equivalence algorithm. Starting from two
/// Maurer-Cartan elements with the same 1-jet, the solver walks down the
/// y-adic filtration: at each level it reads the lowest slice of the
/// difference as a quotient cocycle, produces a corrective gauge log through
/// the certified homotopy (or a direct linear solve when cohomology does not
/// vanish), and applies the gauge. Either the difference reaches zero in the
/// truncated algebra, or a specific closed-not-exact cocycle certifies the
/// obstruction. Also hosts the point-leaf linearization pipeline, the
/// jet-realization front end, and the order-2 extension analysis.

#pragma once

#include <optional>
#include <vector>

#include "mcgauge/cohomology.hpp"
#include "mcgauge/glagroup.hpp"

namespace mcgauge {

/// Mathematical outcome of a solve; invalid input surfaces as thrown
/// InputError instead of a status.
enum class SolveStatus { equivalent, obstructed };

/// One corrective step of the descent.
struct IterationLog {
    int level = 0;        // q: the filtration level corrected by this step
    LNorm x_norm;         // ||X_q||, at most 2^-q
    LNorm residual_norm;  // ||gamma_q - gamma|| after applying the step
};

/// Full account of a solve.
///
/// status == equivalent: exp_ad(gauge, gamma') == gamma has been re-verified
/// exactly before the report was returned, and final_residual is zero.
///
/// status == obstructed: gauge collects the steps that did succeed,
/// final_residual is the first uncorrectable difference, and obstruction
/// carries class representatives plus the specific cocycle (with its
/// infeasibility certified by exact linear algebra at solve time).
struct SolverReport {
    SolveStatus status;
    GaugeElement gauge;
    std::vector<IterationLog> iterations;
    MultiVec final_residual;
    std::optional<ObstructionReport> obstruction;
};

/// Decides gauge equivalence of gamma and gamma_prime (same space, same jet
/// order, 1-jets equal, both Maurer-Cartan). The iteration: with p the
/// filtration level of gamma - gamma_prime (p >= 1 required, else
/// JetMismatch), step k reads q = level(gamma_{k-1} - gamma), solves
/// d X = (level-q slice of gamma_{k-1} - gamma) on the level-q quotient,
/// sets gamma_k = exp_ad(X_k, gamma_{k-1}) and accumulates the gauge through
/// the Campbell-Hausdorff product. Norms obey ||X_k|| <= 2^-(p+k-1) and
/// ||gamma_k - gamma|| <= 2^-(p+k) (EstimateViolated on failure; indicates
/// an internal convention bug, never valid-input behaviour), so at most
/// N - p + 1 steps run. x_cap bounds the cochain x-degree and is required
/// when p > 0; XDegreeOverflow propagates from assembly when the cap is too
/// tight for the data.
SolverReport solve_equivalence(const MCElement& gamma, const MCElement& gamma_prime,
                               std::optional<int> x_cap = std::nullopt);

/// Point-leaf pipeline (p = 0): extracts the isotropy Lie algebra from the
/// linear part of pi, forms the Lie-Poisson structure on its dual, and
/// decides equivalence with pi. For semisimple isotropy the Whitehead lemma
/// makes the descent unobstructed at every level.
SolverReport linearize(const MCElement& pi, std::optional<int> x_cap = std::nullopt);

/// Identifies a target truncated jet with a chosen first-order
/// representative: delegates to solve_equivalence(pi_hat, first_order).
/// The smooth (non-formal) realization of the resulting gauge by a
/// diffeomorphism is out of scope here; the report certifies the identity
/// in the truncated algebra only.
SolverReport realize_jet(const MCElement& pi_hat, const MCElement& first_order,
                         std::optional<int> x_cap = std::nullopt);

/// One cap's worth of the order-2 extension analysis: for first-order data
/// pi1 (Maurer-Cartan modulo y^2), a correction b of pure y-degree 2 makes
/// pi1 + b Maurer-Cartan modulo y^3 iff d b = -1/2 [pi1, pi1] on the level-1
/// quotient. Exactly one of `correction` / `certificate` is set: either a
/// witness b within the x-degree cap, or a functional phi with phi d = 0 and
/// phi . cocycle != 0 proving no capped polynomial solution exists.
struct ExtensionAttempt {
    int x_cap = 0;
    std::vector<Scalar> cocycle;  // -1/2 [pi1,pi1] in level-1 trivector coordinates
    std::optional<MultiVec> correction;
    std::vector<Scalar> certificate;
};

/// Runs the order-2 ansatz sweep over the given x-degree caps. Validates
/// that pi1 is a tangent bivector whose self-bracket starts at y-degree 2
/// (InputError otherwise) and that the cocycle is closed (InternalError --
/// guaranteed by the graded Jacobi identity).
std::vector<ExtensionAttempt> extend_order2(const MultiVec& pi1,
                                            const std::vector<int>& x_caps);

}  // namespace mcgauge
