#pragma once

#include "relstate/rational.hpp"
#include "relstate/signed_sqrt.hpp"

#include <array>
#include <cstdint>
#include <string>
#include <vector>

namespace relstate::antiparallel {

/// One outcome of the POVM acting on the doubled spin-1/2 block of the
/// three-qubit space: a 2x2 multiplicity matrix (weight/2)(1 + n.X)
/// concentrated on the guess value.
struct BlockOutcome {
    double weight = 0.0;                   // the w^2 prefactor, >= 0
    double guess = 0.0;                    // announced overlap, in [0,1]
    std::array<double, 3> bloch{0, 0, 0};  // n, |n| <= 1
};

struct AntiparallelPovm {
    std::vector<BlockOutcome> outcomes;
    double q33_guess = 0.5;  // guess announced on the spin-3/2 block
};

/// Cost of the spin-3/2 block alone: 1/9 - h/3 + h^2/3, minimal (1/36) at
/// h = 1/2.
double q33_cost(double guess);

/// Total mean variance Delta_1 + Delta_3. Delta_1 sums, over outcomes,
/// (weight/2)[f00 + f11 + n1 * 2 f01 + n3 (f00 - f11)] evaluated at the
/// outcome's guess, with f00 = 1/6 - x/2 + x^2/2, f11 = 1/18 - x/6 + x^2/6
/// and f01 = -x/(6 sqrt 3). Throws std::invalid_argument if the
/// completeness constraints (sum of weights = 2, weighted Bloch mean = 0,
/// |n| <= 1) are violated beyond 1e-12.
double cost(const AntiparallelPovm& p);

struct OptimizeResult {
    AntiparallelPovm povm;
    double value = 0.0;
    /// False when the restart budget produced no reproducible optimum; the
    /// best candidate found is still returned.
    bool converged = false;
    int restarts = 0;
};

/// Multi-start Nelder-Mead over (weights, Bloch vectors); per-outcome
/// guesses and the spin-3/2 guess are minimized in closed form at every
/// cost evaluation. Constraints are enforced by parametrization plus
/// alternating projection. Deterministic for a fixed seed; restart seeds
/// are splitmix-derived from it. Outcomes below weight 1e-8 are pruned
/// from the report, and the result is gauge-fixed by rotating the leading
/// outcome's Bloch vector into the (+X1, X3) plane.
OptimizeResult optimize(int num_outcomes, std::uint64_t seed, double tol);

/// The two-outcome optimum: weights 1, Bloch +-X1, guesses
/// 1/2 +- 1/(4 sqrt 3) (the 0.644338/0.355662 pair), q33 guess 1/2.
AntiparallelPovm reference_optimum();

struct CoefficientEntry {
    std::string block;  // "q00", "q11", "q01", "q10", "q33"
    int moment_index;   // which of I0, I1, I2
    SignedSqrtRational computed;
    SignedSqrtRational printed;
    bool match = false;
};

struct BlockStructureReport {
    std::vector<CoefficientEntry> coefficients;
    bool completeness_ok = false;  // 1_00 + 1_11 + 1_33 equals the identity
    BigRational trace33;           // dimension of the spin-3/2 block
    bool all_match() const;
};

/// Builds the five isotypic operators of the three-qubit decomposition
/// from Clebsch-Gordan data and recomputes, by exact arithmetic, the
/// coefficient of each q-block in the moment functionals I0, I1, I2.
BlockStructureReport block_structure_check();

using Op8 = std::array<std::array<double, 8>, 8>;

/// Double-precision rendering of the five operators (they are real in the
/// computational basis). Used by the measurement simulator.
struct IsotypicOperators {
    Op8 one00, one11, one01, one10, one33;
};
IsotypicOperators isotypic_operators();

}  // namespace relstate::antiparallel
