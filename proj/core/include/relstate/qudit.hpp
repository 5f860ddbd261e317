#pragma once

#include "relstate/parallel.hpp"
#include "relstate/rational.hpp"

namespace relstate::qudit {

/// Moment integrals of the single-copy-vs-single-copy qudit problem: one
/// antisymmetric and one symmetric block.
struct QuditMoments {
    parallel::MomentTriple antisym;
    parallel::MomentTriple sym;
    int d = 2;
};

struct QuditVariance {
    /// Sum-rule-consistent value, sum over the two blocks of
    /// i2 - i1^2/i0. Simplifies to (d-1)(d+2) / (d (d+1)^3).
    BigRational derived;
    /// The closed-form expression printed in the source material, evaluated
    /// literally. Disagrees with `derived` (and with the d=2 ground truth
    /// 2/27); reported side by side, never silently substituted.
    BigRational paper_formula;
};

/// Closed-form moments. The antisymmetric first moment uses the corrected
/// (d-1)/(2d(d+1)), which the trace oracle and the sum rules force; the
/// printed (d-2)/(2d(d+1)) fails both. Requires d >= 2.
QuditMoments qudit_moments(int d);

QuditVariance qudit_variance(int d);

/// Brute-force moments from explicit permutation-built projectors on dense
/// d^2..d^4-dimensional spaces, exact rational arithmetic. Capped at
/// 2 <= d <= 4 (memory guard).
QuditMoments permutation_trace_oracle(int d);

/// Optimal guesses for the two blocks: 1/(d+1) and (d+3)/(d+1)^2.
struct QuditGuesses {
    BigRational antisym;
    BigRational sym;
};
QuditGuesses optimal_guesses(int d);

}  // namespace relstate::qudit
